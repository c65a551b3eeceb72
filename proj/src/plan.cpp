#include "potb/plan.hpp"

#include <sstream>

namespace potb {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // Trim.
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_kv(const std::string& tok, const std::string& key) {
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
        tok[key.size()] != '=') {
        fail(Errc::BadHeader, "expected " + key + "=<int>, got \"" + tok + "\"");
    }
    try {
        size_t used = 0;
        int v = std::stoi(tok.substr(key.size() + 1), &used);
        if (used != tok.size() - key.size() - 1) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(Errc::BadHeader, "bad integer in \"" + tok + "\"");
    }
}

} // namespace

Plan parse_plan(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) fail(Errc::BadHeader, "empty plan file");

    auto header = split_ws(lines[0]);
    if (header.size() != 4) {
        fail(Errc::BadHeader, "header must be \"s=<int> m=<int> b=<int> k=<int>\"");
    }
    int s = parse_kv(header[0], "s");
    int m = parse_kv(header[1], "m");
    int b = parse_kv(header[2], "b");
    int k = parse_kv(header[3], "k");
    if (m < 1 || b < 1 || k < 1) fail(Errc::BadHeader, "m, b, k must all be >= 1");

    Plan p{Field(s), m, b, k, {}};
    if (static_cast<int>(lines.size()) - 1 != b) {
        fail(Errc::BlockSizeMismatch, "expected " + std::to_string(b) + " block lines, got " +
                                          std::to_string(lines.size() - 1));
    }
    for (int j = 0; j < b; ++j) {
        auto toks = split_ws(lines[static_cast<size_t>(j) + 1]);
        if (toks.empty() || toks[0] != "block:") {
            fail(Errc::BlockSizeMismatch, "line " + std::to_string(j + 2) +
                                              " must start with \"block:\"");
        }
        if (static_cast<int>(toks.size()) - 1 != k) {
            fail(Errc::BlockSizeMismatch, "block " + std::to_string(j + 1) + " has " +
                                              std::to_string(toks.size() - 1) + " runs, expected " +
                                              std::to_string(k));
        }
        std::vector<FieldVector> block;
        block.reserve(static_cast<size_t>(k));
        for (int r = 1; r <= k; ++r) {
            const std::string& tok = toks[static_cast<size_t>(r)];
            if (static_cast<int>(tok.size()) != m) {
                fail(Errc::RunLengthMismatch, "run \"" + tok + "\" has " +
                                                  std::to_string(tok.size()) +
                                                  " symbols, expected " + std::to_string(m));
            }
            block.push_back(FieldVector::from_digits(p.field, tok));
        }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

std::string serialize_plan(const Plan& p) {
    std::string out = "s=" + std::to_string(p.field.order()) + " m=" + std::to_string(p.m) +
                      " b=" + std::to_string(p.b) + " k=" + std::to_string(p.k) + "\n";
    for (const auto& block : p.blocks) {
        out += "block:";
        for (const auto& run : block) {
            out.push_back(' ');
            out += run.digits();
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace potb
