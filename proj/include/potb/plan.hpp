#pragma once

#include <string>
#include <vector>

#include "potb/gf.hpp"

namespace potb {

/// A blocked plan: b blocks of k runs each, runs in F_s^m. Order matters and
/// runs may repeat (replication is counted with multiplicity).
struct Plan {
    Field field;
    int m = 0;
    int b = 0;
    int k = 0;
    std::vector<std::vector<FieldVector>> blocks;

    int runs() const { return b * k; }

    template <typename Fn> // fn(block_index, run)
    void for_each_run(Fn&& fn) const {
        for (int j = 0; j < b; ++j) {
            for (const auto& x : blocks[static_cast<size_t>(j)]) fn(j, x);
        }
    }
};

/// Plan file format v1:
///   s=<int> m=<int> b=<int> k=<int>
///   block: <run> <run> ... <run>     (b lines, k runs each, m digits per run)
/// '#' starts a comment; blank lines are ignored.
Plan parse_plan(const std::string& text);

/// Canonical file text; parse_plan(serialize_plan(p)) reproduces p exactly.
std::string serialize_plan(const Plan& p);

} // namespace potb
