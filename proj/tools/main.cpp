// potb: construct, expand, and check blocked fractional factorial plans for
// symmetric s-level experiments, with orthogonality judged through the block
// factor. Includes a built-in catalog of published three-level plans and a
// verifier that recomputes their documented properties.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "potb/catalog.hpp"
#include "potb/expansion.hpp"
#include "potb/linmodel.hpp"
#include "potb/relations.hpp"
#include "potb/search.hpp"
#include "potb/verify.hpp"

namespace {

using namespace potb;

// A plan argument is a file path, or a catalog name when no such file exists.
Plan load_plan(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_plan(buf.str());
    }
    for (const auto& name : catalog_names()) {
        if (name == arg) return catalog(arg).plan;
    }
    fail(Errc::UnknownName, "no file or catalog plan named \"" + arg + "\"");
}

EffectModel pick_model(const Plan& plan, const std::string& name) {
    if (name == "mains") return model_mains(plan.m, plan.field);
    if (name == "mains+2fi") return model_mains_and_2fi(plan.m, plan.field);
    fail(Errc::UnknownName, "model must be mains or mains+2fi");
}

int cmd_expand(const std::string& plan_arg, const std::string& subspace,
               const std::string& out_file) {
    Plan plan = load_plan(plan_arg);
    Subspace v = Subspace::parse(plan.field, plan.m, subspace);
    Plan big = expand(plan, v);
    std::string text = serialize_plan(big);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        out << text;
    }
    return 0;
}

int cmd_check(const std::string& plan_arg, const std::string& ea, const std::string& eb) {
    Plan plan = load_plan(plan_arg);
    Pencil a = effect_parse(ea, plan.m, plan.field);
    Pencil b = effect_parse(eb, plan.m, plan.field);
    PairRelation rel = pair_relation(plan, a, b);
    std::cout << ea << "\t" << eb << "\t" << rel.flags_string() << "\n";
    return 0;
}

int cmd_report(const std::string& plan_arg, const std::string& model_name) {
    Plan plan = load_plan(plan_arg);
    EffectModel model = pick_model(plan, model_name);
    std::cout << "# plan s=" << plan.field.order() << " m=" << plan.m << " b=" << plan.b
              << " k=" << plan.k << " n=" << plan.runs() << "\n";
    RelationMatrix rm = relation_matrix(plan, model);
    std::cout << rm.to_tsv();
    EstimabilityReport est = estimable_pencils(plan, model);
    std::cout << est.to_tsv();
    return 0;
}

int cmd_search(const std::string& plan_arg, int t, int limit, const std::string& model_name) {
    Plan plan = load_plan(plan_arg);
    if (t > plan.m) fail(Errc::DimensionMismatch, "t exceeds the number of factors");
    EffectModel model = pick_model(plan, model_name);
    auto ranked = search_best(plan, t, model, limit);
    std::cout << "# rank\tsubspace\tblocks\testimable\tpartial\tconfounded\n";
    for (size_t i = 0; i < ranked.size(); ++i) {
        const auto& sc = ranked[i];
        std::cout << (i + 1) << "\t" << sc.V.to_string() << "\t" << sc.n_blocks << "\t"
                  << sc.n_estimable << "\t" << sc.n_partial << "\t" << sc.n_confounded_block
                  << "\n";
    }
    return 0;
}

int cmd_verify_paper() {
    ClaimReport report = verify_catalog_claims();
    std::cout << report.to_tsv();
    int fails = 0, discrepancies = 0;
    for (const auto& r : report.rows) {
        if (r.status == ClaimStatus::Fail) ++fails;
        if (r.status == ClaimStatus::Discrepancy) ++discrepancies;
    }
    std::cout << "# summary\tclaims=" << report.rows.size() << "\tfail=" << fails
              << "\tdiscrepancy-documented=" << discrepancies << "\n";
    return report.any_fail() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocked fractional factorial plans, orthogonality through the block factor"};
    app.require_subcommand(1);

    std::string plan_arg, subspace, out_file, model_name = "mains+2fi";
    std::string effect_a, effect_b;
    int t = 1, limit = 10;

    auto* expand_cmd = app.add_subcommand("expand", "expand a plan along a subspace");
    expand_cmd->add_option("--plan", plan_arg, "plan file or catalog name")->required();
    expand_cmd->add_option("--subspace", subspace, "basis vectors, e.g. 0102;1010")->required();
    expand_cmd->add_option("--out", out_file, "output file (default: stdout)");

    auto* check_cmd = app.add_subcommand("check", "relation between two effects");
    check_cmd->add_option("--plan", plan_arg, "plan file or catalog name")->required();
    check_cmd->add_option("effect_a", effect_a, "first effect, e.g. A")->required();
    check_cmd->add_option("effect_b", effect_b, "second effect, e.g. B^2C^2")->required();

    auto* report_cmd = app.add_subcommand("report", "full relation and estimability report");
    report_cmd->add_option("--plan", plan_arg, "plan file or catalog name")->required();
    report_cmd->add_option("--model", model_name, "mains or mains+2fi");

    auto* search_cmd = app.add_subcommand("search", "rank expansion subspaces");
    search_cmd->add_option("--plan", plan_arg, "plan file or catalog name")->required();
    search_cmd->add_option("--t", t, "subspace dimension")->required();
    search_cmd->add_option("--limit", limit, "rows to print");
    search_cmd->add_option("--model", model_name, "mains or mains+2fi");

    app.add_subcommand("verify-paper", "recompute every documented catalog property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(plan_arg, subspace, out_file);
        if (check_cmd->parsed()) return cmd_check(plan_arg, effect_a, effect_b);
        if (report_cmd->parsed()) return cmd_report(plan_arg, model_name);
        if (search_cmd->parsed()) return cmd_search(plan_arg, t, limit, model_name);
        return cmd_verify_paper();
    } catch (const potb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
