#include "doctest.h"

#include <algorithm>
#include <random>

#include "potb/catalog.hpp"
#include "potb/expansion.hpp"
#include "potb/relations.hpp"
#include "test_util.hpp"

using namespace potb;

namespace {

Pencil eff(const std::string& name, int m) { return effect_parse(name, m, Field(3)); }

// Full factorial 3^2 split into the three cosets of the diagonal line.
Plan coset_blocked_factorial() {
    return parse_plan("s=3 m=2 b=3 k=3\n"
                      "block: 00 11 22\n"
                      "block: 10 21 02\n"
                      "block: 20 01 12\n");
}

Plan full_factorial_one_block(int m) {
    Field f(3);
    int n = 1;
    for (int i = 0; i < m; ++i) n *= 3;
    Plan p{f, m, 1, n, {{}}};
    std::vector<int> coords(static_cast<size_t>(m), 0);
    while (true) {
        p.blocks[0].push_back(FieldVector{f, coords});
        bool more = false;
        for (size_t c = coords.size(); c-- > 0;) {
            if (++coords[c] < 3) {
                more = true;
                break;
            }
            coords[c] = 0;
        }
        if (!more) break;
    }
    return p;
}

std::vector<std::vector<Pencil>> as_pencils(const std::vector<std::vector<std::string>>& names,
                                            int m) {
    std::vector<std::vector<Pencil>> out;
    for (const auto& cls : names) {
        std::vector<Pencil> c;
        for (const auto& n : cls) c.push_back(eff(n, m));
        out.push_back(c);
    }
    return out;
}

} // namespace

TEST_SUITE("relations") {

TEST_CASE("orthogonality through the block factor") {
    Plan p = catalog("P").plan;
    CHECK(otb_check(p, eff("A", 4), eff("C", 4)));
    CHECK_FALSE(otb_check(p, eff("A", 4), eff("B", 4)));
    // All three incidence matrices constant forces OTB.
    Plan cosets = coset_blocked_factorial();
    CHECK(otb_check(cosets, eff("A", 2), eff("B", 2)));
}

TEST_CASE("proportional frequency condition") {
    Plan full = full_factorial_one_block(2);
    CHECK(pfc_check(full, eff("A", 2), eff("B", 2)));
    Plan p = catalog("P").plan;
    CHECK_FALSE(pfc_check(p, eff("A", 4), eff("B", 4)));
    CHECK_FALSE(pfc_check(p, eff("A", 4), eff("B^2C^2", 4)));
}

TEST_CASE("structural aliasing") {
    Plan p = catalog("P").plan;
    CHECK(aliased_check(p, eff("A", 4), eff("B^2C^2", 4)));
    CHECK_FALSE(aliased_check(p, eff("A", 4), eff("B", 4)));
    CHECK(aliased_check(p, eff("D", 4), eff("AC^2", 4)));
}

TEST_CASE("relation to the block factor") {
    Plan p = catalog("P").plan;
    CHECK(block_relation(p, eff("ABC", 4)) == BlockRelation::ConstantOnPlan);
    CHECK(block_relation(p, eff("A", 4)) == BlockRelation::VariesWithinBlocks);
    CatalogEntry p5 = catalog("P5");
    Plan big = expand(p5.plan, *p5.expansion);
    CHECK(block_relation(big, eff("DE^2", 5)) == BlockRelation::ConfoundedWithBlock);
    CHECK(block_relation(p5.plan, eff("DE^2", 5)) == BlockRelation::ConstantOnPlan);
}

TEST_CASE("alias classes of the catalog plans") {
    Field f3(3);
    SUBCASE("four-factor plan: the four published classes") {
        AliasClasses ac = alias_classes(catalog("P").plan, model_mains_and_2fi(4, f3));
        REQUIRE(ac.classes.size() == 4);
        CHECK(ac.constant_on_plan.empty());
        CHECK(ac.confounded_with_block.empty());
        auto expected = as_pencils({{"A", "B^2C^2", "BD^2", "CD"},
                                    {"B", "A^2C^2", "AD", "CD^2"},
                                    {"C", "AD^2", "A^2B^2", "BD"},
                                    {"D", "AC^2", "A^2B", "B^2C"}},
                                   4);
        for (size_t i = 0; i < 4; ++i) {
            std::vector<Pencil> got = ac.classes[i], want = expected[i];
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
    SUBCASE("five-factor plan: DE^2 is set apart as constant") {
        AliasClasses ac = alias_classes(catalog("P5").plan, model_mains_and_2fi(5, f3));
        REQUIRE(ac.classes.size() == 4);
        REQUIRE(ac.constant_on_plan.size() == 1);
        CHECK(ac.constant_on_plan[0] == eff("DE^2", 5));
        std::vector<Pencil> got = ac.classes[1];
        std::vector<Pencil> want = as_pencils({{"B", "A^2C^2", "AD", "AE", "CD^2", "CE^2"}}, 5)[0];
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    SUBCASE("full factorial in one block: all classes singletons") {
        AliasClasses ac = alias_classes(full_factorial_one_block(3), model_mains_and_2fi(3, f3));
        CHECK(ac.classes.size() == 9);
        for (const auto& cls : ac.classes) CHECK(cls.size() == 1);
    }
}

TEST_CASE("relation matrix") {
    Field f3(3);
    Plan p = catalog("P").plan;
    EffectModel model = model_mains_and_2fi(4, f3);
    RelationMatrix rm = relation_matrix(p, model);

    SUBCASE("symmetric access") {
        for (int i = 0; i < model.size(); ++i) {
            for (int j = i + 1; j < model.size(); ++j) {
                CHECK(&rm.at(i, j) == &rm.at(j, i));
            }
        }
    }
    SUBCASE("flags are consistent") {
        for (int i = 0; i < model.size(); ++i) {
            for (int j = i + 1; j < model.size(); ++j) {
                const PairRelation& rel = rm.at(i, j);
                CHECK(rel.nonorthogonal == (!rel.otb && !rel.aliased));
            }
        }
    }
    SUBCASE("class-level orthogonality is the published 4-cycle") {
        AliasClasses ac = alias_classes(p, model);
        REQUIRE(ac.classes.size() == 4);
        auto edge = [&](int ci, int cj) {
            for (const auto& a : ac.classes[static_cast<size_t>(ci)]) {
                for (const auto& b : ac.classes[static_cast<size_t>(cj)]) {
                    if (!otb_check(p, a, b)) return false;
                }
            }
            return true;
        };
        CHECK_FALSE(edge(0, 1));
        CHECK(edge(0, 2));
        CHECK(edge(0, 3));
        CHECK(edge(1, 2));
        CHECK(edge(1, 3));
        CHECK_FALSE(edge(2, 3));
    }
}

TEST_CASE("verify_partition") {
    CatalogEntry p3 = catalog("P3");
    Plan big = expand(p3.plan, *p3.expansion);
    auto classes = as_pencils({{"A", "AC"}, {"B", "BC"}, {"C", "B^2C"}, {"AB", "AC^2", "A^2B"}}, 3);

    SUBCASE("the published orthogonal classes pass") {
        CHECK(verify_partition(big, classes).pass);
    }
    SUBCASE("one-class partition passes vacuously") {
        std::vector<Pencil> all;
        for (const auto& cls : classes) all.insert(all.end(), cls.begin(), cls.end());
        CHECK(verify_partition(big, {all}).pass);
    }
    SUBCASE("coarsening preserves inter-class orthogonality") {
        auto merged = classes;
        merged[0].insert(merged[0].end(), merged[1].begin(), merged[1].end());
        merged.erase(merged.begin() + 1);
        CHECK(verify_partition(big, merged).pass);
    }
    SUBCASE("a deliberately broken partition reports its violating pairs") {
        // A and AC share a class for good reason; splitting them must fail.
        auto broken = as_pencils({{"A"}, {"AC"}}, 3);
        PartitionReport pr = verify_partition(big, broken);
        CHECK_FALSE(pr.pass);
        REQUIRE(pr.violations.size() == 1);
        CHECK(pr.violations[0].a == eff("A", 3));
        CHECK(pr.violations[0].b == eff("AC", 3));
    }
}

TEST_CASE("with a single block OTB coincides with PFC") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int s = std::vector<int>{2, 3, 5}[rng() % 3];
        Plan p = testutil::random_plan(rng, s, 4, 1, 6);
        Pencil a = pencil_canonical(testutil::random_nonzero_vector(rng, p.field, p.m));
        Pencil b = pencil_canonical(testutil::random_nonzero_vector(rng, p.field, p.m));
        CHECK(otb_check(p, a, b) == pfc_check(p, a, b));
    }
}

TEST_CASE("PFC flag is suppressed for effects constant on the plan") {
    Plan p = catalog("P").plan;
    PairRelation rel = pair_relation(p, eff("ABC", 4), eff("A", 4));
    CHECK_FALSE(rel.pfc_applicable);
    CHECK(rel.flags_string().find("PFC") == std::string::npos);
}

TEST_CASE("pair relations carry their incidence evidence") {
    Plan p = catalog("P").plan;
    PairRelation rel = pair_relation(p, eff("A", 4), eff("B", 4));
    CHECK(rel.n_ab == incidence_matrix(p, eff("A", 4), eff("B", 4)));
    CHECK(rel.l_a == effect_block_matrix(p, eff("A", 4)));
    CHECK(rel.l_b == effect_block_matrix(p, eff("B", 4)));
    CHECK(rel.n_ab.to_string() == "[[1,1,1],[0,1,1],[1,1,1]]");
    CHECK(rel.l_a.to_string() == "[[1,2],[2,0],[1,2]]");
}

} // TEST_SUITE
