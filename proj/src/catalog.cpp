#include "potb/catalog.hpp"

namespace potb {

namespace {

CatalogEntry make_p() {
    Plan plan = parse_plan("s=3 m=4 b=2 k=4\n"
                           "block: 0000 1110 1201 2011\n"
                           "block: 0212 0121 2102 2220\n");
    CatalogClaims c;
    c.defining_words = {"ABC", "AC^2D^2", "AB^2D", "BC^2D"};
    c.base_classes = {{"A", "B^2C^2", "BD^2", "CD"},
                      {"B", "A^2C^2", "AD", "CD^2"},
                      {"C", "AD^2", "A^2B^2", "BD"},
                      {"D", "AC^2", "A^2B", "B^2C"}};
    c.expanded_classes = {{{"A"}, {"AC"}},
                          {{"B"}, {"BD^2"}},
                          {{"C"}},
                          {{"D"}},
                          {{"BC"}, {"CD^2"}},
                          {{"AD"}, {"CD"}},
                          {{"AB"}, {"AD^2"}},
                          {{"AB^2"}, {"BC^2"}},
                          {{"AC^2"}, {"BD"}}};
    c.expanded_blocks = 18;
    c.claimed_estimable = 16;
    c.claimed_estimable_reliable = false; // the pair class {AC^2,BD} shares a block-bound df
    return CatalogEntry{"P", plan, Subspace::parse(plan.field, 4, "0102;1010"), c};
}

CatalogEntry make_p3() {
    Plan plan = parse_plan("s=3 m=3 b=2 k=4\n"
                           "block: 000 111 120 201\n"
                           "block: 021 012 210 222\n");
    CatalogClaims c;
    c.base_classes = {{"A", "B^2C^2"}, {"B", "A^2C^2"}, {"C", "A^2B^2"}, {"AC^2", "A^2B", "B^2C"}};
    c.expanded_classes = {{{"A"}, {"AC"}},
                          {{"B"}, {"BC"}},
                          {{"C"}, {"B^2C"}},
                          {{"AB"}, {"AC^2"}, {"A^2B"}}};
    c.expanded_blocks = 6;
    c.claimed_estimable = 9;
    c.claimed_estimable_reliable = false; // one df of {B,BC} and of {C,BC^2} is block-bound
    return CatalogEntry{"P3", plan, Subspace::parse(plan.field, 3, "100"), c};
}

CatalogEntry make_p5() {
    Plan plan = parse_plan("s=3 m=5 b=2 k=4\n"
                           "block: 00000 11100 12011 20111\n"
                           "block: 02122 01211 21022 22200\n");
    CatalogClaims c;
    c.defining_words = {"DE^2",   "ABC",    "AC^2D^2", "AC^2E^2",
                        "AB^2D",  "AB^2E",  "BC^2D",   "BC^2E^2"};
    c.defining_words_reliable = false; // BC^2E^2 is non-constant as printed
    c.base_classes = {{"A", "B^2C^2", "BD^2", "CD", "CE", "BE^2"},
                      {"B", "A^2C^2", "AD", "AE", "CD^2", "CE^2"},
                      {"C", "AD^2", "A^2B^2", "AE^2", "BD", "BE"},
                      {"D", "E", "D^2E^2", "AC^2", "A^2B", "B^2C"}};
    c.expanded_classes = {{{"A"}, {"AC"}, {"CE^2"}},
                          {{"B"}, {"BD^2"}},
                          {{"C"}, {"E"}, {"AE^2"}},
                          {{"D"}},
                          {{"BC"}, {"BE^2"}, {"CD^2"}},
                          {{"CD"}, {"AD"}},
                          {{"AD^2"}, {"AB"}, {"DE"}},
                          {{"BE"}, {"BC^2"}, {"AB^2"}},
                          {{"CE"}, {"AE"}},
                          {{"BD"}, {"AC^2"}}};
    c.expanded_confounded = {"DE^2"};
    c.expanded_blocks = 18;
    c.claimed_estimable = 24;
    c.claimed_estimable_reliable = false; // the pair classes {CE,AE} and {BD,AC^2} each share a block-bound df
    c.claimed_not_estimable = {"DE^2"};
    return CatalogEntry{"P5", plan, Subspace::parse(plan.field, 5, "01020;10102"), c};
}

CatalogEntry make_p6() {
    Plan plan = parse_plan("s=3 m=6 b=2 k=4\n"
                           "block: 000000 111001 120111 201112\n"
                           "block: 021220 012110 210222 222002\n");
    CatalogClaims c;
    c.defining_words = {"DE^2",  "AF^2",   "ABC",     "AB^2D", "AB^2E",
                        "AC^2D^2", "AC^2E^2", "BC^2D", "BC^2E", "BCF",
                        "B^2DF", "B^2EF", "C^2E^2F", "C^2D^2F"};
    c.defining_words_reliable = false;
    c.base_classes = {{"A", "A^2F^2", "B^2C^2", "BD^2", "BE^2", "CD", "CE", "F"},
                      {"B", "A^2C^2", "AD", "AE", "CD^2", "CE^2", "C^2F^2", "DF", "EF"},
                      {"C", "A^2B^2", "AD^2", "AE^2", "BD", "BE", "B^2F^2", "D^2F", "E^F"},
                      {"D", "E", "A^2B", "AC^2", "B^2C", "BF^2", "C^2F", "D^2E^2"}};
    c.base_classes_reliable = false; // contains the malformed token "E^F"
    c.expanded_classes = {{{"A"}, {"B"}, {"AD"}},
                          {{"C"}, {"E"}},
                          {{"D"}, {"AB^2"}, {"BD"}},
                          {{"F"}, {"CE"}, {"CF"}, {"EF"}},
                          {{"BD^2"}, {"CF^2"}},
                          {{"CD^2"}, {"BE^2"}},
                          {{"BE"}, {"BF^2"}, {"D^2E^2"}},
                          {{"AD^2", "EF^2"}, {"AB^2", "CF^2"}},
                          {{"AE^2"}, {"BC^2"}, {"AC^2", "BF^2"}},
                          {{"CD"}, {"AC"}, {"AE", "DF"}, {"AF", "BC"}}};
    c.expanded_classes_reliable = false; // repeated members across classes as printed
    c.expanded_confounded = {"DE^2", "AF^2"};
    c.expanded_blocks = 18;
    c.claimed_estimable = 27;
    c.claimed_estimable_reliable = false; // counts alias pairs as single effects
    return CatalogEntry{"P6", plan, Subspace::parse(plan.field, 6, "110100;001011"), c};
}

CatalogEntry make_p26() {
    Plan plan = parse_plan("s=3 m=6 b=2 k=4\n"
                           "block: 000000 111101 121210 202011\n"
                           "block: 020221 010112 212120 222202\n");
    CatalogClaims c;
    c.defining_words = {"AC^2", "BD^2"};
    c.base_classes = {{"A", "C", "AC", "BE^2", "B^2F^2", "DE^2", "D^2F^2", "EF"},
                      {"B", "D", "AE", "A^2F^2", "BD", "CE", "C^2F^2", "E^2F"},
                      {"F", "A^2B^2", "A^2D^2", "AE^2", "B^2C^2", "BE", "C^2D^2", "CE^2", "DE"},
                      {"E", "A^2B", "A^2D", "AF^2", "BC^2", "B^2F", "C^2D", "CF^2", "D^2F"}};
    c.base_classes_reliable = false;
    c.expanded_classes = {{{"C", "DE^2", "BF"}, {"B", "AE", "CF"}},
                          {{"A", "AC", "BE^2"}, {"D", "BD", "EF^2"}, {"EF", "DF"}, {"AF", "CE"}},
                          {{"F", "DE", "BC"}, {"AD^2", "BC^2", "BF^2", "CF^2"}},
                          {{"E", "AB^2", "DF^2"},
                           {"AD", "CE^2"},
                           {"CD^2", "AF^2"},
                           {"AB", "AE^2", "BE", "CD"}}};
    c.expanded_classes_reliable = false;
    c.expanded_blocks = 6;
    return CatalogEntry{"P26", plan, Subspace::parse(plan.field, 6, "100120"), c};
}

} // namespace

CatalogEntry catalog(const std::string& name) {
    if (name == "P") return make_p();
    if (name == "P3") return make_p3();
    if (name == "P5") return make_p5();
    if (name == "P6") return make_p6();
    if (name == "P26") return make_p26();
    fail(Errc::UnknownName, "no catalog plan named \"" + name + "\"");
}

std::vector<std::string> catalog_names() { return {"P", "P3", "P5", "P6", "P26"}; }

} // namespace potb
