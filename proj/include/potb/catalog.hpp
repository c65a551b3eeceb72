#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potb/plan.hpp"

namespace potb {

/// One orthogonal class as printed in the source catalog: groups of effect
/// names; members of a group of size >= 2 are claimed mutually aliased.
using PrintedClass = std::vector<std::vector<std::string>>;

/// Documented properties of a catalog plan. These are data, not assertions:
/// verify-paper recomputes each one and reports PASS / FAIL / discrepancy.
struct CatalogClaims {
    std::vector<std::string> defining_words;       // claimed constant on the base plan
    bool defining_words_reliable = true;           // false: typo-prone, mismatches documented
    std::vector<std::vector<std::string>> base_classes; // printed alias classes of the base
    bool base_classes_reliable = true;
    std::vector<PrintedClass> expanded_classes;    // printed orthogonal classes of V(plan)
    bool expanded_classes_reliable = true;
    std::vector<std::string> expanded_confounded;  // effects confounded with blocks in V(plan)
    int expanded_blocks = 0;
    int claimed_estimable = -1;                    // fully estimable pencils in V(plan)
    bool claimed_estimable_reliable = true;
    std::vector<std::string> claimed_not_estimable;
};

struct CatalogEntry {
    std::string name;
    Plan plan;
    std::optional<Subspace> expansion; // the documented companion subspace
    CatalogClaims claims;
};

/// Built-in plans: "P" (4 factors), "P3", "P5", "P6", "P26".
CatalogEntry catalog(const std::string& name); // throws UnknownName

std::vector<std::string> catalog_names();

} // namespace potb
