#pragma once

#include <string>
#include <vector>

#include "potb/catalog.hpp"
#include "potb/effects.hpp"

namespace potb {

enum class ClaimStatus { Pass, Fail, Discrepancy };

const char* claim_status_name(ClaimStatus s);

struct ClaimRow {
    std::string id;
    std::string anchor;
    std::string computed;
    std::string claimed;
    ClaimStatus status = ClaimStatus::Pass;
    std::string note;
};

struct ClaimReport {
    std::vector<ClaimRow> rows;

    bool any_fail() const;
    std::string to_tsv() const;
};

/// Recomputes every documented property of the built-in catalog and reports
/// PASS; FAIL; or DISCREPANCY-DOCUMENTED where the printed source is known
/// to carry slips and the computed truth is reported alongside.
ClaimReport verify_catalog_claims();

/// The 24-block, 96-run plan joining the two six-factor expansions.
Plan n36_union_plan();

/// Parses printed orthogonal classes into pencils, skipping malformed tokens.
std::vector<std::vector<Pencil>> printed_partition_pencils(
    const std::vector<PrintedClass>& classes, int m, const Field& f);

} // namespace potb
