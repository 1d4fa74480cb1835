#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hrpairs/shapes.hpp"

namespace hrp {

/// Flat pair record, every numeric field in exact "num/den" text:
/// {triangle: [a,b,c], rhombus_side, angle_param, sin_theta, cos_theta,
///  perimeter, area} plus "heron" and "provenance".
nlohmann::json pair_record(const Pair& pair);

/// Optional decimal annex, clearly non-authoritative.
void add_decimal_annex(nlohmann::json& record, const Pair& pair);

/// Rebuilds the Pair from a record, enforcing all shape invariants.
/// Field-level problems (missing keys, malformed rationals) throw
/// nlohmann::json::exception or std::invalid_argument.
Pair pair_from_record(const nlohmann::json& record);

/// Re-checks one record; returns the name of the first violated invariant
/// (e.g. "area equality"), or nullopt when the record is sound. Throws on
/// parse-level problems, mirroring pair_from_record.
std::optional<std::string> verify_record(const nlohmann::json& record);

/// CSV export, one pair per row. Witness columns are filled when present in
/// the record, left empty otherwise.
std::string csv_header(bool decimal);
std::string csv_row(const nlohmann::json& record, bool decimal);

std::string provenance_str(const Provenance& provenance);

}  // namespace hrp
