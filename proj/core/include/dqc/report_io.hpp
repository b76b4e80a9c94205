// report_io.hpp
// Serialization of census results. Big integers are always written as
// decimal strings.

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dqc/census.hpp"
#include "dqc/entanglement.hpp"

namespace dqc {

/// counts.json: {p, n, D, total, zero_norm, unit_norm, irreducible,
/// unentangled_irreducible, maxent_irreducible, unentangled_unit,
/// maxent_unit, enumerated: {...}, verified} plus checks, notes and
/// maxent_ratio. Absent tallies are null.
std::string counts_json(const CountReport& report);
/// A JSON array of counts.json objects.
std::string counts_json(std::span<const CountReport> reports);

std::string census_json(const EntanglementCensus& census);

/// "a/b" (or "a" for integers).
std::string format_rational(const BigRational& q);

/// log10 of a positive decimal integer from its length and leading digits.
double log10_decimal(std::string_view digits);

}  // namespace dqc
