#include "dqc/report_io.hpp"

#include <cmath>

#include <json.hpp>

#include "dqc/error.hpp"

namespace dqc {

namespace {

using nlohmann::ordered_json;

ordered_json big(const std::optional<BigInt>& v) {
  return v ? ordered_json(v->str()) : ordered_json(nullptr);
}

ordered_json report_object(const CountReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["n"] = r.qubits ? ordered_json(*r.qubits) : ordered_json(nullptr);
  j["D"] = r.dim;
  j["total"] = r.total.str();
  j["zero_norm"] = r.zero_norm.str();
  j["unit_norm"] = r.unit_norm.str();
  j["irreducible"] = big(r.irreducible);
  j["unentangled_irreducible"] = big(r.unentangled_irreducible);
  j["maxent_irreducible"] = big(r.maxent_irreducible);
  j["unentangled_unit"] = big(r.unentangled_unit);
  j["maxent_unit"] = big(r.maxent_unit);
  j["maxent_ratio"] =
      r.maxent_ratio ? ordered_json(format_rational(*r.maxent_ratio)) : ordered_json(nullptr);
  ordered_json enumerated = ordered_json::object();
  for (const auto& [k, v] : r.enumerated) enumerated[k] = v.str();
  j["enumerated"] = enumerated;
  ordered_json checks = ordered_json::object();
  for (const auto& [k, v] : r.matches) checks[k] = v;
  j["checks"] = checks;
  j["notes"] = r.notes;
  j["verified"] = r.verified();
  return j;
}

}  // namespace

std::string counts_json(const CountReport& report) { return report_object(report).dump(2) + "\n"; }

std::string counts_json(std::span<const CountReport> reports) {
  ordered_json arr = ordered_json::array();
  for (const CountReport& r : reports) arr.push_back(report_object(r));
  return arr.dump(2) + "\n";
}

std::string census_json(const EntanglementCensus& c) {
  ordered_json j;
  j["p"] = c.p;
  j["n"] = c.qubits;
  j["irreducible"] = c.irreducible.str();
  ordered_json irr = ordered_json::object();
  ordered_json unit = ordered_json::object();
  for (const auto& [e, n] : c.irreducible_by_class) irr[std::string(to_string(e))] = n.str();
  for (const auto& [e, n] : c.unit_by_class) unit[std::string(to_string(e))] = n.str();
  j["irreducible_by_class"] = irr;
  j["unit_by_class"] = unit;
  ordered_json hist = ordered_json::object();
  for (const auto& [v, n] : c.sum_sq_histogram) hist[std::to_string(v)] = n.str();
  j["sum_sq_histogram"] = hist;
  j["all_expectations_zero"] = c.all_expectations_zero.str();
  j["purity_one_entangled"] = c.purity_one_entangled.str();
  const auto ratio = c.maxent_ratio();
  j["maxent_ratio"] = ratio ? ordered_json(format_rational(*ratio)) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string format_rational(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

double log10_decimal(std::string_view digits) {
  if (digits.empty() || digits.front() == '0' || digits.front() == '-') {
    throw Error(ErrorKind::InvalidArgument, "log10 of a non-positive integer");
  }
  const std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  const double mantissa = std::stod(std::string(digits.substr(0, lead)));
  return std::log10(mantissa) + static_cast<double>(digits.size() - lead);
}

}  // namespace dqc
