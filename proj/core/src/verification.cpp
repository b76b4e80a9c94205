#include "dqc/verification.hpp"

#include <numeric>

#include <fmt/format.h>

#include "dqc/hopf_geometry.hpp"

namespace dqc {

std::vector<GFc> sample_unit_state(const ComplexField& field, std::uint64_t dim,
                                   std::mt19937_64& rng) {
  const auto& F = field.base();
  std::uniform_int_distribution<std::uint32_t> residue(0, field.p() - 1);
  std::vector<GFc> amps(dim);
  Fp partial = F.zero();
  for (std::uint64_t k = 0; k + 1 < dim; ++k) {
    amps[k] = {Fp{residue(rng)}, Fp{residue(rng)}};
    partial = F.add(partial, field.fnorm(amps[k]));
  }
  const std::vector<GFc> fiber = norm_fiber(field, F.sub(F.one(), partial));
  std::uniform_int_distribution<std::size_t> pick(0, fiber.size() - 1);
  amps[dim - 1] = fiber[pick(rng)];
  return amps;
}

namespace {

void record(CountReport& r, const std::string& field, const BigInt& enumerated,
            const std::optional<BigInt>& closed) {
  r.enumerated[field] = enumerated;
  if (closed) r.matches["enumerated." + field] = enumerated == *closed;
}

bool spot_check(const ComplexField& field, unsigned qubits, const PhaseGroup& group,
                const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (unsigned t = 0; t < options.spot_checks; ++t) {
    const StateVector psi(field, sample_unit_state(field, std::uint64_t{1} << qubits, rng));
    const StateVector moved = psi.scaled(group.elements[pick(rng)]);
    const EntanglementClass a = classify(psi);
    const EntanglementClass b = classify(moved);
    if (a.kind != b.kind || a.separable != b.separable || a.purity.sum_sq != b.purity.sum_sq) {
      return false;
    }
    if (fingerprint(psi) != fingerprint(moved)) return false;
    const StateVector rep = canonical_rep(psi);
    if (!(canonical_rep(moved) == rep) || !(canonical_rep(rep) == rep)) return false;
    if (a.kind == Entanglement::Unentangled && a.purity.reduced && *a.purity.reduced != Fp{1}) {
      return false;
    }
  }
  return true;
}

}  // namespace

CountReport run_verification(const ComplexifiablePrime& prime, unsigned qubits,
                             const VerifyOptions& options) {
  CountReport r = closed_form_qubits(prime, qubits);
  const ComplexField field(prime);
  const std::uint64_t dim = r.dim;

  try {
    const std::vector<BigInt> hist = full_scan_norm_histogram(field, dim, options.enumeration);
    const BigInt total = std::accumulate(hist.begin(), hist.end(), BigInt(0));
    record(r, "total", total, r.total);
    r.matches["full_scan.zero_norm"] = hist[0] == r.zero_norm;
    r.matches["full_scan.unit_norm"] = hist[1] == r.unit_norm;
    r.matches["full_scan.uniform_fibers"] =
        std::all_of(hist.begin() + 1, hist.end(), [&](const BigInt& h) { return h == hist[1]; });
  } catch (const BudgetExceeded& e) {
    r.notes.push_back(fmt::format("full scan skipped: {}", e.what()));
  }

  try {
    record(r, "zero_norm", enumerate_norm_class(field, dim, prime.zero(), options.enumeration),
           r.zero_norm);
    record(r, "unit_norm", enumerate_norm_class(field, dim, prime.one(), options.enumeration),
           r.unit_norm);

    const EntanglementCensus census = entanglement_census(field, qubits, options.enumeration);
    record(r, "irreducible", census.irreducible, r.irreducible);
    record(r, "unentangled_irreducible", census.count(Entanglement::Unentangled),
           r.unentangled_irreducible);
    record(r, "unentangled_unit", census.unit_by_class.at(Entanglement::Unentangled),
           r.unentangled_unit);
    if (qubits >= 2) {
      record(r, "maxent_irreducible", census.count(Entanglement::Maximal), r.maxent_irreducible);
      record(r, "maxent_unit", census.unit_by_class.at(Entanglement::Maximal), r.maxent_unit);
      const auto ratio = census.maxent_ratio();
      r.matches["enumerated.maxent_ratio"] = ratio && r.maxent_ratio && *ratio == *r.maxent_ratio;
    }
    r.enumerated["partial_irreducible"] = census.count(Entanglement::Partial);
    r.enumerated["purity_one_entangled"] = census.purity_one_entangled;
    r.matches["census.product_purity_one"] = census.product_purity_violations == 0;
    r.matches["census.maximal_not_separable"] = census.maximal_with_separable_qubit == 0;
    if (census.purity_one_entangled != 0) {
      r.notes.push_back(fmt::format("{} entangled irreducible states have reduced purity 1",
                                    census.purity_one_entangled.str()));
    }
  } catch (const BudgetExceeded& e) {
    r.notes.push_back(fmt::format("BudgetExceeded: {}; closed forms only", e.what()));
  }

  if (options.spot_checks > 0) {
    r.matches["spot_checks"] = spot_check(field, qubits, phase_group(field), options);
  }
  return r;
}

CountReport verify(const ComplexifiablePrime& prime, unsigned qubits, const VerifyOptions& options) {
  CountReport r = run_verification(prime, qubits, options);
  if (!r.verified()) {
    std::string field = r.first_mismatch();
    throw VerificationFailed(std::move(field), std::move(r));
  }
  return r;
}

}  // namespace dqc
