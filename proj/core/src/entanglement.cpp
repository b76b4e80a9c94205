#include "dqc/entanglement.hpp"

#include <algorithm>

#include "dqc/error.hpp"
#include "dqc/hopf_geometry.hpp"

namespace dqc {

bool PauliExpectations::all_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const std::array<Fp, 3>& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
  });
}

std::vector<std::array<Fp, 3>> pauli_kernel(const ComplexField& field, std::span<const GFc> amps,
                                            unsigned qubits) {
  const auto& F = field.base();
  const GFc i_unit = field.i();
  const GFc minus_i = field.neg(i_unit);
  std::vector<std::array<Fp, 3>> out(qubits);
  for (unsigned j = 0; j < qubits; ++j) {
    const std::size_t mask = std::size_t{1} << (qubits - 1 - j);
    GFc sx = field.zero();
    GFc sy = field.zero();
    Fp sz = F.zero();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      const GFc bra = field.conj(amps[idx]);
      const GFc flipped = amps[idx ^ mask];
      const bool high = (idx & mask) != 0;
      // (sigma_x psi)_idx = psi_{idx^m}; (sigma_y psi)_idx = +-i psi_{idx^m}.
      sx = field.add(sx, field.mul(bra, flipped));
      sy = field.add(sy, field.mul(bra, field.mul(high ? i_unit : minus_i, flipped)));
      sz = high ? F.sub(sz, field.fnorm(amps[idx])) : F.add(sz, field.fnorm(amps[idx]));
    }
    if (!sx.im.is_zero() || !sy.im.is_zero()) {
      throw Error(ErrorKind::NonRealExpectation, "Pauli expectation is not Frobenius-fixed");
    }
    out[j] = {sx.re, sy.re, sz};
  }
  return out;
}

namespace {

void require_unit(const StateVector& psi) {
  if (vnorm(psi) != psi.field().base().one()) {
    throw Error(ErrorKind::NotUnitNorm, "state does not have unit field norm");
  }
}

Fp squared_length(const ComplexifiablePrime& F, const std::array<Fp, 3>& v) {
  return F.add(F.add(F.square(v[0]), F.square(v[1])), F.square(v[2]));
}

}  // namespace

PauliExpectations pauli_expectations(const StateVector& psi) {
  require_unit(psi);
  return PauliExpectations(pauli_kernel(psi.field(), psi.amps(), psi.qubits()));
}

PurityValue purity(const ComplexifiablePrime& F, const PauliExpectations& ex) {
  PurityValue pv;
  pv.qubits = ex.qubits();
  pv.sum_sq = F.zero();
  for (unsigned j = 0; j < ex.qubits(); ++j) pv.sum_sq = F.add(pv.sum_sq, squared_length(F, ex.bloch(j)));
  const Fp n = F.make(pv.qubits);
  if (!n.is_zero()) pv.reduced = F.div(pv.sum_sq, n);
  return pv;
}

PurityValue purity(const StateVector& psi) {
  return purity(psi.field().base(), pauli_expectations(psi));
}

std::string QubitMask::to_string() const {
  std::string s(qubits_, '0');
  for (unsigned j = 0; j < qubits_; ++j)
    if (test(j)) s[j] = '1';
  return s;
}

bool qubit_factors_out(const ComplexField& field, std::span<const GFc> amps, unsigned qubits,
                       unsigned qubit) {
  // Columns (a_lo, a_hi) indexed by the other qubits; rank <= 1 iff every
  // column is proportional to the first nonzero one.
  const std::size_t mask = std::size_t{1} << (qubits - 1 - qubit);
  bool have_pivot = false;
  GFc pivot_lo;
  GFc pivot_hi;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & mask) continue;
    const GFc lo = amps[idx];
    const GFc hi = amps[idx | mask];
    if (!have_pivot) {
      if (lo.is_zero() && hi.is_zero()) continue;
      pivot_lo = lo;
      pivot_hi = hi;
      have_pivot = true;
      continue;
    }
    if (field.mul(pivot_lo, hi) != field.mul(pivot_hi, lo)) return false;
  }
  return true;
}

QubitMask separable_qubits(const StateVector& psi) {
  if (psi.is_zero()) throw Error(ErrorKind::ZeroVector, "zero vector has no factorization");
  std::uint32_t bits = 0;
  for (unsigned j = 0; j < psi.qubits(); ++j)
    if (qubit_factors_out(psi.field(), psi.amps(), psi.qubits(), j)) bits |= 1u << j;
  return QubitMask(bits, psi.qubits());
}

std::string_view to_string(Entanglement e) {
  switch (e) {
    case Entanglement::Unentangled: return "Unentangled";
    case Entanglement::Partial: return "Partial";
    case Entanglement::Maximal: return "Maximal";
  }
  return "Unknown";
}

EntanglementClass classify_amplitudes(const ComplexField& field, std::span<const GFc> amps,
                                      unsigned qubits) {
  const auto& F = field.base();
  const PauliExpectations ex(pauli_kernel(field, amps, qubits));
  EntanglementClass out;
  out.purity = purity(F, ex);
  out.all_expectations_zero = ex.all_zero();

  std::uint32_t bits = 0;
  for (unsigned j = 0; j < qubits; ++j)
    if (qubit_factors_out(field, amps, qubits, j)) bits |= 1u << j;
  out.separable = QubitMask(bits, qubits);

  bool every_length_zero = true;
  for (unsigned j = 0; j < qubits; ++j) every_length_zero &= squared_length(F, ex.bloch(j)).is_zero();

  if (out.separable.full()) {
    out.kind = Entanglement::Unentangled;
  } else if (every_length_zero) {
    out.kind = Entanglement::Maximal;
  } else {
    out.kind = Entanglement::Partial;
  }
  return out;
}

EntanglementClass classify(const StateVector& psi) {
  require_unit(psi);
  return classify_amplitudes(psi.field(), psi.amps(), psi.qubits());
}

BigInt EntanglementCensus::count(Entanglement e) const {
  const auto it = irreducible_by_class.find(e);
  return it == irreducible_by_class.end() ? BigInt(0) : it->second;
}

std::optional<BigRational> EntanglementCensus::maxent_ratio() const {
  const BigInt unent = count(Entanglement::Unentangled);
  if (unent == 0) return std::nullopt;
  return BigRational(count(Entanglement::Maximal), unent);
}

namespace {

struct CensusWorker {
  explicit CensusWorker(ComplexField f) : field(std::move(f)) {}

  ComplexField field;
  unsigned qubits = 0;
  std::shared_ptr<const CanonicalFilter> filter;

  std::uint64_t irreducible = 0;
  std::array<std::uint64_t, 3> by_class{};
  std::map<std::uint32_t, std::uint64_t> sum_sq;
  std::uint64_t all_zero = 0;
  std::uint64_t purity_one_entangled = 0;
  std::uint64_t product_purity_violations = 0;
  std::uint64_t maximal_with_separable = 0;

  void operator()(std::span<const GFc> amps) {
    if (!filter->is_canonical(amps)) return;
    ++irreducible;
    const EntanglementClass c = classify_amplitudes(field, amps, qubits);
    ++by_class[static_cast<int>(c.kind)];
    ++sum_sq[c.purity.sum_sq.value()];
    all_zero += c.all_expectations_zero ? 1 : 0;
    const bool purity_one = c.purity.reduced && *c.purity.reduced == Fp{1};
    if (c.kind == Entanglement::Unentangled) {
      product_purity_violations += c.purity.sum_sq == field.base().make(qubits) ? 0 : 1;
    } else if (purity_one) {
      ++purity_one_entangled;
    }
    if (c.kind == Entanglement::Maximal && !c.separable.none()) ++maximal_with_separable;
  }
};

}  // namespace

EntanglementCensus entanglement_census(const ComplexField& field, unsigned qubits,
                                       const EnumerationOptions& options) {
  if (qubits < 1 || qubits > 16) throw Error(ErrorKind::InvalidArgument, "qubits must be in 1..16");
  const NormClassScan scan(field, std::uint64_t{1} << qubits, field.base().one(), options);
  CensusWorker proto{field};
  proto.qubits = qubits;
  proto.filter = std::make_shared<const CanonicalFilter>(field);

  EntanglementCensus census;
  census.p = field.p();
  census.qubits = qubits;
  for (const Entanglement e : {Entanglement::Unentangled, Entanglement::Partial, Entanglement::Maximal}) {
    census.irreducible_by_class[e] = 0;
  }
  for (const CensusWorker& w : scan.run(proto)) {
    census.irreducible += w.irreducible;
    for (int k = 0; k < 3; ++k) census.irreducible_by_class[static_cast<Entanglement>(k)] += w.by_class[k];
    for (const auto& [value, n] : w.sum_sq) census.sum_sq_histogram[value] += n;
    census.all_expectations_zero += w.all_zero;
    census.purity_one_entangled += w.purity_one_entangled;
    census.product_purity_violations += w.product_purity_violations;
    census.maximal_with_separable_qubit += w.maximal_with_separable;
  }
  for (const auto& [e, n] : census.irreducible_by_class) census.unit_by_class[e] = n * (field.p() + 1);
  return census;
}

}  // namespace dqc
