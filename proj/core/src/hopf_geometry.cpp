#include "dqc/hopf_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "dqc/error.hpp"

namespace dqc {

namespace {

void require_unit(const StateVector& psi) {
  if (vnorm(psi) != psi.field().base().one()) {
    throw Error(ErrorKind::NotUnitNorm, "state does not have unit field norm");
  }
}

std::size_t first_nonzero(std::span<const GFc> amps) {
  for (std::size_t k = 0; k < amps.size(); ++k)
    if (!amps[k].is_zero()) return k;
  return amps.size();
}

constexpr std::uint32_t kFiberMinTableCap = 1u << 20;

void embed(const ComplexifiablePrime& F, BlochPoint& pt) {
  const double cx = static_cast<double>(F.centered(pt.x));
  const double cy = static_cast<double>(F.centered(pt.y));
  const double cz = static_cast<double>(F.centered(pt.z));
  const double len = std::sqrt(cx * cx + cy * cy + cz * cz);
  pt.degenerate = len == 0.0;
  if (pt.degenerate) return;
  pt.ex = cx / len;
  pt.ey = cy / len;
  pt.ez = cz / len;
}

}  // namespace

BlochPoint hopf_map_1q(const StateVector& psi) {
  if (psi.qubits() != 1) throw Error(ErrorKind::DimensionMismatch, "Hopf map needs one qubit");
  require_unit(psi);
  const ComplexField& f = psi.field();
  const auto& F = f.base();
  const GFc w = f.mul(psi[0], f.conj(psi[1]));
  BlochPoint pt;
  pt.x = F.add(w.re, w.re);
  pt.y = F.add(w.im, w.im);
  pt.z = F.sub(f.fnorm(psi[0]), f.fnorm(psi[1]));
  embed(F, pt);
  return pt;
}

std::vector<StateVector> phase_class(const StateVector& psi, const PhaseGroup& group) {
  require_unit(psi);
  std::vector<StateVector> out;
  out.reserve(group.size());
  for (const GFc& u : group.elements) out.push_back(psi.scaled(u));
  return out;
}

std::vector<StateVector> phase_class(const StateVector& psi) {
  return phase_class(psi, phase_group(psi.field()));
}

StateVector canonical_rep(const StateVector& psi) {
  require_unit(psi);
  const ComplexField& f = psi.field();
  const GFc lead = psi[first_nonzero(psi.amps())];
  // u = min / lead has norm 1 and sends lead to the fiber minimum.
  const GFc u = f.div(fiber_min(f, f.fnorm(lead)), lead);
  return psi.scaled(u);
}

CanonicalFilter::CanonicalFilter(const ComplexField& field) : field_(field) {
  if (field.p() > kFiberMinTableCap) return;
  fiber_min_.resize(field.p());
  for (std::uint32_t c = 1; c < field.p(); ++c) fiber_min_[c] = fiber_min(field, Fp{c});
}

GFc CanonicalFilter::min_of_norm(Fp c) const {
  if (c.is_zero()) return field_.zero();
  return fiber_min_.empty() ? fiber_min(field_, c) : fiber_min_[c.value()];
}

bool CanonicalFilter::is_canonical(std::span<const GFc> amps) const {
  const std::size_t k = first_nonzero(amps);
  if (k == amps.size()) return false;
  return amps[k] == min_of_norm(field_.fnorm(amps[k]));
}

Fingerprint fingerprint(const StateVector& psi) {
  const ComplexField& f = psi.field();
  const std::size_t d = psi.dim();
  Fingerprint fp;
  fp.entries.reserve(d * (d + 1) / 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) fp.entries.push_back(f.mul(psi[i], f.conj(psi[j])));
  return fp;
}

std::vector<BlochPoint> bloch_export(const ComplexifiablePrime& prime) {
  const ComplexField f(prime);
  const auto& F = f.base();
  const Fp one = F.one();
  std::vector<BlochPoint> points;
  points.reserve(std::size_t{prime.p()} * (prime.p() - 1));

  auto emit = [&](GFc a0, GFc a1) {
    points.push_back(hopf_map_1q(StateVector(f, {a0, a1})));
  };
  // Canonical reps: a0 = 0 forces a1 to the minimum of the unit fiber;
  // otherwise a0 is the minimum of its own norm fiber and a1 is free.
  emit(f.zero(), fiber_min(f, one));
  for (std::uint32_t c = 1; c < prime.p(); ++c) {
    const GFc a0 = fiber_min(f, Fp{c});
    for (const GFc& a1 : norm_fiber(f, F.sub(one, Fp{c}))) emit(a0, a1);
  }
  std::sort(points.begin(), points.end(), [](const BlochPoint& a, const BlochPoint& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return points;
}

}  // namespace dqc
