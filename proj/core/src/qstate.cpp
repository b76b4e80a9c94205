#include "dqc/qstate.hpp"

#include <bit>

#include <fmt/format.h>

#include "dqc/error.hpp"

namespace dqc {

StateVector::StateVector(ComplexField field, std::vector<GFc> amps)
    : field_(std::move(field)), amps_(std::move(amps)) {
  const std::size_t d = amps_.size();
  if (d < 2 || !std::has_single_bit(d) || d > (std::size_t{1} << kMaxQubits)) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("state length {} is not 2^n with 1 <= n <= {}", d, kMaxQubits));
  }
  qubits_ = static_cast<unsigned>(std::countr_zero(d));
  for (const GFc& a : amps_) {
    if (a.re.value() >= field_.p() || a.im.value() >= field_.p()) {
      throw Error(ErrorKind::InvalidArgument, "amplitude residue out of range");
    }
  }
}

StateVector StateVector::basis(ComplexField field, unsigned qubits, std::size_t index) {
  std::vector<GFc> amps(std::size_t{1} << qubits);
  if (index >= amps.size()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  amps[index] = field.one();
  return StateVector(std::move(field), std::move(amps));
}

StateVector StateVector::zero(ComplexField field, unsigned qubits) {
  return StateVector(std::move(field), std::vector<GFc>(std::size_t{1} << qubits));
}

bool StateVector::is_zero() const {
  for (const GFc& a : amps_)
    if (!a.is_zero()) return false;
  return true;
}

StateVector StateVector::scaled(GFc factor) const {
  std::vector<GFc> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = field_.mul(factor, amps_[i]);
  return StateVector(field_, std::move(out));
}

namespace {

void require_compatible(const StateVector& a, const StateVector& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("incompatible states (p={}, D={}) vs (p={}, D={})", a.field().p(),
                            a.dim(), b.field().p(), b.dim()));
  }
}

}  // namespace

GFc hdot(const StateVector& phi, const StateVector& psi) {
  require_compatible(phi, psi);
  const ComplexField& f = phi.field();
  GFc acc = f.zero();
  for (std::size_t i = 0; i < phi.dim(); ++i) acc = f.add(acc, f.mul(f.conj(phi[i]), psi[i]));
  return acc;
}

Fp vnorm(const ComplexField& field, std::span<const GFc> amps) {
  const auto& F = field.base();
  Fp acc = F.zero();
  for (const GFc& a : amps) acc = F.add(acc, field.fnorm(a));
  return acc;
}

Fp vnorm(const StateVector& psi) { return vnorm(psi.field(), psi.amps()); }

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::DimensionMismatch, "tensor of states over different fields");
  }
  const ComplexField& f = a.field();
  std::vector<GFc> out;
  out.reserve(a.dim() * b.dim());
  for (const GFc& x : a.amps())
    for (const GFc& y : b.amps()) out.push_back(f.mul(x, y));
  return StateVector(f, std::move(out));
}

DensityMatrix::DensityMatrix(ComplexField field, std::size_t dim, std::vector<GFc> entries)
    : field_(std::move(field)), dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix entry count is not dim^2");
  }
}

GFc DensityMatrix::trace() const {
  GFc acc = field_.zero();
  for (std::size_t i = 0; i < dim_; ++i) acc = field_.add(acc, at(i, i));
  return acc;
}

bool DensityMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!at(i, i).im.is_zero()) return false;
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (at(j, i) != field_.conj(at(i, j))) return false;
  }
  return true;
}

DensityMatrix density(const StateVector& psi) {
  const ComplexField& f = psi.field();
  const std::size_t d = psi.dim();
  std::vector<GFc> rho(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho[i * d + j] = f.mul(psi[i], f.conj(psi[j]));
  return DensityMatrix(f, d, std::move(rho));
}

std::string format_amplitudes(std::span<const GFc> amps) {
  std::string out;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i != 0) out += ';';
    out += format_gfc(amps[i]);
  }
  return out;
}

StateVector parse_state(const ComplexField& field, std::string_view text) {
  std::vector<GFc> amps;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    amps.push_back(parse_gfc(field, text.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return StateVector(field, std::move(amps));
}

}  // namespace dqc
