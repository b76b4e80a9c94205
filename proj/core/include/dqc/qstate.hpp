// qstate.hpp
// Discrete n-qubit states over F_{p^2}.
//
// Basis labels put qubit 0 in the most significant bit: |q0 q1 ... q_{n-1}>
// is amplitude index q0 * 2^(n-1) + ... + q_{n-1}.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/gf_complex.hpp"

namespace dqc {

inline constexpr unsigned kMaxQubits = 16;

class StateVector {
 public:
  /// Throws Error{DimensionMismatch} unless amps.size() = 2^n with
  /// 1 <= n <= kMaxQubits, and Error{InvalidArgument} on residues >= p.
  StateVector(ComplexField field, std::vector<GFc> amps);

  static StateVector basis(ComplexField field, unsigned qubits, std::size_t index);
  static StateVector zero(ComplexField field, unsigned qubits);

  const ComplexField& field() const { return field_; }
  unsigned qubits() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const GFc> amps() const { return amps_; }
  const GFc& operator[](std::size_t i) const { return amps_[i]; }

  bool is_zero() const;
  StateVector scaled(GFc factor) const;

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.field_ == b.field_ && a.amps_ == b.amps_;
  }

 private:
  ComplexField field_;
  unsigned qubits_ = 0;
  std::vector<GFc> amps_;
};

/// Hermitian product sum_i conj(phi_i) * psi_i (conjugate-linear in phi).
GFc hdot(const StateVector& phi, const StateVector& psi);

/// Vector field norm sum_i fnorm(psi_i).
Fp vnorm(const StateVector& psi);
Fp vnorm(const ComplexField& field, std::span<const GFc> amps);

/// Kronecker product; qubits of a come first (most significant).
StateVector tensor(const StateVector& a, const StateVector& b);

/// rho_ij = psi_i * conj(psi_j), row-major.
class DensityMatrix {
 public:
  DensityMatrix(ComplexField field, std::size_t dim, std::vector<GFc> entries);

  std::size_t dim() const { return dim_; }
  const GFc& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const GFc> entries() const { return entries_; }

  GFc trace() const;
  bool is_hermitian() const;

  friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  ComplexField field_;
  std::size_t dim_;
  std::vector<GFc> entries_;
};

DensityMatrix density(const StateVector& psi);

// Semicolon-joined "a+bi" amplitudes, e.g. "1+0i;0+2i".
std::string format_amplitudes(std::span<const GFc> amps);
StateVector parse_state(const ComplexField& field, std::string_view text);

}  // namespace dqc
