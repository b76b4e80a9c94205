// hopf_geometry.hpp
// The discrete Hopf fibration: every unit-norm state sits on a fiber of
// p + 1 phase multiples, all sharing one density matrix and, for one qubit,
// one Bloch point (X, Y, Z) in F_p^3 with X^2 + Y^2 + Z^2 = 1.

#pragma once

#include <compare>
#include <span>
#include <vector>

#include "dqc/gf_complex.hpp"
#include "dqc/qstate.hpp"

namespace dqc {

struct BlochPoint {
  Fp x;
  Fp y;
  Fp z;
  // Schematic real embedding: centered residues rescaled to unit length.
  double ex = 0.0;
  double ey = 0.0;
  double ez = 0.0;
  bool degenerate = false;  // centered triple was (0, 0, 0); not rescaled

  friend bool operator==(const BlochPoint& a, const BlochPoint& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// X = 2 Re(a0 conj a1), Y = 2 Im(a0 conj a1), Z = |a0|^2 - |a1|^2, mod p.
/// Throws Error{DimensionMismatch} unless n = 1, Error{NotUnitNorm} unless
/// vnorm = 1.
BlochPoint hopf_map_1q(const StateVector& psi);

/// {u * psi : u in group}, in group order. Throws Error{NotUnitNorm}.
std::vector<StateVector> phase_class(const StateVector& psi, const PhaseGroup& group);
std::vector<StateVector> phase_class(const StateVector& psi);

/// Lexicographically smallest member of the phase class. The minimum is
/// fixed by the first nonzero amplitude alone, which must be the smallest
/// element of its norm fiber. Throws Error{NotUnitNorm}.
StateVector canonical_rep(const StateVector& psi);

/// Fast membership test used by the enumerators: true iff amps is the
/// canonical representative of its phase class.
class CanonicalFilter {
 public:
  explicit CanonicalFilter(const ComplexField& field);

  bool is_canonical(std::span<const GFc> amps) const;
  GFc min_of_norm(Fp c) const;

 private:
  ComplexField field_;
  std::vector<GFc> fiber_min_;  // indexed by norm; empty above the table cap
};

/// Upper triangle (diagonal included) of the density matrix, row-major.
/// Diagonal entries are real. Equal fingerprints on unit-norm states mean
/// the states differ by a phase.
struct Fingerprint {
  std::vector<GFc> entries;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const StateVector& psi);

/// One Bloch point per irreducible single-qubit state (p(p-1) of them),
/// sorted by (X, Y, Z).
std::vector<BlochPoint> bloch_export(const ComplexifiablePrime& prime);

}  // namespace dqc
