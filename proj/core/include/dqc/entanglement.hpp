// entanglement.hpp
// Local Pauli expectations, the purity relative to local observables taken
// mod p, exact product-state detection, and the entanglement census.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqc/census.hpp"
#include "dqc/qstate.hpp"

namespace dqc {

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// <psi| sigma_mu^j |psi> for mu in {x, y, z} and every qubit j, with the
/// standard sigma_y = [[0, -i], [i, 0]].
class PauliExpectations {
 public:
  explicit PauliExpectations(std::vector<std::array<Fp, 3>> per_qubit)
      : values_(std::move(per_qubit)) {}

  unsigned qubits() const { return static_cast<unsigned>(values_.size()); }
  Fp at(Pauli mu, unsigned qubit) const { return values_[qubit][static_cast<int>(mu)]; }
  const std::array<Fp, 3>& bloch(unsigned qubit) const { return values_[qubit]; }
  bool all_zero() const;

 private:
  std::vector<std::array<Fp, 3>> values_;
};

/// Throws Error{NotUnitNorm}; Error{NonRealExpectation} if a Hermitian form
/// ever comes out with a nonzero imaginary part.
PauliExpectations pauli_expectations(const StateVector& psi);

struct PurityValue {
  Fp sum_sq;                  // sum over j, mu of <sigma_mu^j>^2
  unsigned qubits = 0;
  std::optional<Fp> reduced;  // sum_sq / n, absent when p divides n
};

PurityValue purity(const StateVector& psi);
PurityValue purity(const ComplexifiablePrime& prime, const PauliExpectations& ex);

// Per-qubit bit set; bit j is qubit j.
class QubitMask {
 public:
  QubitMask() = default;
  QubitMask(std::uint32_t bits, unsigned qubits) : bits_(bits), qubits_(qubits) {}

  bool test(unsigned qubit) const { return (bits_ >> qubit) & 1u; }
  bool full() const { return bits_ == (qubits_ >= 32 ? ~0u : (1u << qubits_) - 1); }
  bool none() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  unsigned qubits() const { return qubits_; }
  /// Qubit 0 first, e.g. "110".
  std::string to_string() const;

  friend bool operator==(const QubitMask&, const QubitMask&) = default;

 private:
  std::uint32_t bits_ = 0;
  unsigned qubits_ = 0;
};

/// Bit j set iff the 2 x 2^(n-1) reshaping (qubit j against the rest) has
/// rank 1, i.e. qubit j factors out. Throws Error{ZeroVector}.
QubitMask separable_qubits(const StateVector& psi);

enum class Entanglement : std::uint8_t { Unentangled, Partial, Maximal };

std::string_view to_string(Entanglement e);

struct EntanglementClass {
  Entanglement kind = Entanglement::Partial;
  QubitMask separable;
  PurityValue purity;
  bool all_expectations_zero = false;
};

/// Unentangled iff every qubit factors out. Maximal iff each qubit's local
/// Bloch vector has zero squared length, sum_mu <sigma_mu^j>^2 = 0 mod p,
/// for every j. Otherwise Partial.
EntanglementClass classify(const StateVector& psi);

struct EntanglementCensus {
  std::uint32_t p = 0;
  unsigned qubits = 0;
  BigInt irreducible;
  std::map<Entanglement, BigInt> irreducible_by_class;
  std::map<Entanglement, BigInt> unit_by_class;  // irreducible x (p + 1)
  std::map<std::uint32_t, BigInt> sum_sq_histogram;
  BigInt all_expectations_zero;
  // Not a product, yet reduced purity 1. Reported, not assumed absent.
  BigInt purity_one_entangled;
  // Product states whose reduced purity is not 1. Must stay zero.
  BigInt product_purity_violations;
  // Maximal states with a factoring qubit. Must stay zero.
  BigInt maximal_with_separable_qubit;

  BigInt count(Entanglement e) const;
  /// Maximal / Unentangled as an exact rational; nullopt when no
  /// unentangled states were found.
  std::optional<BigRational> maxent_ratio() const;
};

/// Classifies every irreducible (canonical) unit-norm state. Throws
/// BudgetExceeded when the unit-norm scan is over budget.
EntanglementCensus entanglement_census(const ComplexField& field, unsigned qubits,
                                       const EnumerationOptions& options);

// Span-level kernels shared with the census workers; amps must have unit
// norm and length 2^qubits.
std::vector<std::array<Fp, 3>> pauli_kernel(const ComplexField& field,
                                            std::span<const GFc> amps, unsigned qubits);
bool qubit_factors_out(const ComplexField& field, std::span<const GFc> amps, unsigned qubits,
                       unsigned qubit);
EntanglementClass classify_amplitudes(const ComplexField& field, std::span<const GFc> amps,
                                      unsigned qubits);

}  // namespace dqc
