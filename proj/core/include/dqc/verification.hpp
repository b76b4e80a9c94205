// verification.hpp
// Cross-check driver: closed forms, the zeta recurrence, enumeration where
// the budget allows, and seeded spot checks on sampled unit states.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dqc/census.hpp"
#include "dqc/entanglement.hpp"

namespace dqc {

struct VerifyOptions {
  EnumerationOptions enumeration;
  std::uint64_t seed = 20240229;
  unsigned spot_checks = 256;
};

/// Fills every check it can; never throws on a mismatch.
CountReport run_verification(const ComplexifiablePrime& prime, unsigned qubits,
                             const VerifyOptions& options);

/// As run_verification, but throws VerificationFailed on the first mismatch.
CountReport verify(const ComplexifiablePrime& prime, unsigned qubits, const VerifyOptions& options);

/// A unit-norm vector of length dim: random prefix completed by a random
/// element of the residual fiber.
std::vector<GFc> sample_unit_state(const ComplexField& field, std::uint64_t dim,
                                   std::mt19937_64& rng);

}  // namespace dqc
