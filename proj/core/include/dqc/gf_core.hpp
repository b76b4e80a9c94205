// gf_core.hpp
// Prime-field arithmetic for primes p = 3 (mod 4), with quadratic-residue
// tables used by the complexified field and the enumerators.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dqc {

// Canonical residue in [0, p). The modulus lives in ComplexifiablePrime.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr explicit Fp(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;

 private:
  std::uint32_t value_ = 0;
};

enum class QuadraticCharacter : std::uint8_t { Zero, Residue, NonResidue };

// Square roots of an element of F_p: two roots {r, p - r} for a nonzero
// residue, the single root 0 for zero, none for a non-residue.
struct SquareRoots {
  std::array<Fp, 2> roots{};
  std::uint8_t count = 0;

  std::span<const Fp> view() const { return {roots.data(), count}; }
  bool empty() const { return count == 0; }
};

bool is_prime(std::uint64_t candidate) noexcept;

/// A validated prime p with p = 3 (mod 4), so that x^2 + 1 has no root in F_p
/// and F_p[i] is a field. Copies are cheap: the residue tables are shared and
/// never mutated after construction.
class ComplexifiablePrime {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;
  static constexpr std::uint32_t kEagerTableLimit = 1u << 16;

  /// Throws Error{NotPrime}, Error{NotComplexifiable} or
  /// Error{UnsupportedPrime} (candidate < 3 or above kMaxPrime).
  static ComplexifiablePrime validate(std::uint64_t candidate);

  std::uint32_t p() const { return p_; }
  int residue_class() const { return static_cast<int>(p_ % 4); }
  bool has_tables() const { return tables_ != nullptr; }

  Fp zero() const { return Fp{0}; }
  Fp one() const { return Fp{1}; }
  Fp make(std::int64_t value) const;

  Fp add(Fp x, Fp y) const {
    std::uint32_t s = x.value() + y.value();
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp x, Fp y) const {
    return Fp{x.value() >= y.value() ? x.value() - y.value() : x.value() + p_ - y.value()};
  }
  Fp neg(Fp x) const { return Fp{x.is_zero() ? 0 : p_ - x.value()}; }
  Fp mul(Fp x, Fp y) const {
    return Fp{static_cast<std::uint32_t>(std::uint64_t{x.value()} * y.value() % p_)};
  }
  Fp square(Fp x) const { return mul(x, x); }
  Fp pow(Fp base, std::uint64_t exponent) const;
  /// Fermat inverse x^(p-2). Throws Error{DivisionByZero} for zero.
  Fp inv(Fp x) const;
  Fp div(Fp x, Fp y) const { return mul(x, inv(y)); }

  QuadraticCharacter character(Fp c) const;
  bool is_square(Fp c) const { return character(c) != QuadraticCharacter::NonResidue; }
  SquareRoots sqrt(Fp c) const;

  // Centered representative in [-(p-1)/2, (p-1)/2].
  std::int64_t centered(Fp x) const {
    return x.value() > p_ / 2 ? static_cast<std::int64_t>(x.value()) - p_
                              : static_cast<std::int64_t>(x.value());
  }

  friend bool operator==(const ComplexifiablePrime& a, const ComplexifiablePrime& b) {
    return a.p_ == b.p_;
  }

 private:
  struct Tables {
    std::vector<QuadraticCharacter> character;
    std::vector<std::uint32_t> root;  // smaller root of each residue, else 0
  };

  explicit ComplexifiablePrime(std::uint32_t p);

  std::uint32_t p_ = 0;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace dqc
