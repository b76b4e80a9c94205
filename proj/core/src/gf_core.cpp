#include "dqc/gf_core.hpp"

#include <fmt/format.h>

#include "dqc/error.hpp"

namespace dqc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotComplexifiable: return "NotComplexifiable";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotUnitNorm: return "NotUnitNorm";
    case ErrorKind::NonRealExpectation: return "NonRealExpectation";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

// Miller-Rabin with the first twelve prime bases, deterministic for all
// 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ComplexifiablePrime ComplexifiablePrime::validate(std::uint64_t candidate) {
  if (candidate < 3 || candidate > kMaxPrime) {
    throw Error(ErrorKind::UnsupportedPrime,
                fmt::format("p = {} is outside the supported range [3, {}]", candidate, kMaxPrime));
  }
  if (!is_prime(candidate)) {
    throw Error(ErrorKind::NotPrime, fmt::format("{} is not prime", candidate));
  }
  if (candidate % 4 != 3) {
    throw Error(ErrorKind::NotComplexifiable,
                fmt::format("{} = 1 (mod 4): x^2 + 1 splits over F_{}", candidate, candidate));
  }
  return ComplexifiablePrime(static_cast<std::uint32_t>(candidate));
}

ComplexifiablePrime::ComplexifiablePrime(std::uint32_t p) : p_(p) {
  if (p > kEagerTableLimit) return;
  auto tables = std::make_shared<Tables>();
  tables->character.assign(p, QuadraticCharacter::NonResidue);
  tables->root.assign(p, 0);
  tables->character[0] = QuadraticCharacter::Zero;
  for (std::uint32_t r = 1; r <= p / 2; ++r) {
    const auto c = static_cast<std::uint32_t>(std::uint64_t{r} * r % p);
    tables->character[c] = QuadraticCharacter::Residue;
    tables->root[c] = r;
  }
  tables_ = std::move(tables);
}

Fp ComplexifiablePrime::make(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint32_t>(r)};
}

Fp ComplexifiablePrime::pow(Fp base, std::uint64_t exponent) const {
  return Fp{static_cast<std::uint32_t>(powmod64(base.value(), exponent, p_))};
}

Fp ComplexifiablePrime::inv(Fp x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p");
  return pow(x, p_ - 2);
}

QuadraticCharacter ComplexifiablePrime::character(Fp c) const {
  if (c.is_zero()) return QuadraticCharacter::Zero;
  if (tables_) return tables_->character[c.value()];
  // Euler's criterion.
  return pow(c, (p_ - 1) / 2) == one() ? QuadraticCharacter::Residue
                                        : QuadraticCharacter::NonResidue;
}

SquareRoots ComplexifiablePrime::sqrt(Fp c) const {
  SquareRoots out;
  if (c.is_zero()) {
    out.count = 1;
    return out;
  }
  std::uint32_t r = 0;
  if (tables_) {
    if (tables_->character[c.value()] != QuadraticCharacter::Residue) return out;
    r = tables_->root[c.value()];
  } else {
    // p = 3 (mod 4): c^((p+1)/4) squares to c exactly when c is a residue.
    const Fp cand = pow(c, (std::uint64_t{p_} + 1) / 4);
    if (square(cand) != c) return out;
    r = std::min(cand.value(), p_ - cand.value());
  }
  out.roots = {Fp{r}, Fp{p_ - r}};
  out.count = 2;
  return out;
}

}  // namespace dqc
