// gf_complex.hpp
// The complexified field F_{p^2} = F_p[i], i^2 = -1, with conjugation,
// field norm a^2 + b^2 and the (p+1)-element unit-phase group.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/gf_core.hpp"

namespace dqc {

// a + ib. Ordering is lexicographic on (re, im), which is the order used
// for canonical representatives.
struct GFc {
  Fp re;
  Fp im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend bool operator==(const GFc&, const GFc&) = default;
  friend auto operator<=>(const GFc&, const GFc&) = default;
};

class ComplexField {
 public:
  explicit ComplexField(ComplexifiablePrime prime) : base_(std::move(prime)) {}

  const ComplexifiablePrime& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }

  GFc zero() const { return {}; }
  GFc one() const { return {Fp{1}, Fp{0}}; }
  GFc i() const { return {Fp{0}, Fp{1}}; }
  GFc make(std::int64_t re, std::int64_t im = 0) const {
    return {base_.make(re), base_.make(im)};
  }
  GFc real(Fp x) const { return {x, Fp{0}}; }

  GFc add(GFc x, GFc y) const { return {base_.add(x.re, y.re), base_.add(x.im, y.im)}; }
  GFc sub(GFc x, GFc y) const { return {base_.sub(x.re, y.re), base_.sub(x.im, y.im)}; }
  GFc neg(GFc x) const { return {base_.neg(x.re), base_.neg(x.im)}; }
  GFc mul(GFc x, GFc y) const {
    const std::uint64_t p = base_.p();
    const std::uint64_t ac = std::uint64_t{x.re.value()} * y.re.value() % p;
    const std::uint64_t bd = std::uint64_t{x.im.value()} * y.im.value() % p;
    const std::uint64_t ad = std::uint64_t{x.re.value()} * y.im.value() % p;
    const std::uint64_t bc = std::uint64_t{x.im.value()} * y.re.value() % p;
    return {Fp{static_cast<std::uint32_t>((ac + p - bd) % p)},
            Fp{static_cast<std::uint32_t>((ad + bc) % p)}};
  }
  GFc scale(Fp s, GFc x) const { return {base_.mul(s, x.re), base_.mul(s, x.im)}; }

  /// Conjugation a - ib. Agrees with frobenius(x) = x^p on the whole field.
  GFc conj(GFc x) const { return {x.re, base_.neg(x.im)}; }
  GFc frobenius(GFc x) const { return pow(x, base_.p()); }
  GFc pow(GFc base, std::uint64_t exponent) const;

  /// a^2 + b^2. Zero only at x = 0 since -1 is not a square mod p.
  Fp fnorm(GFc x) const { return base_.add(base_.square(x.re), base_.square(x.im)); }

  /// Throws Error{DivisionByZero} for zero.
  GFc inv(GFc x) const;
  GFc div(GFc x, GFc y) const { return mul(x, inv(y)); }

  // Element <-> index in [0, p^2): index = re * p + im, so index order
  // is lexicographic order.
  std::uint64_t index_of(GFc x) const {
    return std::uint64_t{x.re.value()} * base_.p() + x.im.value();
  }
  GFc from_index(std::uint64_t index) const {
    return {Fp{static_cast<std::uint32_t>(index / base_.p())},
            Fp{static_cast<std::uint32_t>(index % base_.p())}};
  }
  std::uint64_t order() const { return std::uint64_t{base_.p()} * base_.p(); }

  friend bool operator==(const ComplexField& a, const ComplexField& b) {
    return a.base_ == b.base_;
  }

 private:
  ComplexifiablePrime base_;
};

/// The unit circle {u : fnorm(u) = 1}: cyclic of order p + 1. Elements are in
/// ascending lexicographic order; generator is the smallest element of full
/// order.
struct PhaseGroup {
  std::vector<GFc> elements;
  GFc generator;

  std::size_t size() const { return elements.size(); }
};

PhaseGroup phase_group(const ComplexField& field);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const ComplexField& field, GFc x);

/// All alpha with fnorm(alpha) = c, ascending. One element (zero) for c = 0,
/// p + 1 elements otherwise.
std::vector<GFc> norm_fiber(const ComplexField& field, Fp c);

/// Lexicographically smallest element of norm_fiber(c) for nonzero c.
GFc fiber_min(const ComplexField& field, Fp c);

/// Precomputed fibers for every c in F_p; p^2 elements in total.
class NormFiberTable {
 public:
  explicit NormFiberTable(const ComplexField& field);

  std::span<const GFc> fiber(Fp c) const {
    return {elements_.data() + offsets_[c.value()], offsets_[c.value() + 1] - offsets_[c.value()]};
  }

 private:
  std::vector<GFc> elements_;
  std::vector<std::size_t> offsets_;
};

// Amplitude text form "a+bi" with canonical residues, e.g. "2+1i".
std::string format_gfc(GFc x);
/// Throws Error{ParseError} on malformed text or residues >= p.
GFc parse_gfc(const ComplexField& field, std::string_view text);

}  // namespace dqc
