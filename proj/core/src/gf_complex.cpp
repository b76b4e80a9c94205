#include "dqc/gf_complex.hpp"

#include <charconv>

#include <fmt/format.h>

#include "dqc/error.hpp"

namespace dqc {

GFc ComplexField::pow(GFc base, std::uint64_t exponent) const {
  GFc result = one();
  while (exponent != 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

GFc ComplexField::inv(GFc x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p^2");
  return scale(base_.inv(fnorm(x)), conj(x));
}

std::uint64_t element_order(const ComplexField& field, GFc x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "order of 0 is undefined");
  // The order divides p^2 - 1; strip prime factors while the power stays 1.
  std::uint64_t order = field.order() - 1;
  std::uint64_t rest = order;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    while (order % q == 0 && field.pow(x, order / q) == field.one()) order /= q;
  }
  if (rest > 1) {
    while (order % rest == 0 && field.pow(x, order / rest) == field.one()) order /= rest;
  }
  return order;
}

PhaseGroup phase_group(const ComplexField& field) {
  PhaseGroup group;
  group.elements = norm_fiber(field, Fp{1});
  const std::uint64_t full = std::uint64_t{field.p()} + 1;
  for (const GFc& u : group.elements) {
    if (element_order(field, u) == full) {
      group.generator = u;
      break;
    }
  }
  return group;
}

std::vector<GFc> norm_fiber(const ComplexField& field, Fp c) {
  const auto& F = field.base();
  std::vector<GFc> out;
  out.reserve(c.is_zero() ? 1 : F.p() + 1);
  for (std::uint32_t a = 0; a < F.p(); ++a) {
    const Fp re{a};
    for (Fp im : F.sqrt(F.sub(c, F.square(re))).view()) out.push_back({re, im});
  }
  return out;
}

GFc fiber_min(const ComplexField& field, Fp c) {
  const auto& F = field.base();
  for (std::uint32_t a = 0; a < F.p(); ++a) {
    const SquareRoots roots = F.sqrt(F.sub(c, F.square(Fp{a})));
    if (!roots.empty()) return {Fp{a}, roots.roots[0]};
  }
  throw Error(ErrorKind::InvalidArgument, "empty norm fiber");  // unreachable: norm is onto
}

NormFiberTable::NormFiberTable(const ComplexField& field) {
  const std::uint32_t p = field.p();
  if (field.order() > (std::uint64_t{1} << 24)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("fiber table for p = {} exceeds the 2^24 element cap", p));
  }
  const auto& F = field.base();
  std::vector<std::size_t> counts(p, 0);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) ++counts[field.fnorm({Fp{a}, Fp{b}}).value()];
  offsets_.assign(p + 1, 0);
  for (std::uint32_t c = 0; c < p; ++c) offsets_[c + 1] = offsets_[c] + counts[c];
  elements_.resize(offsets_[p]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      const GFc x{Fp{a}, Fp{b}};
      elements_[cursor[F.add(F.square(x.re), F.square(x.im)).value()]++] = x;
    }
  }
}

std::string format_gfc(GFc x) { return fmt::format("{}+{}i", x.re.value(), x.im.value()); }

GFc parse_gfc(const ComplexField& field, std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::ParseError, fmt::format("malformed amplitude '{}'", text));
  };
  std::uint64_t re = 0;
  std::uint64_t im = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [mid, ec1] = std::from_chars(first, last, re);
  if (ec1 != std::errc{} || mid == last || *mid != '+') throw fail();
  auto [tail, ec2] = std::from_chars(mid + 1, last, im);
  if (ec2 != std::errc{} || tail + 1 != last || *tail != 'i') throw fail();
  if (re >= field.p() || im >= field.p()) {
    throw Error(ErrorKind::ParseError,
                fmt::format("amplitude '{}' is not in canonical residues mod {}", text, field.p()));
  }
  return {Fp{static_cast<std::uint32_t>(re)}, Fp{static_cast<std::uint32_t>(im)}};
}

}  // namespace dqc
