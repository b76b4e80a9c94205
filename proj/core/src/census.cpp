#include "dqc/census.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <fmt/format.h>

#include "dqc/hopf_geometry.hpp"

namespace dqc {

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

BigInt total_states(std::uint32_t p, std::uint64_t dim) { return big_pow(p, 2 * dim); }

BigInt zero_norm_count(std::uint32_t p, std::uint64_t dim) {
  const BigInt pd = big_pow(p, dim);
  const BigInt sign_term = (dim % 2 == 0) ? BigInt(p - 1) : BigInt(-static_cast<std::int64_t>(p - 1));
  return big_pow(p, dim - 1) * (pd + sign_term);
}

BigInt unit_norm_count(std::uint32_t p, std::uint64_t dim) {
  const BigInt pd = big_pow(p, dim);
  return big_pow(p, dim - 1) * (dim % 2 == 0 ? BigInt(pd - 1) : BigInt(pd + 1));
}

std::vector<BigInt> zeta_by_induction(std::uint32_t p, std::uint64_t max_dim) {
  if (max_dim < 1) throw Error(ErrorKind::InvalidArgument, "max_dim must be >= 1");
  std::vector<BigInt> zeta;
  zeta.reserve(max_dim);
  zeta.emplace_back(1);
  const BigInt p2m1 = BigInt(p) * p - 1;
  for (std::uint64_t d = 1; d < max_dim; ++d) {
    const BigInt omega = (total_states(p, d) - zeta.back()) / (p - 1);
    zeta.push_back(zeta.back() + p2m1 * omega);
  }
  return zeta;
}

bool CountReport::verified() const {
  return std::all_of(matches.begin(), matches.end(), [](const auto& kv) { return kv.second; });
}

std::string CountReport::first_mismatch() const {
  for (const auto& [name, ok] : matches)
    if (!ok) return name;
  return {};
}

CountReport closed_form(const ComplexifiablePrime& prime, std::uint64_t dim) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  const std::uint32_t p = prime.p();
  CountReport r;
  r.p = p;
  r.dim = dim;
  r.total = total_states(p, dim);
  r.zero_norm = zero_norm_count(p, dim);
  r.unit_norm = unit_norm_count(p, dim);

  r.matches["identity.partition"] = r.zero_norm + (p - 1) * r.unit_norm == r.total;
  r.matches["identity.zeta_induction"] = zeta_by_induction(p, dim).back() == r.zero_norm;
  // Uniform nonzero fibers: omega = (p^(2D) - zeta) / (p - 1) exactly.
  r.matches["identity.omega_from_zeta"] = (r.total - r.zero_norm) % (p - 1) == 0 &&
                                          (r.total - r.zero_norm) / (p - 1) == r.unit_norm;
  return r;
}

CountReport closed_form_qubits(const ComplexifiablePrime& prime, unsigned qubits) {
  if (qubits < 1 || qubits > 16) throw Error(ErrorKind::InvalidArgument, "qubits must be in 1..16");
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  CountReport r = closed_form(prime, dim);
  const std::uint32_t p = r.p;
  const unsigned n = qubits;
  r.qubits = n;

  r.matches["identity.unit_divisible"] = r.unit_norm % (p + 1) == 0;
  BigInt product = big_pow(p, dim - 1) * (p - 1);
  for (unsigned k = 1; k < n; ++k) product *= big_pow(p, std::uint64_t{1} << k) + 1;
  r.irreducible = product;
  r.matches["identity.irreducible_product"] = r.unit_norm / (p + 1) == product;

  r.unentangled_irreducible = big_pow(p, n) * big_pow(p - 1, n);
  r.unentangled_unit = (p + 1) * *r.unentangled_irreducible;
  if (n >= 2) {
    r.maxent_irreducible = big_pow(p, n + 1) * (p - 1) * big_pow(p + 1, n - 1);
    r.maxent_unit = (p + 1) * *r.maxent_irreducible;
    BigRational ratio(p);
    for (unsigned k = 1; k < n; ++k) ratio *= BigRational(BigInt(p + 1), BigInt(p - 1));
    r.maxent_ratio = ratio;
    r.matches["identity.maxent_ratio"] =
        BigRational(*r.maxent_irreducible, *r.unentangled_irreducible) == ratio;
  }
  // total / unit = p^(D+1) / (p^D - 1) exceeds p.
  const BigRational total_over_unit(r.total, r.unit_norm);
  r.matches["identity.total_unit_ratio"] =
      total_over_unit == BigRational(big_pow(p, dim + 1), big_pow(p, dim) - 1) &&
      total_over_unit > BigRational(p);
  return r;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// p^k as an exact integer, or nullopt past 2^64.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent) {
  const BigInt v = big_pow(base, exponent);
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

void check_enumeration_budget(const ComplexField& field, std::uint64_t dim,
                              const EnumerationOptions& options) {
  const auto prefixes = checked_pow(field.order(), dim - 1);
  if (!prefixes || *prefixes > options.budget) {
    CountReport closed = std::has_single_bit(dim) && dim >= 2
                             ? closed_form_qubits(field.base(), std::countr_zero(dim))
                             : closed_form(field.base(), dim);
    throw BudgetExceeded(fmt::format("fiber enumeration over {}^{} prefixes exceeds the budget of {}",
                                     field.order(), dim - 1, options.budget),
                         std::move(closed));
  }
}

NormClassScan::NormClassScan(ComplexField field, std::uint64_t dim, Fp target,
                             EnumerationOptions options)
    : field_(std::move(field)), dim_(dim), target_(target) {
  if (dim_ < 1 || dim_ > (std::uint64_t{1} << 16)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("dimension {} out of range", dim_));
  }
  if (target_.value() >= field_.p()) throw Error(ErrorKind::InvalidArgument, "target not reduced");
  check_enumeration_budget(field_, dim_, options);
  prefixes_ = *checked_pow(field_.order(), dim_ - 1);
  threads_ = static_cast<unsigned>(
      std::clamp<std::uint64_t>(resolve_threads(options.threads), 1, prefixes_));
  if (field_.order() <= (std::uint64_t{1} << 24)) {
    table_ = std::make_shared<const NormFiberTable>(field_);
  }
}

std::span<const GFc> NormClassScan::fiber(Fp c, std::vector<GFc>& scratch) const {
  if (table_) return table_->fiber(c);
  scratch = norm_fiber(field_, c);
  return scratch;
}

std::vector<std::uint64_t> NormClassScan::blocks() const {
  std::vector<std::uint64_t> bounds(threads_ + 1);
  for (unsigned b = 0; b <= threads_; ++b) {
    bounds[b] = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(prefixes_) * b / threads_);
  }
  return bounds;
}

BigInt NormClassScan::count() const {
  // Only the residual matters: zero contributes 1 completion, nonzero p + 1.
  struct Tally {
    std::uint64_t zero_residual = 0;
    std::uint64_t nonzero_residual = 0;
  };
  const auto& F = field_.base();
  const std::vector<std::uint64_t> bounds = blocks();
  std::vector<Tally> tallies(threads_);
  auto work = [&](unsigned b) {
    Tally t;
    const std::uint64_t begin = bounds[b];
    const std::uint64_t end = bounds[b + 1];
    if (begin >= end) return;
    const std::size_t plen = static_cast<std::size_t>(dim_ - 1);
    std::vector<GFc> prefix(plen);
    std::uint64_t rest = begin;
    for (std::size_t k = plen; k-- > 0;) {
      prefix[k] = field_.from_index(rest % field_.order());
      rest /= field_.order();
    }
    Fp partial = F.zero();
    for (const GFc& a : prefix) partial = F.add(partial, field_.fnorm(a));
    const std::uint32_t p = F.p();
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (partial == target_) {
        ++t.zero_residual;
      } else {
        ++t.nonzero_residual;
      }
      for (std::size_t k = plen; k-- > 0;) {
        GFc& a = prefix[k];
        partial = F.sub(partial, field_.fnorm(a));
        if (a.im.value() + 1 < p) {
          a.im = Fp{a.im.value() + 1};
        } else if (a.re.value() + 1 < p) {
          a = {Fp{a.re.value() + 1}, Fp{0}};
        } else {
          a = {};
          continue;
        }
        partial = F.add(partial, field_.fnorm(a));
        break;
      }
    }
    tallies[b] = t;
  };
  if (threads_ == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned b = 0; b < threads_; ++b) pool.emplace_back(work, b);
  }
  BigInt zero = 0;
  BigInt nonzero = 0;
  for (const Tally& t : tallies) {
    zero += t.zero_residual;
    nonzero += t.nonzero_residual;
  }
  return zero + nonzero * (F.p() + 1);
}

BigInt enumerate_norm_class(const ComplexField& field, std::uint64_t dim, Fp target,
                            const EnumerationOptions& options) {
  return NormClassScan(field, dim, target, options).count();
}

namespace {

// Drains a filtered class into a sink, honouring its ordering requirement.
template <class Filter>
BigInt drain(const NormClassScan& scan, StateSink* sink, Filter keep) {
  if (sink == nullptr) {
    struct Counter {
      Filter keep;
      std::uint64_t n = 0;
      void operator()(std::span<const GFc> s) { n += keep(s) ? 1 : 0; }
    };
    BigInt total = 0;
    for (const Counter& c : scan.run(Counter{keep})) total += c.n;
    return total;
  }
  if (!sink->ordered()) {
    struct Forward {
      Filter keep;
      StateSink* sink;
      std::uint64_t n = 0;
      void operator()(std::span<const GFc> s) {
        if (!keep(s)) return;
        sink->accept(s);
        ++n;
      }
    };
    BigInt total = 0;
    for (const Forward& f : scan.run(Forward{keep, sink})) total += f.n;
    return total;
  }
  if (scan.threads() == 1) {
    std::uint64_t n = 0;
    scan.visit(0, scan.prefix_count(), [&](std::span<const GFc> s) {
      if (!keep(s)) return;
      sink->accept(s);
      ++n;
    });
    return n;
  }
  // Ordered sink with several workers: buffer per block, drain in block order.
  struct Buffer {
    Filter keep;
    std::vector<GFc> flat;
    void operator()(std::span<const GFc> s) {
      if (keep(s)) flat.insert(flat.end(), s.begin(), s.end());
    }
  };
  BigInt total = 0;
  const std::size_t d = static_cast<std::size_t>(scan.dim());
  for (const Buffer& buf : scan.run(Buffer{keep, {}})) {
    for (std::size_t off = 0; off < buf.flat.size(); off += d) {
      sink->accept(std::span<const GFc>(buf.flat.data() + off, d));
    }
    total += buf.flat.size() / d;
  }
  return total;
}

}  // namespace

BigInt enumerate_norm_class(const ComplexField& field, std::uint64_t dim, Fp target,
                            StateSink& sink, const EnumerationOptions& options) {
  const NormClassScan scan(field, dim, target, options);
  return drain(scan, &sink, [](std::span<const GFc>) { return true; });
}

std::vector<BigInt> full_scan_norm_histogram(const ComplexField& field, std::uint64_t dim,
                                             const EnumerationOptions& options) {
  const auto vectors = checked_pow(field.order(), dim);
  if (!vectors || *vectors > options.budget) {
    throw BudgetExceeded(fmt::format("full scan of {}^{} vectors exceeds the budget of {}",
                                     field.order(), dim, options.budget),
                         closed_form(field.base(), dim));
  }
  const auto& F = field.base();
  std::vector<std::uint64_t> hist(field.p(), 0);
  std::vector<std::uint64_t> digits(dim, 0);
  for (std::uint64_t v = 0; v < *vectors; ++v) {
    Fp norm = F.zero();
    for (std::uint64_t d : digits) norm = F.add(norm, field.fnorm(field.from_index(d)));
    ++hist[norm.value()];
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < field.order()) break;
      digits[k] = 0;
    }
  }
  return {hist.begin(), hist.end()};
}

BigInt enumerate_irreducible(const ComplexField& field, unsigned qubits, StateSink* sink,
                             const EnumerationOptions& options) {
  if (qubits < 1 || qubits > 16) throw Error(ErrorKind::InvalidArgument, "qubits must be in 1..16");
  const NormClassScan scan(field, std::uint64_t{1} << qubits, field.base().one(), options);
  const auto filter = std::make_shared<const CanonicalFilter>(field);
  return drain(scan, sink,
               [filter](std::span<const GFc> s) { return filter->is_canonical(s); });
}

}  // namespace dqc
