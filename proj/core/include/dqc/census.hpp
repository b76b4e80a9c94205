// census.hpp
// Exact state counting over F_{p^2}^D: closed forms in arbitrary precision,
// the zero-norm recurrence, and parallel fiber-completion enumeration.
//
// Enumeration walks every prefix (a_0, ..., a_{D-2}) in lexicographic order
// and completes it with each a_{D-1} in the norm fiber of the residual
// target - sum fnorm(a_k). The prefix space [0, p^{2(D-1)}) is split into
// contiguous blocks, one per worker; block results merge by addition, and
// concatenating per-block output in block order gives lexicographic order.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dqc/error.hpp"
#include "dqc/gf_complex.hpp"

namespace dqc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

BigInt total_states(std::uint32_t p, std::uint64_t dim);
/// zeta(D, p) = p^(D-1) (p^D + (-1)^D (p - 1)); includes the zero vector.
BigInt zero_norm_count(std::uint32_t p, std::uint64_t dim);
/// omega(D, p) = p^(D-1) (p^D - (-1)^D); the same count for every nonzero norm.
BigInt unit_norm_count(std::uint32_t p, std::uint64_t dim);

/// zeta(1..max_dim, p) from zeta(1) = 1 and
/// zeta(D+1) = zeta(D) + (p^2 - 1) omega(D), omega(D) = (p^(2D) - zeta(D)) / (p - 1).
std::vector<BigInt> zeta_by_induction(std::uint32_t p, std::uint64_t max_dim);

struct CountReport {
  std::uint32_t p = 0;
  std::optional<unsigned> qubits;  // set when dim = 2^n
  std::uint64_t dim = 0;

  BigInt total;
  BigInt zero_norm;
  BigInt unit_norm;

  std::optional<BigInt> irreducible;
  std::optional<BigInt> unentangled_irreducible;
  std::optional<BigInt> maxent_irreducible;  // n >= 2 only
  std::optional<BigInt> unentangled_unit;
  std::optional<BigInt> maxent_unit;         // n >= 2 only
  std::optional<BigRational> maxent_ratio;   // p ((p+1)/(p-1))^(n-1), n >= 2

  // Counts obtained by enumeration, keyed by the closed-form field name.
  std::map<std::string, BigInt> enumerated;
  // Named checks: identities on the closed forms and enumerated == closed.
  std::map<std::string, bool> matches;
  std::vector<std::string> notes;

  bool verified() const;
  /// Name of the first failing check, empty if none.
  std::string first_mismatch() const;
};

/// Closed forms for raw dimension D (any D >= 1) plus the identity checks.
CountReport closed_form(const ComplexifiablePrime& prime, std::uint64_t dim);
/// Closed forms for D = 2^n, including the qubit-specific tallies.
CountReport closed_form_qubits(const ComplexifiablePrime& prime, unsigned qubits);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max prefixes (or full-scan vectors)
  unsigned threads = 1;                   // 0 = hardware concurrency
};

unsigned resolve_threads(unsigned requested);

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, CountReport report)
      : Error(ErrorKind::BudgetExceeded, what), report_(std::move(report)) {}

  const CountReport& report() const { return report_; }

 private:
  CountReport report_;
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string field, CountReport report)
      : Error(ErrorKind::VerificationFailed, "verification mismatch: " + field),
        field_(std::move(field)),
        report_(std::move(report)) {}

  const std::string& field() const { return field_; }
  const CountReport& report() const { return report_; }

 private:
  std::string field_;
  CountReport report_;
};

/// Receives enumerated states. An ordered sink sees states in lexicographic
/// order from a single thread; an unordered sink may be called concurrently
/// from several workers and must synchronize itself.
class StateSink {
 public:
  virtual ~StateSink() = default;
  virtual bool ordered() const { return true; }
  virtual void accept(std::span<const GFc> state) = 0;
};

/// Throws BudgetExceeded when fiber enumeration over dimension dim would
/// visit more than options.budget prefixes.
void check_enumeration_budget(const ComplexField& field, std::uint64_t dim,
                              const EnumerationOptions& options);

/// All vectors in F_{p^2}^D with a given field norm.
class NormClassScan {
 public:
  /// Throws BudgetExceeded when p^(2(D-1)) > options.budget.
  NormClassScan(ComplexField field, std::uint64_t dim, Fp target, EnumerationOptions options);

  const ComplexField& field() const { return field_; }
  std::uint64_t dim() const { return dim_; }
  Fp target() const { return target_; }
  std::uint64_t prefix_count() const { return prefixes_; }
  unsigned threads() const { return threads_; }

  /// Completions of prefixes [begin, end), in lexicographic order.
  template <class Fn>
  void visit(std::uint64_t begin, std::uint64_t end, Fn&& fn) const;

  /// Count mode: sums fiber sizes without materializing states.
  BigInt count() const;

  /// Runs one copy of `proto` per block over the whole class; each copy is
  /// invoked as worker(std::span<const GFc>). Returns the copies in block
  /// order.
  template <class Worker>
  std::vector<Worker> run(const Worker& proto) const;

  /// Block boundaries used by run() and count().
  std::vector<std::uint64_t> blocks() const;

 private:
  std::span<const GFc> fiber(Fp c, std::vector<GFc>& scratch) const;

  ComplexField field_;
  std::uint64_t dim_;
  Fp target_;
  std::uint64_t prefixes_ = 1;
  unsigned threads_ = 1;
  std::shared_ptr<const NormFiberTable> table_;
};

/// Count of vectors with norm `target` (fiber completion, count mode).
BigInt enumerate_norm_class(const ComplexField& field, std::uint64_t dim, Fp target,
                            const EnumerationOptions& options);
/// Streams every vector with norm `target` into the sink; returns the count.
BigInt enumerate_norm_class(const ComplexField& field, std::uint64_t dim, Fp target,
                            StateSink& sink, const EnumerationOptions& options);

/// Naive oracle: scans all p^(2D) vectors and histograms their norms.
/// Throws BudgetExceeded when p^(2D) > options.budget.
std::vector<BigInt> full_scan_norm_histogram(const ComplexField& field, std::uint64_t dim,
                                             const EnumerationOptions& options);

/// Streams the canonical representative of every phase class of unit-norm
/// n-qubit states; returns their number. Null sink counts only.
BigInt enumerate_irreducible(const ComplexField& field, unsigned qubits, StateSink* sink,
                             const EnumerationOptions& options);

// ---------------------------------------------------------------------------

template <class Fn>
void NormClassScan::visit(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
  if (begin >= end) return;
  const auto& F = field_.base();
  const std::uint32_t p = F.p();
  const std::size_t plen = static_cast<std::size_t>(dim_ - 1);
  std::vector<GFc> state(static_cast<std::size_t>(dim_));
  std::vector<GFc> scratch;

  // Decode `begin` into prefix digits, most significant first.
  std::uint64_t rest = begin;
  for (std::size_t k = plen; k-- > 0;) {
    state[k] = field_.from_index(rest % field_.order());
    rest /= field_.order();
  }
  Fp partial = F.zero();
  for (std::size_t k = 0; k < plen; ++k) partial = F.add(partial, field_.fnorm(state[k]));

  const std::span<const GFc> view(state);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    for (const GFc& last : fiber(F.sub(target_, partial), scratch)) {
      state[plen] = last;
      fn(view);
    }
    // Lexicographic successor of the prefix.
    for (std::size_t k = plen; k-- > 0;) {
      GFc& a = state[k];
      partial = F.sub(partial, field_.fnorm(a));
      if (a.im.value() + 1 < p) {
        a.im = Fp{a.im.value() + 1};
      } else if (a.re.value() + 1 < p) {
        a = {Fp{a.re.value() + 1}, Fp{0}};
      } else {
        a = {};
        continue;  // carry
      }
      partial = F.add(partial, field_.fnorm(a));
      break;
    }
  }
}

template <class Worker>
std::vector<Worker> NormClassScan::run(const Worker& proto) const {
  const std::vector<std::uint64_t> bounds = blocks();
  const std::size_t nblocks = bounds.size() - 1;
  std::vector<Worker> workers(nblocks, proto);
  if (nblocks == 1) {
    visit(bounds[0], bounds[1], [&](std::span<const GFc> s) { workers[0](s); });
    return workers;
  }
  std::vector<std::exception_ptr> errors(nblocks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
      pool.emplace_back([&, b] {
        try {
          visit(bounds[b], bounds[b + 1], [&](std::span<const GFc> s) { workers[b](s); });
        } catch (...) {
          errors[b] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return workers;
}

}  // namespace dqc
