#include "dqc/hopf_geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "dqc/error.hpp"
#include "oracle.hpp"

namespace dqc {
namespace {

ComplexField field(std::uint64_t p) { return ComplexField(ComplexifiablePrime::validate(p)); }

std::vector<std::vector<oracle::Pair>> unit_vectors(std::int64_t p, std::size_t dim) {
  std::vector<std::vector<oracle::Pair>> out;
  oracle::for_each_vector(p, dim, [&](const auto& v) {
    if (oracle::vector_norm(v, p) == 1) out.push_back(v);
  });
  return out;
}

std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> xyz(const BlochPoint& b) {
  return {b.x.value(), b.y.value(), b.z.value()};
}

TEST(HopfMap, Examples) {
  for (std::uint64_t p : {3, 7, 11}) {
    const ComplexField f = field(p);
    const BlochPoint north = hopf_map_1q(StateVector(f, {f.one(), f.zero()}));
    EXPECT_EQ(xyz(north), std::make_tuple(0u, 0u, 1u));
    const BlochPoint south = hopf_map_1q(StateVector(f, {f.zero(), f.one()}));
    EXPECT_EQ(xyz(south), std::make_tuple(0u, 0u, static_cast<std::uint32_t>(p - 1)));
  }
  const ComplexField f3 = field(3);
  const BlochPoint b = hopf_map_1q(StateVector(f3, {f3.make(1, 1), f3.make(1, 1)}));
  EXPECT_EQ(xyz(b), std::make_tuple(1u, 0u, 0u));
}

TEST(HopfMap, RejectsNonUnitAndMultiQubit) {
  const ComplexField f = field(7);
  EXPECT_THROW(hopf_map_1q(StateVector(f, {f.make(1), f.make(1)})), Error);
  EXPECT_THROW(hopf_map_1q(StateVector::basis(f, 2, 0)), Error);
}

// X^2 + Y^2 + Z^2 = 1, phase invariance, and p(p-1) distinct images.
TEST(HopfMap, SphereAndFibersExhaustive) {
  for (std::int64_t p : {3, 7, 11, 19}) {
    const ComplexField f = field(p);
    const PhaseGroup g = phase_group(f);
    const auto units = unit_vectors(p, 2);
    ASSERT_EQ(units.size(), static_cast<std::size_t>(p * (p * p - 1)));
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, int> images;
    for (const auto& v : units) {
      const StateVector psi = oracle::to_state(f, v);
      const BlochPoint b = hopf_map_1q(psi);
      const auto& F = f.base();
      ASSERT_EQ(F.add(F.add(F.square(b.x), F.square(b.y)), F.square(b.z)), F.one());
      // Independent formula: a0 conj(a1) = u + iv gives X = 2u, Y = 2v.
      const oracle::Pair w = oracle::mul(v[0], oracle::conj(v[1], p), p);
      ASSERT_EQ(b.x.value(), oracle::mod(2 * w.first, p));
      ASSERT_EQ(b.y.value(), oracle::mod(2 * w.second, p));
      ASSERT_EQ(b.z.value(), oracle::mod(oracle::norm(v[0], p) - oracle::norm(v[1], p), p));
      if (p <= 11)
        for (const GFc& u : g.elements) ASSERT_EQ(hopf_map_1q(psi.scaled(u)), b);
      ++images[xyz(b)];
    }
    EXPECT_EQ(images.size(), static_cast<std::size_t>(p * (p - 1)));
    for (const auto& [pt, count] : images) EXPECT_EQ(count, p + 1);
  }
}

TEST(PhaseClass, Examples) {
  const ComplexField f = field(3);
  const auto cls = phase_class(StateVector(f, {f.one(), f.zero()}));
  std::set<std::vector<oracle::Pair>> got;
  for (const auto& s : cls) got.insert(oracle::to_pairs(s));
  const std::set<std::vector<oracle::Pair>> expected = {
      {{1, 0}, {0, 0}}, {{2, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 2}, {0, 0}}};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(phase_class(StateVector(field(7), {field(7).one(), GFc{}})).size(), 8u);
  EXPECT_THROW(phase_class(StateVector(f, {f.make(1), f.make(1)})), Error);
}

TEST(CanonicalRep, Examples) {
  const ComplexField f = field(3);
  // The class of (2, 0) is {(1,0), (2,0), (i,0), (2i,0)}; (0+1i) sorts first.
  const StateVector two(f, {f.make(2), f.zero()});
  EXPECT_EQ(oracle::to_pairs(canonical_rep(two)), (std::vector<oracle::Pair>{{0, 1}, {0, 0}}));
  const StateVector mixed(f, {f.zero(), f.make(1, 1), f.make(1, 1), f.zero()});
  EXPECT_EQ(oracle::to_pairs(canonical_rep(mixed)), oracle::lexmin_phase(oracle::to_pairs(mixed), 3));
}

// The canonical representative is the lexicographic minimum of the class
// (oracle), idempotent, and partitions like the fingerprint does.
void check_quotient(std::int64_t p, std::size_t dim, std::size_t expected_classes) {
  const ComplexField f = field(p);
  const CanonicalFilter filter(f);
  std::set<std::vector<oracle::Pair>> reps;
  std::set<Fingerprint> prints;
  std::map<std::vector<oracle::Pair>, Fingerprint> rep_print;
  std::size_t canonical_count = 0;
  for (const auto& v : unit_vectors(p, dim)) {
    const StateVector psi = oracle::to_state(f, v);
    const StateVector rep = canonical_rep(psi);
    const auto rep_pairs = oracle::to_pairs(rep);
    ASSERT_EQ(rep_pairs, oracle::lexmin_phase(v, p));
    ASSERT_EQ(canonical_rep(rep), rep);
    ASSERT_EQ(filter.is_canonical(psi.amps()), rep == psi);
    canonical_count += rep == psi;
    const Fingerprint fp = fingerprint(psi);
    auto [it, inserted] = rep_print.emplace(rep_pairs, fp);
    ASSERT_EQ(it->second, fp) << "one class, two fingerprints";
    reps.insert(rep_pairs);
    prints.insert(fp);
  }
  EXPECT_EQ(reps.size(), expected_classes);
  EXPECT_EQ(prints.size(), expected_classes);  // distinct classes, distinct prints
  EXPECT_EQ(canonical_count, expected_classes);
}

TEST(Quotient, ExhaustiveP3OneQubit) { check_quotient(3, 2, 6); }
TEST(Quotient, ExhaustiveP3TwoQubits) { check_quotient(3, 4, 540); }
TEST(Quotient, ExhaustiveP7OneQubit) { check_quotient(7, 2, 42); }

TEST(Quotient, RandomPhaseInvariance) {
  for (std::int64_t p : {7, 11}) {
    const ComplexField f = field(p);
    const PhaseGroup g = phase_group(f);
    std::mt19937_64 rng(p * 101);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int t = 0; t < 10000; ++t) {
      const StateVector psi = oracle::to_state(f, oracle::random_unit(p, 4, rng));
      const StateVector moved = psi.scaled(g.elements[pick(rng)]);
      ASSERT_EQ(fingerprint(moved), fingerprint(psi));
      ASSERT_EQ(canonical_rep(moved), canonical_rep(psi));
    }
  }
}

TEST(Fingerprint, Layout) {
  const ComplexField f = field(7);
  const StateVector psi(f, {f.make(1, 2), f.make(3), f.make(0, 1), f.make(5, 5)});
  const Fingerprint fp = fingerprint(psi);
  ASSERT_EQ(fp.entries.size(), 10u);  // 4 diagonal + 6 above
  const DensityMatrix rho = density(psi);
  std::size_t k = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r; c < 4; ++c) EXPECT_EQ(fp.entries[k++], rho.at(r, c));
}

TEST(BlochExport, PointCountsAndEmbedding) {
  for (std::uint64_t p : {3, 7, 11}) {
    const auto prime = ComplexifiablePrime::validate(p);
    const auto pts = bloch_export(prime);
    ASSERT_EQ(pts.size(), p * (p - 1));
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> distinct;
    for (const BlochPoint& b : pts) {
      distinct.insert(xyz(b));
      if (b.degenerate) {
        EXPECT_EQ(b.ex, 0.0);
        continue;
      }
      EXPECT_NEAR(b.ex * b.ex + b.ey * b.ey + b.ez * b.ez, 1.0, 1e-12);
      const double cx = prime.centered(b.x), cy = prime.centered(b.y), cz = prime.centered(b.z);
      const double len = std::sqrt(cx * cx + cy * cy + cz * cz);
      EXPECT_NEAR(b.ex, cx / len, 1e-12);
      EXPECT_NEAR(b.ez, cz / len, 1e-12);
    }
    EXPECT_EQ(distinct.size(), pts.size());
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const BlochPoint& a, const BlochPoint& b) {
      return xyz(a) < xyz(b);
    }));
  }
}

}  // namespace
}  // namespace dqc
