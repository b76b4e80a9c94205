#include "dqc/qstate.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dqc/error.hpp"
#include "oracle.hpp"

namespace dqc {
namespace {

ComplexField field(std::uint64_t p) { return ComplexField(ComplexifiablePrime::validate(p)); }

TEST(StateVector, RejectsBadLengths) {
  const ComplexField f = field(3);
  EXPECT_THROW(StateVector(f, {}), Error);
  EXPECT_THROW(StateVector(f, std::vector<GFc>(3)), Error);
  EXPECT_THROW(StateVector(f, {GFc{Fp{3}, Fp{0}}, GFc{}}), Error);  // residue out of range
  EXPECT_EQ(StateVector(f, std::vector<GFc>(8)).qubits(), 3u);
}

TEST(StateVector, BasisAndZero) {
  const ComplexField f = field(7);
  const StateVector b = StateVector::basis(f, 2, 2);
  EXPECT_EQ(b[2], f.one());
  EXPECT_EQ(vnorm(b), Fp{1});
  EXPECT_TRUE(StateVector::zero(f, 2).is_zero());
}

TEST(Vnorm, Examples) {
  const ComplexField f = field(3);
  EXPECT_EQ(vnorm(StateVector(f, {f.make(1), f.make(1)})), Fp{2});
  // Self-orthogonal nonzero vector.
  const StateVector z(f, {f.make(1), f.make(1), f.make(1), f.zero()});
  EXPECT_FALSE(z.is_zero());
  EXPECT_EQ(vnorm(z), Fp{0});
  EXPECT_EQ(vnorm(StateVector(f, {f.make(1, 1), f.zero()})), Fp{2});
}

TEST(Hdot, Examples) {
  const ComplexField f = field(3);
  const StateVector phi(f, {f.make(1), f.zero()});
  const StateVector psi(f, {f.make(0, 1), f.zero()});
  EXPECT_EQ(hdot(phi, psi), f.make(0, 1));
  EXPECT_EQ(hdot(psi, phi), f.make(0, 2));
  EXPECT_THROW(hdot(phi, StateVector::zero(f, 2)), Error);
}

void check_hdot_properties(const ComplexField& f, const std::vector<oracle::Pair>& x,
                           const std::vector<oracle::Pair>& y, oracle::Pair c) {
  const std::int64_t p = f.p();
  const StateVector phi = oracle::to_state(f, x);
  const StateVector psi = oracle::to_state(f, y);
  // Conjugate symmetry.
  ASSERT_EQ(hdot(phi, psi), f.conj(hdot(psi, phi)));
  // <psi|psi> lies in F_p and equals the field norm.
  const GFc self = hdot(psi, psi);
  ASSERT_TRUE(self.im.is_zero());
  ASSERT_EQ(self.re.value(), static_cast<std::uint32_t>(oracle::vector_norm(y, p)));
  // Linear in the second slot, conjugate linear in the first.
  const GFc gc = oracle::from_pair(c);
  ASSERT_EQ(hdot(phi, psi.scaled(gc)), f.mul(gc, hdot(phi, psi)));
  ASSERT_EQ(hdot(phi.scaled(gc), psi), f.mul(f.conj(gc), hdot(phi, psi)));
  // Oracle value.
  oracle::Pair acc{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i)
    acc = oracle::add(acc, oracle::mul(oracle::conj(x[i], p), y[i], p), p);
  ASSERT_EQ(oracle::to_pair(hdot(phi, psi)), acc);
}

TEST(Hdot, ExhaustiveOneQubitP3) {
  const ComplexField f = field(3);
  std::vector<std::vector<oracle::Pair>> all;
  oracle::for_each_vector(3, 2, [&](const auto& v) { all.push_back(v); });
  ASSERT_EQ(all.size(), 81u);
  for (const auto& x : all)
    for (const auto& y : all) check_hdot_properties(f, x, y, {1, 2});
}

TEST(Hdot, RandomTwoQubits) {
  for (std::int64_t p : {7, 11}) {
    const ComplexField f = field(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 10000; ++t) {
      std::vector<oracle::Pair> x(4), y(4);
      for (auto& a : x) a = oracle::random_element(p, rng);
      for (auto& a : y) a = oracle::random_element(p, rng);
      check_hdot_properties(f, x, y, oracle::random_element(p, rng));
    }
  }
}

TEST(Tensor, OrderAndNorm) {
  const ComplexField f = field(7);
  const StateVector a(f, {f.make(1), f.make(2)});
  const StateVector b(f, {f.make(3), f.make(0, 1)});
  const StateVector ab = tensor(a, b);
  ASSERT_EQ(ab.qubits(), 2u);
  EXPECT_EQ(ab[0], f.make(3));
  EXPECT_EQ(ab[1], f.make(0, 1));
  EXPECT_EQ(ab[2], f.make(6));
  EXPECT_EQ(ab[3], f.make(0, 2));
  EXPECT_EQ(vnorm(ab), f.base().mul(vnorm(a), vnorm(b)));
}

TEST(Density, HermitianWithNormTrace) {
  const ComplexField f = field(11);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<oracle::Pair> v(4);
    for (auto& a : v) a = oracle::random_element(11, rng);
    const StateVector psi = oracle::to_state(f, v);
    const DensityMatrix rho = density(psi);
    EXPECT_TRUE(rho.is_hermitian());
    EXPECT_EQ(rho.trace(), f.real(vnorm(psi)));
    EXPECT_EQ(rho.at(1, 2), f.mul(psi[1], f.conj(psi[2])));
  }
}

TEST(StateText, RoundTrip) {
  const ComplexField f = field(7);
  const StateVector psi(f, {f.make(1, 2), f.make(0), f.make(6, 6), f.make(3, 0)});
  EXPECT_EQ(format_amplitudes(psi.amps()), "1+2i;0+0i;6+6i;3+0i");
  EXPECT_EQ(parse_state(f, format_amplitudes(psi.amps())), psi);
  EXPECT_THROW(parse_state(f, "1+0i;0+0i;0+0i"), Error);
  EXPECT_THROW(parse_state(f, "1+0i;;0+0i;0+0i"), Error);
}

}  // namespace
}  // namespace dqc
