#include <gtest/gtest.h>

#include "chernlab/chern.hpp"
#include "chernlab/divisor.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/pipelines.hpp"
#include "chernlab/presentation.hpp"

using namespace chernlab;

namespace {

struct SplitRing {
  FglPtr f = honda_fgl(2, 2, 32);
  QuotientPtr Q;
  std::vector<Poly> basis;
  Lattice L{2, 1, 2};

  SplitRing() {
    auto R = PolyRing::make(Field::f4(), {"a", "b"});
    Q = QuotientRing::make(R, std::vector<std::string>{"a^4", "b^4"});
    basis = {Q->var("a"), Q->var("b")};
  }
  DivisorPoly to_poly(const LatticeDivisor& D) const { return divisor_from_lattice(Q, f, basis, D); }
};

const SplitRing& split() {
  static const SplitRing s;
  return s;
}

Presentation present(const std::string& group, int p, int n, int v) {
  return build_presentation(repring_from_table(builtin_table(group)), honda_fgl(p, n, 32), v);
}

}  // namespace

TEST(Divisor, DegreeOneProducts) {
  auto& S = split();
  Poly a = S.basis[0], b = S.basis[1];
  auto D = DivisorPoly::point(S.Q, S.f, a), E = DivisorPoly::point(S.Q, S.f, b);
  EXPECT_EQ(divisor_mul(D, E), DivisorPoly::point(S.Q, S.f, fgl_add_in_ring(*S.f, a, b, *S.Q)));
  auto two = DivisorPoly::from_roots(S.Q, S.f, {a, b});
  EXPECT_EQ(divisor_mul(two, DivisorPoly::zero_point(S.Q, S.f, 1)), two);
  EXPECT_EQ(divisor_lambda(two, 0), DivisorPoly::zero_point(S.Q, S.f, 1));
  EXPECT_EQ(divisor_psi(two, 1), two);
}

// The lattice model transported through the coordinates of two 2-torsion
// points; every operation must commute with the transport.
TEST(Divisor, SplitOracleMultiplication) {
  auto& S = split();
  std::vector<LatticeDivisor> small;
  for (int d = 1; d <= 2; ++d)
    for (auto& D : all_divisors(S.L, d)) small.push_back(D);
  for (auto& D : small)
    for (auto& E : small)
      ASSERT_EQ(divisor_mul(S.to_poly(D), S.to_poly(E)), S.to_poly(D * E)) << D.to_string() << " * " << E.to_string();
}

TEST(Divisor, SplitOracleLambdaAndPsi) {
  auto& S = split();
  for (int d = 1; d <= 3; ++d)
    for (auto& D : all_divisors(S.L, d)) {
      auto P = S.to_poly(D);
      for (int r = 0; r <= d; ++r) ASSERT_EQ(divisor_lambda(P, r), S.to_poly(D.lambda(r))) << D.to_string() << " r=" << r;
      for (int k : {-1, 2, 3}) ASSERT_EQ(divisor_psi(P, k, PsiRoute::universal), S.to_poly(D.psi(k))) << D.to_string() << " k=" << k;
    }
}

TEST(Divisor, LambdaOfSumExpands) {
  auto& S = split();
  Poly a = S.basis[0], b = S.basis[1], c = fgl_add_in_ring(*S.f, a, b, *S.Q);
  auto D = DivisorPoly::from_roots(S.Q, S.f, {a, b});
  auto E = DivisorPoly::point(S.Q, S.f, c);
  auto sum = divisor_add(D, E);
  EXPECT_EQ(sum, DivisorPoly::from_roots(S.Q, S.f, {a, b, c}));
  for (int k = 1; k <= 3; ++k) {
    // lambda^k(D + E) = lambda^k D * lambda^0 E + lambda^{k-1} D * lambda^1 E as divisors
    std::vector<DivisorPoly> parts;
    for (int i = std::max(0, k - 1); i <= std::min(k, 2); ++i) {
      auto Li = divisor_lambda(D, i), Lj = divisor_lambda(E, k - i);
      parts.push_back(divisor_mul(Li, Lj));
    }
    DivisorPoly rhs = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) rhs = divisor_add(rhs, parts[i]);
    EXPECT_EQ(divisor_lambda(sum, k), rhs) << k;
  }
}

TEST(Divisor, FrobeniusShortcut) {
  auto R = PolyRing::make(Field::prime(2), {"a", "b"});
  auto Q = QuotientRing::make(R, std::vector<std::string>{"a^4", "b^4"});
  auto f = honda_fgl(2, 2, 32);
  std::vector<Poly> cs = {Q->parse("a + b"), Q->parse("a*b + a^2")};
  DivisorPoly D(Q, f, 2, cs);
  auto fast = divisor_psi(D, 2);
  EXPECT_EQ(fast, divisor_psi(D, 2, PsiRoute::universal));
  for (int k = 1; k <= 2; ++k) EXPECT_EQ(fast.coeff(k), Q->pow(D.coeff(k), 4));
}

TEST(Divisor, PsiTruncation) {
  // over Z(1, d) for (p, n) = (2, 2): c_i^4 = 0 forces psi^2 D = d[0]
  auto R = PolyRing::make(Field::f4(), {"c1", "c2"});
  auto Q = QuotientRing::make(R, std::vector<std::string>{"c1^4", "c2^4"});
  EXPECT_EQ(Q->dim(), 16);
  auto f = honda_fgl(2, 2, 32);
  DivisorPoly D(Q, f, 2, {Q->var("c1"), Q->var("c2")});
  EXPECT_EQ(divisor_psi(D, 2), DivisorPoly::zero_point(Q, f, 2));
}

TEST(Divisor, RejectsMismatchedRings) {
  auto& S = split();
  auto R = PolyRing::make(Field::f4(), {"z"});
  auto Q2 = QuotientRing::make(R, std::vector<std::string>{"z^4"});
  auto D = DivisorPoly::point(S.Q, S.f, S.basis[0]);
  auto E = DivisorPoly::point(Q2, S.f, Q2->var("z"));
  EXPECT_THROW(divisor_mul(D, E), Error);
}

TEST(Presentation, SigmaThree) {
  auto P = present("sigma3", 3, 2, 1);
  EXPECT_TRUE(P.certified);
  EXPECT_EQ(P.dim(), 5);
  EXPECT_EQ(single_generator_exponent(*P.Q), 5);
}

TEST(Presentation, RaisingVKeepsDimension) {
  EXPECT_EQ(present("sigma3", 3, 2, 2).dim(), 5);
}

TEST(Presentation, SmallGroups) {
  EXPECT_EQ(present("trivial", 2, 2, 1).dim(), 1);
  auto C2 = present("C2", 2, 2, 1);
  EXPECT_TRUE(C2.certified);
  EXPECT_EQ(C2.dim(), 4);
  EXPECT_EQ(present("C3", 3, 1, 1).dim(), 3);
}

// For abelian A the presentation has one basis element per homomorphism
// A* -> Theta(v).
TEST(Presentation, AbelianDimensionMatchesOmegaCh) {
  for (auto [name, p, n] : std::vector<std::tuple<std::string, int, int>>{{"C2", 2, 1}, {"C2xC2", 2, 1}, {"C3", 3, 1}}) {
    RepRing R(builtin_table(name));
    EXPECT_EQ(present(name, p, n, 1).dim(), static_cast<int>(enumerate_omega_ch(R, p, n, 1).size())) << name;
  }
}

TEST(Pipelines, SigmaThree) {
  auto c = sigma3_pipeline();
  EXPECT_TRUE(c.pass()) << c.text();
}

TEST(Pipelines, SigmaFour) {
  auto c = sigma4_pipeline();
  EXPECT_TRUE(c.pass()) << c.text();
  EXPECT_NO_THROW(c.require());
}

TEST(Pipelines, SpecialDivisors) {
  auto c = sdiv_checks();
  EXPECT_TRUE(c.pass()) << c.text();
}

TEST(Pipelines, NonPositiveWitness) {
  for (int n : {2, 3}) {
    auto c = nonpositive_divisor_witness(n);
    EXPECT_TRUE(c.pass()) << c.text();
  }
}

TEST(Pipelines, CertificateJsonRoundTrip) {
  auto c = sdiv_checks();
  auto back = Certificate::parse(c.dump());
  EXPECT_EQ(back.dump(), c.dump());
  auto j = c.to_json();
  j["status"] = "fail";
  EXPECT_THROW(Certificate::from_json(j), Error);
}

TEST(Pipelines, PropertySweep) {
  for (std::uint64_t seed : {1ULL, 20260101ULL}) {
    auto c = property_sweep(seed, 10);
    EXPECT_TRUE(c.pass()) << c.text();
  }
}
