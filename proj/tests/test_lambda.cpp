#include <random>

#include <gtest/gtest.h>

#include "chernlab/groebner.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/newton.hpp"
#include "chernlab/repring.hpp"

using namespace chernlab;

namespace {

LatticeDivisor random_divisor(std::mt19937_64& rng, const Lattice& L, int max_deg) {
  int d = 1 + static_cast<int>(rng() % max_deg);
  std::vector<std::uint32_t> codes;
  for (int i = 0; i < d; ++i) codes.push_back(static_cast<std::uint32_t>(rng() % L.size()));
  return LatticeDivisor::from_codes(L, codes);
}

// lambda^k of a multiset of points by direct enumeration of k-subsets; the
// oracle for the library's two routes.
LatticeDivisor lambda_oracle(const LatticeDivisor& D, int k) {
  auto pts = D.points();
  const Lattice& L = D.lattice();
  int m = static_cast<int>(pts.size());
  std::vector<std::uint32_t> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::uint32_t s = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s = L.add(s, pts[i]);
    out.push_back(s);
  }
  return LatticeDivisor::from_codes(L, out);
}

}  // namespace

TEST(LatticeDivisor, ParseAndPrint) {
  Lattice L(2, 1, 2);
  auto D = LatticeDivisor::parse(L, "2[0,0] + [1,0] + [1,1]");
  EXPECT_EQ(D.dim(), 4);
  EXPECT_EQ(D.to_string(), "2[0,0] + [1,0] + [1,1]");
  EXPECT_EQ(LatticeDivisor::parse(L, D.to_string()), D);
  EXPECT_THROW(LatticeDivisor::parse(L, "[0]"), Error);
}

TEST(LatticeDivisor, LambdaExamples) {
  Lattice L(2, 1, 2);
  auto a = LatticeDivisor::point(L, {1, 0}), b = LatticeDivisor::point(L, {0, 1});
  EXPECT_EQ((a + b).lambda(2), a * b);
  auto c = a * b;
  auto E = a + b + c;
  EXPECT_EQ(E.lambda(2), E);
  EXPECT_TRUE(E.lambda(4).empty());
  EXPECT_THROW(E.lambda(-1), LambdaOutOfRange);
  auto d0 = LatticeDivisor::zero_point(L, 3);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(d0.psi(k), d0);
}

TEST(LatticeDivisor, LambdaRoutesAgree) {
  std::mt19937_64 rng(11);
  Lattice L(3, 1, 2);
  for (int round = 0; round < 30; ++round) {
    auto D = random_divisor(rng, L, 7);
    for (int k = 0; k <= D.dim(); ++k) {
      auto want = lambda_oracle(D, k);
      EXPECT_EQ(D.lambda_enumerate(k), want);
      EXPECT_EQ(D.lambda_addition(k), want);
    }
  }
}

TEST(LatticeDivisor, SemiringAxioms) {
  std::mt19937_64 rng(12);
  Lattice L(2, 2, 2);
  auto one = LatticeDivisor::zero_point(L);
  LatticeDivisor zero(L);
  for (int round = 0; round < 40; ++round) {
    auto A = random_divisor(rng, L, 4), B = random_divisor(rng, L, 4), C = random_divisor(rng, L, 4);
    EXPECT_EQ(A + B, B + A);
    EXPECT_EQ(A * B, B * A);
    EXPECT_EQ((A + B) + C, A + (B + C));
    EXPECT_EQ((A * B) * C, A * (B * C));
    EXPECT_EQ(A * (B + C), A * B + A * C);
    EXPECT_EQ(A * one, A);
    EXPECT_EQ(A + zero, A);
    EXPECT_EQ((A * B).dim(), A.dim() * B.dim());
  }
}

TEST(LatticeDivisor, LambdaAdditionLawExhaustive) {
  Lattice L(2, 1, 2);
  std::vector<LatticeDivisor> all;
  for (int d = 1; d <= 2; ++d)
    for (auto& D : all_divisors(L, d)) all.push_back(D);
  for (auto& D : all)
    for (auto& E : all) {
      auto S = D + E;
      for (int k = 0; k <= S.dim(); ++k) {
        LatticeDivisor rhs(L);
        for (int i = 0; i <= k; ++i) rhs = rhs + D.lambda(i) * E.lambda(k - i);
        ASSERT_EQ(S.lambda(k), rhs) << D.to_string() << " | " << E.to_string() << " k=" << k;
      }
    }
}

TEST(LatticeDivisor, PsiProperties) {
  std::mt19937_64 rng(13);
  Lattice L(3, 1, 2);
  for (int round = 0; round < 30; ++round) {
    auto D = random_divisor(rng, L, 4), E = random_divisor(rng, L, 4);
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ((D * E).psi(k), D.psi(k) * E.psi(k));
      EXPECT_EQ((D + E).psi(k), D.psi(k) + E.psi(k));
      for (int j = 0; j <= D.dim(); ++j) EXPECT_EQ(D.lambda(j).psi(k), D.psi(k).lambda(j));
      for (int j = 1; j <= 3; ++j) EXPECT_EQ(D.psi(j).psi(k), D.psi(j * k));
    }
  }
}

TEST(LatticeDivisor, PsiPVKillsEverything) {
  for (auto [p, v, n] : std::vector<std::array<int, 3>>{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 1}}) {
    Lattice L(p, v, n);
    for (int d = 1; d <= 2; ++d)
      for (auto& D : all_divisors(L, d)) EXPECT_EQ(D.psi(L.modulus()), LatticeDivisor::zero_point(L, d));
  }
}

// A virtual element of dimension 1 whose lambda-series stops at degree one
// is a single point.
TEST(VirtualLattice, RankOnePositivity) {
  Lattice L(2, 1, 2);
  int found = 0;
  for (int d = 1; d <= 3; ++d)
    for (auto& P : all_divisors(L, d)) {
      std::vector<LatticeDivisor> negs = d == 1 ? std::vector<LatticeDivisor>{LatticeDivisor(L)} : all_divisors(L, d - 1);
      for (auto& N : negs) {
        VirtualLattice X = P.to_virtual() - N.to_virtual();
        auto lam = X.lambda_series(5);
        bool line = true;
        for (int k = 2; k <= 5; ++k) line = line && lam[k].is_zero();
        if (!line) continue;
        ++found;
        ASSERT_TRUE(X.is_positive()) << X.to_string();
        ASSERT_EQ(X.dim(), 1);
      }
    }
  EXPECT_GT(found, 0);
}

TEST(Newton, SigmaThree) {
  RepRing R(sigma3_table());
  auto V = R.vring();
  auto sigma = R.irr(2), eps = R.irr(1);
  auto psi = lambda_to_psi(V, std::vector<VirtualRep>{R.one(), sigma, eps});
  EXPECT_EQ(psi[2], R.one() - eps + sigma);
  EXPECT_EQ(psi[2], R.adams(sigma, 2));
  auto back = psi_to_lambda(V, psi);
  EXPECT_EQ(back[2], eps);
}

TEST(Newton, SigmaFourRho) {
  RepRing R(sigma4_table());
  auto lam = R.lambda_series(R.irr(3), 3);
  auto psi = newton_convert(R.vring(), lam, NewtonDirection::lambda_to_psi);
  EXPECT_EQ(psi[2], R.one() + R.irr(2) + R.irr(3) - R.irr(4));
}

TEST(Newton, LineElement) {
  IntRing Z;
  auto psi = lambda_to_psi(Z, std::vector<long long>{1, 5, 0, 0, 0});
  for (int k = 1; k <= 4; ++k) {
    long long pw = 1;
    for (int i = 0; i < k; ++i) pw *= 5;
    EXPECT_EQ(psi[k], pw);
  }
}

TEST(Newton, IntegerRoundTrip) {
  std::mt19937_64 rng(14);
  IntRing Z;
  for (int round = 0; round < 20; ++round) {
    std::vector<long long> roots;
    for (int i = 0; i < 4; ++i) roots.push_back(static_cast<long long>(rng() % 7) - 3);
    std::vector<long long> e(7, 0);
    e[0] = 1;
    for (auto r : roots)
      for (int j = 6; j >= 1; --j) e[j] += e[j - 1] * r;
    auto psi = lambda_to_psi(Z, e);
    for (int k = 1; k <= 6; ++k) {
      long long pk = 0;
      for (auto r : roots) {
        long long x = 1;
        for (int i = 0; i < k; ++i) x *= r;
        pk += x;
      }
      EXPECT_EQ(psi[k], pk);
    }
    EXPECT_EQ(psi_to_lambda(Z, psi), e);
  }
}

TEST(Newton, InexactDivision) {
  // psi_1 = 1, psi_2 = 0 needs lambda_2 = 1/2
  EXPECT_THROW(psi_to_lambda(IntRing{}, std::vector<long long>{1, 1, 0}), InexactDivision);
  EXPECT_THROW(psi_to_lambda(ZMod(4), std::vector<long long>{1, 0, 1}), InexactDivision);
}

TEST(Xi, ZModEight) {
  ZMod Z8(8);
  auto r = xi_eval(Z8, {3, 5});
  EXPECT_EQ(Z8.norm(r.xi), 0);
  EXPECT_EQ(Z8.norm(r.a[2]), 7);
  EXPECT_EQ(Z8.norm(r.xi_lambda[2]), 7);
  auto t = xi_eval(Z8, {1, 1, 1});
  EXPECT_EQ(Z8.norm(t.xi), 3);
  EXPECT_THROW(xi_eval(Z8, {2}), NotAUnit);
}

TEST(Xi, QuotientRingUnits) {
  auto R = PolyRing::make(Field::prime(3), {"x"});
  auto Q = QuotientRing::make(R, std::vector<std::string>{"x^9"});
  QuotientOps ops(*Q);
  std::vector<Poly> D = {Q->parse("1 + x"), Q->parse("1 + x^2"), Q->parse("2*x + 1")};
  auto r = xi_eval(ops, D);
  for (std::size_t j = 0; j < r.a.size(); ++j) EXPECT_EQ(r.a[j], r.xi_lambda[j]);
  EXPECT_EQ(r.xi, Q->parse("x^2 + 3"));
}
