#include <random>

#include <gtest/gtest.h>

#include "chernlab/fgl.hpp"
#include "chernlab/groebner.hpp"

using namespace chernlab;

namespace {

RingPtr lex_ring(FieldPtr F, std::vector<std::string> names) { return PolyRing::make(std::move(F), std::move(names)); }

std::vector<Coef> poly_series(std::initializer_list<std::pair<int, Coef>> terms, int prec) {
  std::vector<Coef> s(prec, 0);
  for (auto [i, c] : terms) s[i] = c;
  return s;
}

}  // namespace

TEST(Honda, AdditionLawLowTerms) {
  auto f = honda_fgl(2, 2, 32);
  auto R = lex_ring(Field::prime(2), {"x", "y"});
  QuotientRing Q(R, {Poly::var(R, 0, 4), Poly::var(R, 1, 4)});
  EXPECT_EQ(Q.reduce(f->as_poly(R)), parse_poly(R, "x + y + x^2*y^2"));

  auto g = honda_fgl(3, 2, 16);
  auto R3 = lex_ring(Field::prime(3), {"x", "y"});
  QuotientRing Q3(R3, {Poly::var(R3, 0, 3), Poly::var(R3, 1, 3)});
  EXPECT_EQ(Q3.reduce(g->as_poly(R3)), parse_poly(R3, "x + y"));
}

TEST(Honda, MinusOneSeries) {
  auto f = honda_fgl(2, 2, 32);
  EXPECT_EQ(f->series(-1), poly_series({{1, 1}, {4, 1}, {10, 1}, {16, 1}, {22, 1}}, 32));
  auto g = honda_fgl(3, 2, 32);
  EXPECT_EQ(g->series(-1), poly_series({{1, 2}}, 32));
}

TEST(Honda, TwoSeriesAtThree) {
  auto g = honda_fgl(3, 2, 32);
  auto s = g->series(2);
  s.resize(12);
  EXPECT_EQ(s, poly_series({{1, 2}, {9, 1}}, 12));
}

TEST(Honda, PSeriesIsMonomial) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    auto f = honda_fgl(p, n, 32);
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    std::vector<Coef> want(32, 0);
    if (pn < 32) want[pn] = 1;
    EXPECT_EQ(f->series(p), want) << "p=" << p << " n=" << n;
    EXPECT_EQ(f->series(p), f->series_by_addition(p));
  }
}

TEST(Honda, UnitAndCommutativity) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    auto f = honda_fgl(p, n, 24);
    for (int i = 0; i < 24; ++i) {
      EXPECT_EQ(f->coeff(i, 0), i == 1 ? 1u : 0u);
      EXPECT_EQ(f->coeff(0, i), i == 1 ? 1u : 0u);
      for (int j = 0; i + j < 24; ++j) EXPECT_EQ(f->coeff(i, j), f->coeff(j, i));
    }
  }
}

TEST(Honda, AssociativityOnGenerators) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}}) {
    auto f = honda_fgl(p, n, 24);
    auto R = lex_ring(Field::prime(p), {"x", "y", "z"});
    QuotientRing Q(R, {Poly::var(R, 0, 5), Poly::var(R, 1, 5), Poly::var(R, 2, 5)});
    Poly x = Q.var("x"), y = Q.var("y"), z = Q.var("z");
    Poly lhs = fgl_add_in_ring(*f, fgl_add_in_ring(*f, x, y, Q), z, Q);
    Poly rhs = fgl_add_in_ring(*f, x, fgl_add_in_ring(*f, y, z, Q), Q);
    EXPECT_EQ(lhs, rhs) << "p=" << p << " n=" << n;
    EXPECT_EQ(fgl_add_in_ring(*f, x, Q.zero(), Q), x);
  }
}

TEST(Honda, CompositionOfMultiples) {
  auto f = honda_fgl(2, 2, 32);
  for (int j = -2; j <= 4; ++j)
    for (int k = -2; k <= 4; ++k) EXPECT_EQ(f->series(j * k), f->compose(f->series(j), f->series(k))) << j << "," << k;
  for (int k = -2; k <= 4; ++k) EXPECT_EQ(f->series(k), f->series_by_addition(k)) << k;
}

TEST(Honda, AddInRing) {
  auto f = honda_fgl(2, 2, 32);
  auto F4 = Field::f4();
  auto R = lex_ring(F4, {"x", "y"});
  QuotientRing Q(R, {Poly::var(R, 0, 4), Poly::var(R, 1, 4)});
  EXPECT_EQ(fgl_add_in_ring(*f, Q.var("x"), Q.var("y"), Q), Q.parse("x + y + x^2*y^2"));
  auto R1 = lex_ring(F4, {"x"});
  QuotientRing Q1(R1, {Poly::var(R1, 0, 32)});
  EXPECT_EQ(fgl_add_in_ring(*f, Q1.var("x"), Q1.var("x"), Q1), Q1.parse("x^4"));
}

TEST(Honda, PrecisionExceeded) {
  auto f = honda_fgl(2, 2, 8);
  auto R = lex_ring(Field::prime(2), {"x"});
  QuotientRing Q(R, {Poly::var(R, 0, 32)});
  EXPECT_THROW(fgl_add_in_ring(*f, Q.var("x"), Q.var("x"), Q), PrecisionExceeded);
}

// [k](a) depends only on k mod p^w once x^{p^{nw}} = 0.
TEST(Honda, Periodicity) {
  auto f = honda_fgl(2, 2, 32);
  auto R = lex_ring(Field::f4(), {"x"});
  for (int w = 1; w <= 2; ++w) {
    int pw = 1 << w, cut = 1 << (2 * w);
    QuotientRing Q(R, {Poly::var(R, 0, cut)});
    Poly x = Q.var("x");
    for (int k = -3; k <= 5; ++k) EXPECT_EQ(fgl_mul_in_ring(*f, k, x, Q), fgl_mul_in_ring(*f, k + pw, x, Q)) << w << "," << k;
  }
}

TEST(Honda, PTorsionProperty) {
  std::mt19937_64 rng(2024);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}) {
    auto f = honda_fgl(p, n, 32);
    auto R = lex_ring(Field::prime(p), {"x", "y"});
    QuotientRing Q(R, {Poly::var(R, 0, 3), Poly::var(R, 1, 3)});
    for (int round = 0; round < 10; ++round) {
      Poly a(R);
      for (auto& m : Q.standard()) {
        if (m.degree() == 0) continue;
        a = a + Poly::monomial(R, m, static_cast<Coef>(rng() % p));
      }
      Poly cur = a;
      int steps = 0;
      while (!cur.is_zero() && steps < 8) {
        cur = fgl_mul_in_ring(*f, p, cur, Q);
        ++steps;
      }
      EXPECT_TRUE(cur.is_zero());
    }
  }
}

TEST(Multiplicative, Law) {
  auto m = multiplicative_fgl(3, 16);
  EXPECT_EQ(m->coeff(1, 0), 1u);
  EXPECT_EQ(m->coeff(1, 1), 2u);
  EXPECT_EQ(m->coeff(2, 1), 0u);
  EXPECT_EQ(m->series(3), m->series_by_addition(3));
  EXPECT_EQ(m->series(-1), m->series_by_addition(-1));
}

TEST(Honda, RejectsBadParameters) {
  EXPECT_THROW(honda_fgl(4, 1, 16), Error);
  EXPECT_THROW(honda_fgl(2, 0, 16), Error);
}
