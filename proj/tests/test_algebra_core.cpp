#include <random>

#include <gtest/gtest.h>

#include "chernlab/fgl.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/linalg.hpp"
#include "chernlab/subst.hpp"
#include "chernlab/symmetric.hpp"

using namespace chernlab;

namespace {

RingPtr ring(FieldPtr F, std::vector<std::string> names, const std::string& order = "lex") {
  auto ord = PolyRing::parse_order(order, names);
  return PolyRing::make(std::move(F), std::move(names), ord);
}

std::vector<Poly> polys(const RingPtr& R, const std::vector<std::string>& s) {
  std::vector<Poly> out;
  for (auto& x : s) out.push_back(parse_poly(R, x));
  return out;
}

void check_field_axioms(const FieldPtr& F, const std::vector<Coef>& elems) {
  for (Coef a : elems) {
    EXPECT_EQ(F->add(a, 0), a);
    EXPECT_EQ(F->mul(a, 1), a);
    EXPECT_EQ(F->add(a, F->neg(a)), 0);
    if (a != 0) {
      EXPECT_EQ(F->mul(a, F->inv(a)), 1);
    }
    for (Coef b : elems) {
      EXPECT_EQ(F->add(a, b), F->add(b, a));
      EXPECT_EQ(F->mul(a, b), F->mul(b, a));
      for (Coef c : elems) {
        EXPECT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
        EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
        EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST(Field, F4Generator) {
  auto F = Field::f4();
  auto g = FieldElem::g(F);
  auto one = FieldElem::from_int(F, 1);
  EXPECT_EQ(field_arith(FieldOp::mul, g, g), field_arith(FieldOp::add, g, one));
  EXPECT_EQ(field_arith(FieldOp::frobenius, g, g), g + one);
  EXPECT_EQ(g.pow(3), one);
}

TEST(Field, ExhaustiveSmallFields) {
  for (auto F : {Field::prime(2), Field::prime(3), Field::f4()}) {
    std::vector<Coef> all;
    for (int a = 0; a < F->q(); ++a) all.push_back(static_cast<Coef>(a));
    check_field_axioms(F, all);
  }
}

TEST(Field, SampledF9) {
  auto F = Field::f9();
  std::mt19937_64 rng(9);
  std::vector<Coef> some;
  for (int i = 0; i < 6; ++i) some.push_back(static_cast<Coef>(rng() % 9));
  check_field_axioms(F, some);
  for (int a = 1; a < 9; ++a) EXPECT_EQ(F->pow(static_cast<Coef>(a), 8), 1);
}

TEST(Field, RejectsReducibleModulus) {
  EXPECT_THROW(Field::make(2, {1, 0, 1}), Error);
}

TEST(Poly, ParsePrintRoundTrip) {
  auto R = ring(Field::prime(3), {"x", "y"}, "grlex");
  auto p = parse_poly(R, "2*x^2*y + y^3 + x + 1");
  EXPECT_EQ(parse_poly(R, p.to_string()), p);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Subst, AlphaStarC2) {
  auto F = Field::f4();
  auto R = ring(F, {"x"});
  QuotientRing Q(R, {Poly::var(R, 0, 32)});
  auto f = honda_fgl(2, 2, 32);
  Poly x = Q.var("x");
  Poly xbar = fgl_mul_in_ring(*f, -1, x, Q);
  auto S = ring(F, {"c2"});
  Poly got = poly_eval_subst(parse_poly(S, "c2"), {{"c2", Q.mul(x, xbar)}}, Target(Q));
  EXPECT_EQ(got, parse_poly(R, "x^2 + x^5 + x^11 + x^17 + x^23"));
}

TEST(Groebner, AlreadyGroebner) {
  auto R = ring(Field::prime(3), {"x", "y"});
  auto G = buchberger(polys(R, {"x^2 + y", "y^2"}));
  EXPECT_TRUE(same_ideal_basis(G, reduce_basis(polys(R, {"x^2 + y", "y^2"}))));
  EXPECT_EQ(G.size(), 2u);
  EXPECT_TRUE(is_groebner_basis(G));
  EXPECT_TRUE(is_groebner_basis(polys(R, {"x^2 + y", "y^2"})));
}

TEST(Groebner, SingleGenerator) {
  auto R = ring(Field::prime(2), {"x", "y"});
  auto G = buchberger(polys(R, {"x"}));
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G[0], parse_poly(R, "x"));
}

TEST(Groebner, NormalForm) {
  auto R = ring(Field::prime(5), {"x", "y"});
  EXPECT_EQ(normal_form(parse_poly(R, "x^2"), polys(R, {"x^2 - y"})), parse_poly(R, "y"));
  EXPECT_TRUE(normal_form(Poly(R), polys(R, {"x^2 - y"})).is_zero());
}

TEST(Groebner, StandardMonomials) {
  auto R = ring(Field::prime(2), {"x", "y"});
  QuotientRing Q(R, polys(R, {"x^2", "x*y", "y^3"}));
  std::vector<std::string> got;
  for (auto& m : Q.standard()) got.push_back(R->monomial_string(m));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"1", "x", "y", "y^2"}));
  auto R1 = ring(Field::prime(2), {"x"});
  EXPECT_EQ(QuotientRing(R1, polys(R1, {"x"})).dim(), 1);
}

TEST(Groebner, InfiniteComplementThrows) {
  auto R = ring(Field::prime(2), {"x", "y"});
  EXPECT_THROW(standard_monomials(polys(R, {"x"}), R), Error);
}

TEST(Groebner, Socle) {
  auto R1 = ring(Field::prime(3), {"x"});
  QuotientRing A(R1, polys(R1, {"x^2"}));
  auto s = socle(A);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], parse_poly(R1, "x"));

  auto R2 = ring(Field::prime(2), {"x", "y"});
  QuotientRing B(R2, polys(R2, {"x^2", "y^2"}));
  s = socle(B);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], parse_poly(R2, "x*y"));
  EXPECT_TRUE(is_gorenstein(B));

  QuotientRing C(R2, polys(R2, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(socle(C).size(), 2u);
  EXPECT_FALSE(is_gorenstein(C));
}

TEST(Symmetric, GaussAlgorithm) {
  auto R = ring(Field::prime(5), {"x1", "x2"});
  auto p = symmetrize(parse_poly(R, "x1^2*x2 + x1*x2^2"));
  EXPECT_EQ(p, parse_poly(p.ring(), "e1*e2"));
  auto q = symmetrize(parse_poly(R, "x1^2 + x2^2"));
  EXPECT_EQ(q, parse_poly(q.ring(), "e1^2 - 2*e2"));
  EXPECT_THROW(symmetrize(parse_poly(R, "x1")), NotSymmetric);
}

TEST(Symmetric, ElementaryIsFixed) {
  auto R = ring(Field::prime(3), {"x1", "x2", "x3"});
  for (int k = 1; k <= 3; ++k) {
    auto e = symmetrize(elementary_symmetric(R, {0, 1, 2}, k));
    EXPECT_EQ(e, Poly::var(e.ring(), k - 1));
  }
}

// Random symmetric inputs: substituting e_k back recovers the input.
TEST(Symmetric, RoundTripProperty) {
  auto R = ring(Field::prime(7), {"x1", "x2", "x3"});
  std::mt19937_64 rng(4242);
  std::vector<Poly> es;
  for (int k = 1; k <= 3; ++k) es.push_back(elementary_symmetric(R, {0, 1, 2}, k));
  auto E = ring(Field::prime(7), {"e1", "e2", "e3"});
  for (int round = 0; round < 12; ++round) {
    Poly f(E);
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      for (int i = 0; i < 3; ++i) m.e[i] = static_cast<std::uint16_t>(rng() % 3);
      f = f + Poly::monomial(E, m, static_cast<Coef>(1 + rng() % 6));
    }
    Poly sym = substitute(f, es, Target(R));
    Poly back = symmetrize(sym);
    EXPECT_EQ(substitute(back, es, Target(R)), sym);
  }
}

TEST(Linalg, RankAndKernel) {
  auto F = Field::prime(3);
  FMatrix m(2, 3);
  m.a = {1, 2, 0, 2, 1, 0};
  EXPECT_EQ(rank(*F, m), 1);
  auto k = kernel(*F, m);
  EXPECT_EQ(k.size(), 2u);
  for (auto& v : k) EXPECT_EQ(F->add(v[0], F->mul(2, v[1])), 0);
}

// Random zero-dimensional ideals: standard-monomial count equals the rank
// of the span reached from 1 by multiplication; normal forms separate cosets.
TEST(Groebner, DimensionAndNormalFormProperty) {
  std::mt19937_64 rng(777);
  auto F = Field::prime(3);
  auto R = ring(F, {"x", "y"}, "grlex");
  for (int round = 0; round < 10; ++round) {
    std::vector<Poly> gens = {Poly::var(R, 0, 3 + static_cast<int>(rng() % 2)),
                              Poly::var(R, 1, 3 + static_cast<int>(rng() % 2))};
    Poly extra(R);
    for (int t = 0; t < 3; ++t) {
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(rng() % 3);
      m.e[1] = static_cast<std::uint16_t>(rng() % 3);
      extra = extra + Poly::monomial(R, m, static_cast<Coef>(1 + rng() % 2));
    }
    gens.push_back(extra);
    QuotientRing Q(R, gens);
    EXPECT_TRUE(is_groebner_basis(Q.basis()));
    EXPECT_EQ(Q.dim(), closure_rank(Q));
    for (auto& g : gens) EXPECT_TRUE(normal_form(g, Q.basis()).is_zero());
    Poly a = Q.parse("x*y + 2*x + 1");
    Poly b = a + Q.mul(extra, Q.parse("x + y"));
    EXPECT_EQ(Q.reduce(a), Q.reduce(b));
    EXPECT_EQ(Q.reduce(Q.reduce(b)), Q.reduce(b));
  }
}
