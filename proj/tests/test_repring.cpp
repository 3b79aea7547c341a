#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "chernlab/groups.hpp"
#include "chernlab/repring.hpp"
#include "chernlab/table_json.hpp"

using namespace chernlab;

namespace {

VirtualRep rep(std::vector<long long> c) {
  VirtualRep v;
  v.c = std::move(c);
  return v;
}

bool equal_up_to_sign(const VirtualRep& a, const VirtualRep& b) { return a == b || a == b.scaled(-1); }

VirtualRep random_rep(std::mt19937_64& rng, const RepRing& R) {
  VirtualRep v(R.h());
  for (auto& x : v.c) x = static_cast<long long>(rng() % 5) - 2;
  return v;
}

}  // namespace

TEST(RepRing, SigmaThree) {
  RepRing R(sigma3_table());
  // irreducibles 1, eps, sigma
  EXPECT_EQ(R.product(2, 2), rep({1, 1, 1}));
  EXPECT_EQ(R.lambda_irr(2, 2), rep({0, 1, 0}));
  EXPECT_EQ(R.product(1, 1), rep({1, 0, 0}));
  auto psi2 = R.adams(R.irr(2), 2);
  EXPECT_EQ(psi2, R.irr(2) + R.one() - R.irr(1));
  EXPECT_FALSE(psi2.is_positive());
}

TEST(RepRing, SigmaFour) {
  RepRing R(sigma4_table());
  // irreducibles 1, eps, sigma, rho, eps*rho
  auto rho = R.irr(3);
  EXPECT_EQ(R.lambda(rho, 3), R.irr(1));
  EXPECT_EQ(R.lambda(rho, 2), R.irr(4));
  EXPECT_EQ(R.product(1, 3), R.irr(4));
  EXPECT_EQ(R.adams(rho, 3), R.one() + R.irr(1) - R.irr(2) + rho);
  EXPECT_EQ(R.adams(rho, 2), R.one() + R.irr(2) + rho - R.irr(4));
  EXPECT_EQ(R.adams(rho, 1), rho);
}

TEST(RepRing, TrivialGroup) {
  RepRing R(trivial_table());
  EXPECT_EQ(R.h(), 1);
  EXPECT_EQ(R.product(0, 0), rep({1}));
}

TEST(RepRing, ExtraspecialClassCount) {
  auto t = builtin_table("extraspecial(3,1)");
  EXPECT_EQ(t.num_classes(), 11);
  RepRing R(t);
  long long s = 0;
  for (int i = 0; i < R.h(); ++i) s += R.dim(i) * R.dim(i);
  EXPECT_EQ(s, 27);
}

TEST(RepRing, BuiltinTablesAreConsistent) {
  for (auto& name : builtin_names()) {
    RepRing R(builtin_table(name));
    long long s = 0;
    for (int i = 0; i < R.h(); ++i) s += R.dim(i) * R.dim(i);
    EXPECT_EQ(s, R.table().order) << name;
    for (int i = 0; i < R.h(); ++i)
      for (int j = 0; j < R.h(); ++j) {
        EXPECT_TRUE(R.product(i, j).is_positive());
        EXPECT_EQ(R.dim(R.product(i, j)), R.dim(i) * R.dim(j));
      }
  }
}

TEST(RepRing, NotACharacterTable) {
  auto t = sigma3_table();
  t.chi[2] = t.chi[1];
  EXPECT_THROW(RepRing{t}, Error);
}

TEST(Restriction, SigmaFourD8) {
  RepRing G(sigma4_table()), H(d8_table());
  auto k = restriction_kernel(G, H, d8_into_sigma4());
  ASSERT_EQ(k.generators.size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(k.generators[0], G.irr(2) - G.one() - G.irr(1)));
  EXPECT_EQ(k.quotient_rank, 4);
}

TEST(Restriction, SigmaThreeC3) {
  RepRing G(sigma3_table()), H(builtin_table("C3"));
  auto k = restriction_kernel(G, H, c3_into_sigma3());
  ASSERT_EQ(k.generators.size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(k.generators[0], G.irr(1) - G.one()));
}

TEST(Restriction, IdentityFusion) {
  RepRing G(sigma4_table());
  std::vector<int> id(G.h());
  std::iota(id.begin(), id.end(), 0);
  auto k = restriction_kernel(G, G, id);
  EXPECT_TRUE(k.generators.empty());
  EXPECT_EQ(k.quotient_rank, G.h());
}

TEST(Restriction, InconsistentFusion) {
  RepRing G(sigma4_table()), H(d8_table());
  EXPECT_THROW(restriction_kernel(G, H, {0, 3, 4, 1, 2}), InconsistentFusion);
}

TEST(RepRing, AdamsProperties) {
  std::mt19937_64 rng(31);
  for (auto& name : builtin_names()) {
    RepRing R(builtin_table(name));
    long long e = R.table().exponent;
    for (int round = 0; round < 6; ++round) {
      auto a = random_rep(rng, R), b = random_rep(rng, R);
      for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(R.adams(a + b, k), R.adams(a, k) + R.adams(b, k));
        EXPECT_EQ(R.adams(R.mul(a, b), k), R.mul(R.adams(a, k), R.adams(b, k)));
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(R.adams(R.adams(a, j), k), R.adams(a, j * k));
      }
      EXPECT_EQ(R.adams(a, e), R.one().scaled(R.dim(a)));
    }
  }
}

TEST(RepRing, AdamsPermutesIrreduciblesForUnits) {
  for (auto& name : builtin_names()) {
    RepRing R(builtin_table(name));
    long long g = R.table().order;
    for (long long k = 1; k <= 2 * g; ++k) {
      if (std::gcd(k, g) != 1) continue;
      std::vector<int> hit(R.h(), 0);
      for (int i = 0; i < R.h(); ++i) {
        auto im = R.adams(R.irr(i), k);
        bool single = false;
        for (int j = 0; j < R.h(); ++j)
          if (im == R.irr(j)) {
            ++hit[j];
            single = true;
          }
        EXPECT_TRUE(single) << name << " k=" << k;
      }
      for (int j = 0; j < R.h(); ++j) EXPECT_EQ(hit[j], 1) << name << " k=" << k;
    }
  }
}

TEST(RepRing, LambdaSeriesIsAdditive) {
  std::mt19937_64 rng(32);
  for (auto name : {"sigma3", "sigma4", "D8", "C2xC2"}) {
    RepRing R(builtin_table(name));
    for (int round = 0; round < 4; ++round) {
      VirtualRep a(R.h()), b(R.h());
      for (auto& x : a.c) x = static_cast<long long>(rng() % 2);
      for (auto& x : b.c) x = static_cast<long long>(rng() % 2);
      int K = 5;
      auto la = R.lambda_series(a, K), lb = R.lambda_series(b, K), ls = R.lambda_series(a + b, K);
      for (int k = 0; k <= K; ++k) {
        VirtualRep rhs = R.zero();
        for (int i = 0; i <= k; ++i) rhs = rhs + R.mul(la[i], lb[k - i]);
        EXPECT_EQ(ls[k], rhs) << name << " k=" << k;
      }
    }
  }
}

TEST(RepRing, LambdaOfRegularCyclic) {
  std::string why;
  EXPECT_TRUE(check_lambda_regular(3, 2, false, &why)) << why;
  EXPECT_TRUE(check_lambda_regular(3, 1, false, &why)) << why;
  EXPECT_TRUE(check_lambda_regular(2, 2, true, &why)) << why;
  EXPECT_FALSE(check_lambda_regular(2, 2, false));
}

TEST(TableJson, RoundTrip) {
  for (auto& name : builtin_names()) {
    auto t = builtin_table(name);
    auto got = table_from_json(table_to_json(t));
    EXPECT_EQ(table_to_json(got.table), table_to_json(t)) << name;
  }
  auto j = table_to_json(d8_table(), TableFusion{"sigma4", d8_into_sigma4()});
  auto in = table_from_json(j);
  ASSERT_TRUE(in.fusion.has_value());
  EXPECT_EQ(in.fusion->map, d8_into_sigma4());
}

TEST(TableJson, RejectsCorruption) {
  auto j = table_to_json(sigma4_table());
  auto bad = j;
  bad["irreducibles"][3]["values"][1] = json::array({1, 2});
  EXPECT_THROW(table_from_json(bad), ValidationError);
  bad = j;
  bad["schema"] = "other/0";
  EXPECT_THROW(table_from_json(bad), SchemaError);
  bad = j;
  bad["extra"] = 1;
  EXPECT_THROW(table_from_json(bad), SchemaError);
}
