#include <map>
#include <set>

#include <gtest/gtest.h>

#include "chernlab/groups.hpp"
#include "chernlab/omega.hpp"
#include "chernlab/pipelines.hpp"

using namespace chernlab;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

int perm_order(const Perm& a) {
  Perm id(a.size());
  std::iota(id.begin(), id.end(), 0);
  Perm x = a;
  int k = 1;
  while (x != id) {
    x = compose(a, x);
    ++k;
  }
  return k;
}

// Orbits of commuting n-tuples of p-elements under simultaneous
// conjugation, working directly on permutations.
long long brute_omega(const std::vector<Perm>& G, int p, int n) {
  std::vector<Perm> pel;
  for (auto& g : G) {
    int o = perm_order(g);
    while (o % p == 0) o /= p;
    if (o == 1) pel.push_back(g);
  }
  std::set<std::vector<Perm>> seen;
  long long orbits = 0;
  std::vector<Perm> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      if (seen.count(cur)) return;
      ++orbits;
      for (auto& h : G) {
        std::vector<Perm> c;
        for (auto& x : cur) c.push_back(compose(compose(h, x), invert(h)));
        seen.insert(c);
      }
      return;
    }
    for (auto& g : pel) {
      bool ok = true;
      for (auto& x : cur) ok = ok && compose(g, x) == compose(x, g);
      if (!ok) continue;
      cur.push_back(g);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return orbits;
}

std::vector<int> primes_of(long long m) {
  std::vector<int> out;
  for (int q = 2; q <= m; ++q)
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  return out;
}

}  // namespace

TEST(Omega, CountsAgainstBruteForce) {
  EXPECT_EQ(enumerate_omega(builtin_model("sigma4"), 2, 2).reps.size(), 17u);
  EXPECT_EQ(enumerate_omega(builtin_model("sigma3"), 3, 2).reps.size(), 5u);
  EXPECT_EQ(enumerate_omega(builtin_model("trivial"), 2, 2).reps.size(), 1u);
  for (int k : {3, 4}) {
    auto G = symmetric_model(k);
    for (int p : {2, 3})
      for (int n : {1, 2}) EXPECT_EQ(static_cast<long long>(enumerate_omega(G, p, n).reps.size()), brute_omega(G.perms, p, n));
  }
  auto D8 = builtin_model("D8");
  EXPECT_EQ(static_cast<long long>(enumerate_omega(D8, 2, 2).reps.size()), brute_omega(D8.perms, 2, 2));
}

TEST(Omega, OrbitSizesSumToTupleCount) {
  auto G = builtin_model("sigma4");
  auto c = enumerate_omega(G, 2, 2);
  long long s = 0;
  for (auto o : c.orbit) s += o;
  auto pel = p_elements(G, 2);
  long long pairs = 0;
  for (int a : pel)
    for (int b : pel) pairs += G.commute(a, b);
  EXPECT_EQ(s, pairs);
}

TEST(Omega, TrivialVariantsAreSingletons) {
  auto V = enumerate_omega_variants(builtin_model("trivial"), 2, 2, OmegaVariant::doubleprime);
  EXPECT_EQ(V.omega.reps.size(), 1u);
  EXPECT_EQ(V.prime.size(), 1u);
  EXPECT_EQ(V.dprime_count, 1);
}

TEST(Omega, SigmaFourPrimeEqualsOmega) {
  auto V = enumerate_omega_variants(builtin_model("sigma4"), 2, 2, OmegaVariant::pointwise);
  EXPECT_EQ(V.omega.reps.size(), 17u);
  EXPECT_EQ(V.prime.size(), 17u);
}

TEST(Omega, SigmaSixCollision) {
  auto c = sigma6_collision();
  EXPECT_TRUE(c.pass()) << c.text();
}

TEST(Kappa, TrivialHom) {
  auto G = builtin_model("sigma4");
  auto t = builtin_table("sigma4");
  auto f = kappa(G, t, Tuple{0, 0}, 2, 2);
  Lattice L(2, 2, 2);
  for (int i = 0; i < t.num_irr(); ++i) EXPECT_EQ(f[i], LatticeDivisor::zero_point(L, t.dim(i)));
}

TEST(Kappa, FourCycleOnRho) {
  auto G = builtin_model("sigma4");
  auto t = builtin_table("sigma4");
  int c = -1;
  for (int g = 0; g < G.order && c < 0; ++g)
    if (G.elt_order[g] == 4) c = g;
  ASSERT_GE(c, 0);
  auto f = kappa(G, t, Tuple{c, 0}, 2, 2);
  Lattice L(2, 2, 2);
  // the permutation representation is regular on <c>; rho drops the trivial summand
  EXPECT_EQ(f[3], LatticeDivisor::parse(L, "[1,0] + [2,0] + [3,0]"));
  EXPECT_EQ(f[0], LatticeDivisor::zero_point(L));
}

TEST(OmegaCh, Counts) {
  RepRing S4(sigma4_table()), S3(sigma3_table()), C2(builtin_table("C2"));
  EXPECT_EQ(enumerate_omega_ch(S4, 2, 2, 2).size(), 17u);
  EXPECT_EQ(enumerate_omega_ch(C2, 2, 2, 1).size(), 4u);
  EXPECT_EQ(enumerate_omega_ch(S3, 3, 2, 1).size(), 5u);
  EXPECT_EQ(enumerate_omega_ch(S3, 3, 2, 2).size(), 5u);
}

TEST(OmegaCh, PruningDoesNotChangeResult) {
  RepRing S4(sigma4_table());
  auto a = enumerate_omega_ch(S4, 2, 2, 2);
  auto b = enumerate_omega_ch(S4, 2, 2, 2, OmegaChOptions{false});
  EXPECT_EQ(a, b);
}

TEST(OmegaCh, ElementsSatisfyConstraints) {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"sigma4", 2}, {"sigma3", 3}, {"D8", 2}, {"C4", 2}}) {
    RepRing R(builtin_table(name));
    int v = p_part_exponent(R.table().exponent, p);
    Lattice L(p, v, 2);
    for (auto& f : enumerate_omega_ch(R, p, 2, v)) {
      EXPECT_EQ(f[0], LatticeDivisor::zero_point(L));
      for (int i = 0; i < R.h(); ++i) {
        EXPECT_EQ(f[i].dim(), R.dim(i));
        EXPECT_EQ(f[i].psi(L.modulus()), LatticeDivisor::zero_point(L, R.dim(i)));
        for (int j = 0; j < R.h(); ++j) {
          LatticeDivisor rhs(L);
          for (int k = 0; k < R.h(); ++k) rhs = rhs + f[k].scaled(R.product(i, j).c[k]);
          EXPECT_EQ(f[i] * f[j], rhs) << name;
        }
        // rank-one images are single points
        if (R.dim(i) == 1) EXPECT_EQ(f[i].points().size(), 1u);
      }
    }
  }
}

TEST(OmegaCh, XiOfKappaIsCanonicalMap) {
  auto G = builtin_model("sigma4");
  auto t = builtin_table("sigma4");
  Lattice A(2, 2, 2);
  for (auto& u : enumerate_omega(G, 2, 2).reps) {
    auto f = kappa(G, t, u, 2, 2);
    EXPECT_EQ(xi_class_map(f, t), pointwise_signature(G, u, A));
  }
}

TEST(OmegaCh, XiInjectiveOnSigmaThree) {
  auto t = sigma3_table();
  RepRing R(t);
  std::set<ClassMap> images;
  auto all = enumerate_omega_ch(R, 3, 2, 1);
  for (auto& f : all) images.insert(xi_class_map(f, t));
  EXPECT_EQ(images.size(), all.size());
}

TEST(OmegaCh, XiRejectsCorruption) {
  auto t = sigma3_table();
  Lattice L(3, 1, 2);
  OmegaChElem f = {LatticeDivisor::zero_point(L), LatticeDivisor::point(L, {1, 0}), LatticeDivisor::zero_point(L, 2)};
  EXPECT_THROW(xi_class_map(f, t), NoMatchingClass);
}

// Omega ->> Omega' and Omega' -> Omega_Ch -> Omega'' are injective, and
// kappa only sees pointwise classes.
TEST(Omega, ChainOnBuiltins) {
  for (auto& name : builtin_names()) {
    auto G = builtin_model(name);
    if (G.order == 1) continue;
    auto t = builtin_table(name);
    RepRing R(t);
    for (int p : primes_of(G.order)) {
      auto V = enumerate_omega_variants(G, p, 2, OmegaVariant::doubleprime);
      int v = std::max(1, p_part_exponent(G, p));
      auto ch = enumerate_omega_ch(R, p, 2, v);
      EXPECT_LE(V.prime.size(), V.omega.reps.size()) << name;
      EXPECT_LE(V.prime.size(), ch.size()) << name << " p=" << p;
      EXPECT_LE(mpz_class(static_cast<unsigned long>(ch.size())), V.dprime_count) << name;
      std::map<int, OmegaChElem> by_prime;
      std::set<OmegaChElem> image;
      for (std::size_t i = 0; i < V.omega.reps.size(); ++i) {
        auto f = kappa(G, t, V.omega.reps[i], p, v);
        image.insert(f);
        auto [it, fresh] = by_prime.emplace(V.omega_to_prime[i], f);
        if (!fresh) EXPECT_EQ(it->second, f) << name;
      }
      for (auto& f : image) EXPECT_TRUE(std::find(ch.begin(), ch.end(), f) != ch.end()) << name;
    }
  }
}

TEST(Omega, SigmaFourCensus) {
  auto c = sigma4_census(2);
  EXPECT_TRUE(c.pass()) << c.text();
}

TEST(Omega, AbelianOracle) {
  for (auto name : {"C2", "C4", "C2xC2"}) {
    auto c = abelian_oracle(name);
    EXPECT_TRUE(c.pass()) << c.text();
  }
}

TEST(Omega, SigmaFourStrata) {
  auto G = builtin_model("sigma4");
  std::vector<long long> count(5, 0);
  for (auto& u : enumerate_omega(G, 2, 2).reps) ++count[sigma4_stratum(G, u)];
  EXPECT_EQ(count, sigma4_strata_formula(2));
  EXPECT_EQ(sigma4_pairs(Lattice(2, 2, 2)).size(), 17u);
}
