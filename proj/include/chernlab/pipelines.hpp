#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chernlab/certificate.hpp"
#include "chernlab/chern.hpp"
#include "chernlab/fgl.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/newton.hpp"
#include "chernlab/omega.hpp"
#include "chernlab/repring.hpp"
#include "chernlab/xspec.hpp"

namespace chernlab {

namespace detail {

inline bool same_poly(const RingPtr& R, const Poly& got, const std::string& want) { return got == parse_poly(R, want); }

inline Poly below(const Poly& p, int a, int b = -1) {
  return p.filtered([&](const Monomial& m) { return m.e[0] < a && (b < 0 || m.e[1] < b); });
}

inline Tuple perm_tuple(const GroupModel& G, const std::vector<std::vector<int>>& ps) {
  Tuple u;
  for (auto& p : ps) {
    auto it = std::find(G.perms.begin(), G.perms.end(), p);
    if (it == G.perms.end()) throw ValidationError("permutation not in the group model");
    u.push_back(static_cast<int>(it - G.perms.begin()));
  }
  return u;
}

inline Tuple least_conjugate(const GroupModel& G, const Tuple& u) {
  Tuple best = u, t(u.size());
  for (int h = 0; h < G.order; ++h) {
    for (std::size_t k = 0; k < u.size(); ++k) t[k] = G.conj(h, u[k]);
    best = std::min(best, t);
  }
  return best;
}

}  // namespace detail

/// The [k]-series and the addition law of the Honda law at (2,2) or (3,2).
inline Certificate fgl_certificate(int p, int n, int prec = 32) {
  Certificate cert;
  cert.pipeline = "fgl";
  cert.params = {{"p", p}, {"n", n}, {"prec", prec}};
  auto f = honda_fgl(p, n, prec);
  auto R = PolyRing::make(Field::prime(p), {"x", "y"});
  auto check = [&](const std::string& name, const Poly& got, const std::string& want) {
    bool ok = detail::same_poly(R, got, want);
    cert.add(name, ok, {{"expected", parse_poly(R, want).to_string()}, {"got", got.to_string()}});
  };
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  check("[" + std::to_string(p) + "](x) = x^" + std::to_string(q), f->series_poly(p, R), "x^" + std::to_string(q));
  cert.add("[k](x) by iterated addition agrees", f->series_by_addition(-1) == f->series(-1) &&
                                                    f->series_by_addition(2) == f->series(2));
  Poly F = f->as_poly(R);
  if (p == 2 && n == 2) {
    check("[-1](x) = x + x^4 + x^10 + x^16 + x^22", f->series_poly(-1, R), "x + x^4 + x^10 + x^16 + x^22");
    check("F(x,y) = x + y + x^2 y^2 mod (x^4, y^4)", detail::below(F, 4, 4), "x + y + x^2*y^2");
  } else if (p == 3 && n == 2) {
    check("[-1](x) = -x", f->series_poly(-1, R), "-x");
    check("F(x,y) = x + y mod (x^3, y^3)", detail::below(F, 3, 3), "x + y");
    check("[2](x) = -x + x^9 mod x^12", detail::below(f->series_poly(2, R), 12), "-x + x^9");
  }
  return cert;
}

/// |Omega(sigma4)| by strata, |Omega_Ch| and bijectivity of kappa.
inline Certificate sigma4_census(int n = 2) {
  Certificate cert;
  cert.pipeline = "sigma4-census";
  cert.params = {{"p", 2}, {"n", n}, {"v", 2}};
  GroupModel G = builtin_model("sigma4");
  CharacterTable t = sigma4_table();
  RepRing R(t);
  auto om = enumerate_omega(G, 2, n);
  std::vector<long long> strata(5, 0);
  for (auto& u : om.reps) ++strata[sigma4_stratum(G, u)];
  auto formula = sigma4_strata_formula(n);
  long long total = 0;
  for (auto x : formula) total += x;
  cert.add("|Omega| = " + std::to_string(total), static_cast<long long>(om.reps.size()) == total, {{"count", om.reps.size()}});
  cert.add("stratum sizes match the formulas", strata == formula, {{"strata", strata}, {"formula", formula}});
  auto ch = enumerate_omega_ch(R, 2, n, 2);
  cert.add("|Omega_Ch| = " + std::to_string(total), static_cast<long long>(ch.size()) == total, {{"count", ch.size()}});
  std::set<OmegaChElem> img, all(ch.begin(), ch.end());
  for (auto& u : om.reps) img.insert(kappa(G, t, u, 2, 2));
  cert.add("kappa injective", img.size() == om.reps.size());
  cert.add("kappa surjective", img == all);
  cert.add("sigma4 pairs (d, u) count", static_cast<long long>(sigma4_pairs(Lattice(2, 2, n)).size()) == total);
  return cert;
}

/// Closed form for lambda^k(p^{d-1} rho_C) against the brute-force expansion.
inline Certificate lambda_rho_certificate() {
  Certificate cert;
  cert.pipeline = "lambda-rho";
  std::string why;
  bool ok32 = check_lambda_regular(3, 2, false, &why);
  cert.add("(3,2) closed form, all k", ok32, {{"first failure", why}});
  why.clear();
  bool lit22 = check_lambda_regular(2, 2, false, &why);
  auto br = lambda_multiple_regular(2, 2);
  cert.add("(2,2) literal closed form fails at k=2 (lambda_t(rho_C) = 1 - t^2 mod rho_C)", !lit22 && why == "k=2",
           {{"lambda^2(2 rho_C) coefficients", br[2]}});
  cert.add("(2,2) sign-corrected closed form, all k", check_lambda_regular(2, 2, true));
  bool ok31 = check_lambda_regular(3, 1);
  cert.add("(3,1) closed form, all k", ok31);
  return cert;
}

/// Census of U(G) against Omega and kappa for the extraspecial group.
/// Golden values are recorded for (3,2,2).
inline Certificate xspec_certificate(int p, int d, int n) {
  Certificate cert;
  cert.pipeline = "xspec";
  cert.params = {{"p", p}, {"d", d}, {"n", n}};
  auto c = xspec_census(p, d, n);
  json w = {{"U", c.U}, {"omega", c.omega}, {"kappa_image", c.kappa_image}, {"isotropic", c.isotropic}, {"deficit", c.deficit}};
  cert.add("group model: classes, center, exponent", c.classes_ok && c.center_ok && c.exponent_ok);
  cert.add("every pair satisfies the U equation", c.equation_ok);
  cert.add("kappa injective", c.kappa_injective, w);
  cert.add("kappa image = isotropic pairs", c.image_is_isotropic_part);
  cert.add("deficit = non-isotropic pairs", c.deficit == c.U - c.isotropic);
  if (p == 3 && d == 2 && n == 2) {
    cert.add("deficit > 0", c.deficit > 0, {{"deficit", c.deficit}});
    cert.add("golden counts", c.U == 7209 && c.omega == 2889 && c.deficit == 4320, w);
  }
  auto tc = extraspecial_table_checks(p, d);
  cert.add("table: linear * phi(z) = phi(z)", tc.linear_times_phi);
  cert.add("table: phi products", tc.phi_products);
  cert.add("table: psi on linear characters and phi", tc.psi_linear && tc.psi_phi);
  cert.add("table: lambda^k phi closed form", tc.lambda_phi_table);
  cert.add("table: lambda^k phi restricted to Z and to non-central C", tc.lambda_phi_center && tc.lambda_phi_noncentral);
  return cert;
}

/// Two V4-homs into sigma6 that are pointwise conjugate but not conjugate.
inline Certificate sigma6_collision() {
  Certificate cert;
  cert.pipeline = "sigma6";
  cert.params = {{"p", 2}, {"n", 2}};
  GroupModel G = symmetric_model(6);
  // regular on {0,1,2,3}, fixing 4 and 5
  Tuple u1 = detail::perm_tuple(G, {{1, 0, 3, 2, 4, 5}, {2, 3, 0, 1, 4, 5}});
  // three 2-point blocks {0,1}, {2,3}, {4,5}
  Tuple u2 = detail::perm_tuple(G, {{1, 0, 2, 3, 5, 4}, {0, 1, 3, 2, 5, 4}});
  bool homs = G.commute(u1[0], u1[1]) && G.commute(u2[0], u2[1]);
  for (int g : {u1[0], u1[1], u2[0], u2[1]}) homs = homs && G.elt_order[g] == 2;
  cert.add("both tuples are commuting pairs of involutions", homs);
  auto V = enumerate_omega_variants(G, 2, 2, OmegaVariant::pointwise);
  auto idx = [&](const Tuple& u) {
    auto r = detail::least_conjugate(G, u);
    auto it = std::lower_bound(V.omega.reps.begin(), V.omega.reps.end(), r);
    if (it == V.omega.reps.end() || *it != r) throw ValidationError("tuple missing from the Omega census");
    return static_cast<int>(it - V.omega.reps.begin());
  };
  int i1 = idx(u1), i2 = idx(u2);
  cert.add("distinct in Omega", i1 != i2, {{"omega", V.omega.reps.size()}});
  cert.add("equal in Omega'", V.omega_to_prime[i1] == V.omega_to_prime[i2], {{"omega_prime", V.prime.size()}});
  cert.add("pointwise signatures agree",
           pointwise_signature(G, u1, V.domain) == pointwise_signature(G, u2, V.domain));
  std::vector<long long> perm_char(G.fixed_points.begin(), G.fixed_points.end());
  auto k1 = kappa_class_function(G, perm_char, u1, 2, 1);
  auto k2 = kappa_class_function(G, perm_char, u2, 2, 1);
  Lattice L(2, 1, 2);
  auto want = LatticeDivisor::parse(L, "3[0,0] + [1,0] + [0,1] + [1,1]");
  cert.add("kappa(pi) = 3[0] + [a] + [b] + [c] for both", k1 == want && k2 == want,
           {{"first", k1.to_string()}, {"second", k2.to_string()}});
  return cert;
}

/// For abelian A, Omega_Ch(A) is Hom(A*, Theta(v)): every element sends each
/// (linear) irreducible to one point, multiplicatively.
inline Certificate abelian_oracle(const std::string& group, int p = 2, int n = 2) {
  Certificate cert;
  cert.pipeline = "abelian";
  GroupModel G = builtin_model(group);
  CharacterTable t = builtin_table(group);
  RepRing R(t);
  int v = std::max(1, p_part_exponent(G, p));
  cert.params = {{"group", group}, {"p", p}, {"n", n}, {"v", v}};
  Lattice L(p, v, n);
  auto ch = enumerate_omega_ch(R, p, n, v);
  int h = R.h();
  // |Hom(A*, Theta(v))| by brute force over assignments of irreducibles to
  // points, using the character group A* = Irr(A) directly
  std::vector<std::uint32_t> img(h, 0);
  std::function<long long(int)> count = [&](int i) -> long long {
    if (i == h) {
      for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
          auto prod = R.product(a, b);
          int k = static_cast<int>(std::find(prod.c.begin(), prod.c.end(), 1) - prod.c.begin());
          if (L.add(img[a], img[b]) != img[k]) return 0;
        }
      return 1;
    }
    long long s = 0;
    for (std::uint32_t x = 0; x < L.size(); ++x) {
      img[i] = x;
      s += count(i + 1);
    }
    return s;
  };
  long long homs = count(0);
  bool points = true, mult = true;
  std::set<std::vector<std::uint32_t>> maps;
  for (auto& f : ch) {
    std::vector<std::uint32_t> m;
    for (int i = 0; i < h; ++i) {
      points = points && f[i].dim() == 1;
      m.push_back(f[i].points().at(0));
    }
    for (int a = 0; a < h && points; ++a)
      for (int b = 0; b < h; ++b) {
        auto prod = R.product(a, b);
        int k = static_cast<int>(std::find(prod.c.begin(), prod.c.end(), 1) - prod.c.begin());
        mult = mult && L.add(m[a], m[b]) == m[k];
      }
    maps.insert(m);
  }
  cert.add("every element is a point per character", points);
  cert.add("elements are homomorphisms A* -> Theta(v)", mult);
  cert.add("|Omega_Ch| = |Hom(A*, Theta(v))|", static_cast<long long>(maps.size()) == homs && maps.size() == ch.size(),
           {{"omega_ch", ch.size()}, {"hom", homs}});
  auto om = enumerate_omega(G, p, n);
  std::set<OmegaChElem> img_k, all(ch.begin(), ch.end());
  for (auto& u : om.reps) img_k.insert(kappa(G, t, u, p, v));
  cert.add("kappa is a bijection", img_k == all && img_k.size() == om.reps.size(), {{"omega", om.reps.size()}});
  return cert;
}

namespace detail {

/// Newton adapter for virtual lattice elements.
struct VirtualOps {
  using value_type = VirtualLattice;
  Lattice L;
  VirtualLattice zero() const { return VirtualLattice(L); }
  VirtualLattice one() const { return VirtualLattice::unit(L); }
  VirtualLattice add(const VirtualLattice& a, const VirtualLattice& b) const { return a + b; }
  VirtualLattice sub(const VirtualLattice& a, const VirtualLattice& b) const { return a - b; }
  VirtualLattice mul(const VirtualLattice& a, const VirtualLattice& b) const { return a * b; }
  VirtualLattice mul_int(const VirtualLattice& a, long long k) const { return a.scaled(k); }
  std::optional<VirtualLattice> div_exact(const VirtualLattice& a, long long k) const {
    VirtualLattice r(L);
    for (auto& [c, m] : a.terms()) {
      if (m % k) return std::nullopt;
      r.add_point(c, m / k);
    }
    return r;
  }
};

inline LatticeDivisor random_divisor(std::mt19937_64& rng, const Lattice& L, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<std::uint32_t> pt(0, L.size() - 1);
  std::vector<std::uint32_t> cs;
  for (int i = deg(rng); i > 0; --i) cs.push_back(pt(rng));
  return LatticeDivisor::from_codes(L, cs);
}

inline Poly random_in_max_ideal(std::mt19937_64& rng, const QuotientRing& Q) {
  std::uniform_int_distribution<Coef> coef(0, static_cast<Coef>(Q.F().q() - 1));
  Poly r = Q.zero();
  for (auto& m : Q.standard()) {
    bool constant = true;
    for (auto e : m.e) constant = constant && e == 0;
    if (constant) continue;
    Coef c = coef(rng);
    if (c) r += Poly::monomial(Q.ring(), m, c);
  }
  return Q.reduce(r);
}

}  // namespace detail

/// Seeded sweep over the algebraic invariants; `rounds` random cases each.
inline Certificate property_sweep(std::uint64_t seed, int rounds = 20) {
  Certificate cert;
  cert.pipeline = "properties";
  cert.params = {{"seed", seed}, {"rounds", rounds}};
  std::mt19937_64 rng(seed);

  Lattice L(2, 1, 2);
  bool semiring = true, lambda_add = true, psi_ok = true, lambda_routes = true, newton_lat = true;
  for (int r = 0; r < rounds; ++r) {
    auto a = detail::random_divisor(rng, L, 3), b = detail::random_divisor(rng, L, 3), c = detail::random_divisor(rng, L, 3);
    semiring = semiring && (a + b) * c == a * c + b * c && a * b == b * a && (a * b) * c == a * (b * c) &&
               a * LatticeDivisor::zero_point(L) == a;
    for (long long k = 0; k <= a.dim() + b.dim(); ++k) {
      LatticeDivisor s(L);
      for (long long i = 0; i <= k; ++i) s = s + a.lambda(i) * b.lambda(k - i);
      lambda_add = lambda_add && (a + b).lambda(k) == s;
      lambda_routes = lambda_routes && a.lambda_enumerate(k) == a.lambda_addition(k);
    }
    for (long long k : {-1LL, 0LL, 1LL, 2LL, 3LL})
      psi_ok = psi_ok && (a + b).psi(k) == a.psi(k) + b.psi(k) && (a * b).psi(k) == a.psi(k) * b.psi(k) &&
               a.psi(k).psi(2) == a.psi(2 * k);
    // Newton: psi^k from the lambda series equals the Adams operation
    int K = static_cast<int>(a.dim());
    detail::VirtualOps ops{L};
    std::vector<VirtualLattice> lam;
    for (int k = 0; k <= K; ++k) lam.push_back(a.lambda(k).to_virtual());
    auto ps = lambda_to_psi(ops, lam);
    for (int k = 1; k <= K; ++k) newton_lat = newton_lat && ps[k] == a.psi(k).to_virtual();
    newton_lat = newton_lat && psi_to_lambda(ops, ps) == lam;
  }
  cert.add("N[Theta(1)] semiring axioms", semiring);
  cert.add("lambda addition law", lambda_add);
  cert.add("lambda by subsets = lambda by addition", lambda_routes);
  cert.add("psi additive, multiplicative, psi^k psi^2 = psi^{2k}", psi_ok);
  cert.add("Newton: psi from lambda on N[Theta(1)] and back", newton_lat);

  bool newton_int = true;
  for (int r = 0; r < rounds; ++r) {
    std::uniform_int_distribution<long long> x(-9, 9);
    std::vector<long long> lam{1};
    for (int k = 0; k < 6; ++k) lam.push_back(x(rng));
    IntRing Z;
    newton_int = newton_int && psi_to_lambda(Z, lambda_to_psi(Z, lam)) == lam;
  }
  cert.add("Newton round trip over Z", newton_int);

  // Frobenius shortcut against the universal route, Honda (2,2) over F2
  auto f = honda_fgl(2, 2, 32);
  auto Q = QuotientRing::make(PolyRing::make(Field::prime(2), {"a", "b"}), std::vector<std::string>{"a^4", "b^4"});
  bool frob = true, trunc = true;
  for (int r = 0; r < std::min(rounds, 4); ++r) {
    DivisorPoly D(Q, f, 2, {detail::random_in_max_ideal(rng, *Q), detail::random_in_max_ideal(rng, *Q)});
    auto fast = divisor_psi(D, 2), slow = divisor_psi(D, 2, PsiRoute::universal);
    frob = frob && fast == slow && fast.c[0] == Q->pow(D.c[0], 4) && fast.c[1] == Q->pow(D.c[1], 4);
    trunc = trunc && divisor_psi(D, 2).c == std::vector<Poly>(2, Q->zero());
  }
  cert.add("c_k(psi^2 D) = c_k(D)^4, shortcut = universal route", frob);
  cert.add("psi^{p^v} kills D on Z(1,2)", trunc);

  // height one: a_j = xi(lambda^j D) for the multiplicative law
  auto QM = QuotientRing::make(PolyRing::make(Field::prime(3), {"x"}), std::vector<std::string>{"x^9"});
  QuotientOps qo(*QM);
  bool aj = true;
  for (int r = 0; r < rounds; ++r) {
    std::vector<Poly> D;
    for (int i = 0; i < 3; ++i) D.push_back(QM->one() + detail::random_in_max_ideal(rng, *QM));
    auto res = xi_eval(qo, D);
    aj = aj && res.a == res.xi_lambda;
  }
  ZMod z8(8);
  for (int r = 0; r < rounds; ++r) {
    std::uniform_int_distribution<long long> u(0, 3);
    std::vector<long long> D{2 * u(rng) + 1, 2 * u(rng) + 1};
    auto res = xi_eval(z8, D);
    aj = aj && res.a == res.xi_lambda;
  }
  cert.add("a_j(D) = xi(lambda^j D), multiplicative law", aj);

  // Omega chain on the builtins
  bool chain = true;
  json counts = json::array();
  for (auto& name : builtin_names()) {
    GroupModel G = builtin_model(name);
    CharacterTable t = builtin_table(name);
    RepRing R(t);
    std::set<int> primes;
    for (int q = 2; q <= G.order; ++q)
      if (G.order % q == 0 && detail::is_prime(q)) primes.insert(q);
    if (primes.empty()) primes.insert(2);
    for (int p : primes) {
      auto V = enumerate_omega_variants(G, p, 2);
      int v = std::max(1, V.omega.w);
      auto ch = enumerate_omega_ch(R, p, 2, v);
      std::set<OmegaChElem> img;
      for (auto& u : V.omega.reps) img.insert(kappa(G, t, u, p, v));
      std::set<OmegaChElem> all(ch.begin(), ch.end());
      bool ok = V.prime.size() <= V.omega.reps.size() && V.prime.size() <= ch.size() &&
                V.dprime_count >= static_cast<long>(V.prime.size()) &&
                std::includes(all.begin(), all.end(), img.begin(), img.end());
      chain = chain && ok;
      counts.push_back({{"group", name}, {"p", p}, {"omega", V.omega.reps.size()}, {"omega_prime", V.prime.size()},
                        {"omega_ch", ch.size()}, {"omega_dprime", V.dprime_count.get_str()}});
    }
  }
  cert.add("|Omega'| <= |Omega|, |Omega_Ch|, |Omega''| and kappa lands in Omega_Ch", chain, {{"counts", counts}});

  // dim Z(v,d) = p^{ndv}
  bool zdim = true;
  json zs = json::array();
  for (int p : {2, 3})
    for (auto [n, v, d] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 1, 2}, {1, 2, 2}}) {
      long long e = 1;
      for (int i = 0; i < n * v; ++i) e *= p;
      std::vector<std::string> names, rels;
      for (int k = 1; k <= d; ++k) {
        names.push_back("c" + std::to_string(k));
        rels.push_back(names.back() + "^" + std::to_string(e));
      }
      auto Z = QuotientRing::make(PolyRing::make(Field::prime(p), names), rels);
      long long want = 1;
      for (int i = 0; i < d; ++i) want *= e;
      zdim = zdim && Z->dim() == want;
      zs.push_back({{"p", p}, {"n", n}, {"v", v}, {"d", d}, {"dim", Z->dim()}});
    }
  cert.add("dim Z(v,d) = p^{ndv}", zdim, {{"cases", zs}});
  return cert;
}

}  // namespace chernlab
