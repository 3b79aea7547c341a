#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/limits.hpp"
#include "chernlab/omega.hpp"
#include "chernlab/repring.hpp"

namespace chernlab {

/// F_p^{2d} with the standard hyperbolic form.
struct SymplecticSpace {
  int p, d;
  SymplecticSpace(int p_, int d_) : p(p_), d(d_) {
    if (p < 3 || !detail::is_prime(p)) throw ValidationError("extraspecial groups need an odd prime");
    if (d < 1) throw ValidationError("d must be positive");
  }
  int dim() const { return 2 * d; }
  int size() const {
    int s = 1;
    for (int i = 0; i < 2 * d; ++i) s *= p;
    return s;
  }
  int form(const std::vector<int>& u, const std::vector<int>& w) const { return symplectic_form(u, w, p); }
  std::vector<int> vec(int code) const { return fp_vector(code, p, 2 * d); }
  /// Gram matrix determinant is nonzero and b(u,u) = 0.
  bool check() const {
    for (int c = 0; c < size(); ++c)
      if (form(vec(c), vec(c)) != 0) return false;
    // nondegenerate: only 0 pairs to zero with every basis vector
    for (int c = 1; c < size(); ++c) {
      bool all_zero = true;
      for (int i = 0; i < 2 * d && all_zero; ++i) {
        std::vector<int> e(2 * d, 0);
        e[i] = 1;
        all_zero = form(vec(c), e) == 0;
      }
      if (all_zero) return false;
    }
    return true;
  }
  bool isotropic(const std::vector<std::vector<int>>& vs) const {
    for (auto& a : vs)
      for (auto& b : vs)
        if (form(a, b)) return false;
    return true;
  }
};

/// alpha: V* -> Theta(1) as n rows of length 2d (alpha(l)_j = row_j . l),
/// and u a divisor of dimension p^d over Theta(1).
struct UPair {
  std::vector<std::vector<int>> alpha;
  LatticeDivisor u;
  int e = 0;  // log_p |image|
  friend bool operator<(const UPair& a, const UPair& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.u < b.u;
  }
  friend bool operator==(const UPair& a, const UPair& b) { return a.alpha == b.alpha && a.u == b.u; }
};

namespace detail {

inline std::uint32_t alpha_apply(const Lattice& L, const std::vector<std::vector<int>>& alpha, const std::vector<int>& l) {
  std::vector<int> x(L.n);
  for (int j = 0; j < L.n; ++j) {
    long long s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += static_cast<long long>(alpha[j][i]) * l[i];
    x[j] = static_cast<int>(s % L.p);
  }
  return L.encode(x);
}

inline std::vector<std::uint32_t> span_codes(const Lattice& L, const std::vector<std::uint32_t>& gens) {
  std::set<std::uint32_t> S{0};
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      auto y = L.add(x, g);
      if (S.insert(y).second) frontier.push_back(y);
    }
  }
  return {S.begin(), S.end()};
}

}  // namespace detail

inline LatticeDivisor c_alpha(const SymplecticSpace& S, const Lattice& L, const std::vector<std::vector<int>>& alpha) {
  LatticeDivisor D(L);
  for (int c = 0; c < S.size(); ++c) D = D + LatticeDivisor::point_code(L, detail::alpha_apply(L, alpha, S.vec(c)));
  return D;
}

/// u psi^{p-1}(u) = c_alpha.
inline bool upair_equation(const SymplecticSpace& S, const UPair& x) {
  const Lattice& L = x.u.lattice();
  return x.u * x.u.psi(S.p - 1) == c_alpha(S, L, x.alpha);
}

/// Every (alpha, u) from the coset classification: one u per coset of the
/// image A when |A| <= p^d.
inline std::vector<UPair> enumerate_U(int p, int d, int n) {
  SymplecticSpace S(p, d);
  Lattice L(p, 1, n);
  long long total = 1;
  for (int i = 0; i < 2 * d * n; ++i) total *= p;
  if (total > limits().tuples) throw ResourceLimit("too many alpha matrices");
  std::vector<UPair> out;
  int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  for (long long code = 0; code < total; ++code) {
    std::vector<std::vector<int>> alpha(n, std::vector<int>(2 * d));
    long long c = code;
    for (int j = n - 1; j >= 0; --j)
      for (int i = 2 * d - 1; i >= 0; --i) {
        alpha[j][i] = static_cast<int>(c % p);
        c /= p;
      }
    std::vector<std::uint32_t> gens;
    for (int i = 0; i < 2 * d; ++i) {
      std::vector<int> l(2 * d, 0);
      l[i] = 1;
      gens.push_back(detail::alpha_apply(L, alpha, l));
    }
    auto A = detail::span_codes(L, gens);
    int e = 0;
    for (std::size_t s = A.size(); s > 1; s /= p) ++e;
    if (e > d) continue;
    int mult = pd;
    for (int i = 0; i < e; ++i) mult /= p;
    std::set<std::uint32_t> covered;
    for (std::uint32_t b = 0; b < L.size(); ++b) {
      if (covered.count(b)) continue;
      LatticeDivisor u(L);
      for (auto a : A) {
        auto x = L.add(b, a);
        covered.insert(x);
        u = u + LatticeDivisor::point_code(L, x, mult);
      }
      out.push_back({alpha, u, e});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rows of alpha span an isotropic subspace of V.
inline bool upair_isotropic(const SymplecticSpace& S, const UPair& x) { return S.isotropic(x.alpha); }

/// Translates an Omega_Ch element of the extraspecial group into (alpha, u),
/// using the table conventions of extraspecial_table.
inline UPair omega_ch_to_upair(const SymplecticSpace& S, const OmegaChElem& f) {
  const Lattice& L = f.at(0).lattice();
  UPair x;
  x.alpha.assign(L.n, std::vector<int>(2 * S.d, 0));
  for (int i = 0; i < 2 * S.d; ++i) {
    std::vector<int> l(2 * S.d, 0);
    l[i] = 1;
    int idx = fp_code(l, S.p);  // linear characters are listed in code order
    auto pts = f[idx].points();
    if (pts.size() != 1 || f[idx].dim() != 1) throw ValidationError("linear character must map to a point");
    auto r = L.decode(pts[0]);
    for (int j = 0; j < L.n; ++j) x.alpha[j][i] = r[j];
  }
  x.u = f[S.size()];  // phi(zeta) for zeta = first nontrivial character of Z
  std::vector<std::uint32_t> gens;
  for (int i = 0; i < 2 * S.d; ++i) {
    std::vector<int> l(2 * S.d, 0);
    l[i] = 1;
    gens.push_back(detail::alpha_apply(L, x.alpha, l));
  }
  auto A = detail::span_codes(L, gens);
  for (std::size_t s = A.size(); s > 1; s /= S.p) ++x.e;
  return x;
}

struct XspecCensus {
  int p = 0, d = 0, n = 0;
  long long U = 0, omega = 0, kappa_image = 0, isotropic = 0, deficit = 0;
  bool equation_ok = false, kappa_injective = false, image_is_isotropic_part = false, surjective = false;
  bool classes_ok = false, center_ok = false, exponent_ok = false;
};

inline XspecCensus xspec_census(int p, int d, int n) {
  SymplecticSpace S(p, d);
  XspecCensus c;
  c.p = p;
  c.d = d;
  c.n = n;
  auto U = enumerate_U(p, d, n);
  c.U = static_cast<long long>(U.size());
  c.equation_ok = std::all_of(U.begin(), U.end(), [&](const UPair& x) { return upair_equation(S, x); });
  std::set<UPair> iso;
  for (auto& x : U)
    if (upair_isotropic(S, x)) iso.insert(x);
  c.isotropic = static_cast<long long>(iso.size());
  GroupModel G = extraspecial_model(p, d);
  CharacterTable t = extraspecial_table(p, d);
  c.classes_ok = G.num_classes == S.size() + p - 1;
  c.exponent_ok = G.exponent() == p;
  int center = 0;
  for (int a = 0; a < G.order; ++a) {
    bool central = true;
    for (int b = 0; b < G.order && central; ++b) central = G.commute(a, b);
    center += central;
  }
  c.center_ok = center == p;
  auto om = enumerate_omega(G, p, n);
  c.omega = static_cast<long long>(om.reps.size());
  std::set<UPair> img;
  for (auto& u : om.reps) img.insert(omega_ch_to_upair(S, kappa(G, t, u, p, 1)));
  c.kappa_image = static_cast<long long>(img.size());
  c.kappa_injective = c.kappa_image == c.omega;
  c.image_is_isotropic_part = img == iso;
  c.deficit = c.U - c.kappa_image;
  c.surjective = c.deficit == 0;
  return c;
}

struct XspecTableChecks {
  bool linear_times_phi = false, phi_products = false, psi_linear = false, psi_phi = false;
  bool lambda_phi_table = false, lambda_phi_center = false, lambda_phi_noncentral = false;
};

/// The product, psi and lambda formulas for the extraspecial table.
inline XspecTableChecks extraspecial_table_checks(int p, int d) {
  SymplecticSpace S(p, d);
  RepRing R(extraspecial_table(p, d));
  XspecTableChecks out;
  int V = S.size(), h = R.h();
  long long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  auto phi = [&](long long j) { return R.irr(V + static_cast<int>(((j % p) + p) % p) - 1); };
  VirtualRep rhoV = R.zero();
  for (int l = 0; l < V; ++l) rhoV = rhoV + R.irr(l);
  out.linear_times_phi = true;
  for (int l = 0; l < V; ++l)
    for (int j = 1; j < p; ++j) out.linear_times_phi = out.linear_times_phi && R.mul(R.irr(l), phi(j)) == phi(j);
  out.phi_products = true;
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < p; ++j) {
      VirtualRep want = (i + j) % p == 0 ? rhoV : phi(i + j).scaled(pd);
      out.phi_products = out.phi_products && R.mul(phi(i), phi(j)) == want;
    }
  out.psi_linear = true;
  out.psi_phi = true;
  for (int k = 0; k <= 2 * p; ++k) {
    for (int l = 0; l < V; ++l) {
      // chi_l^k = chi_{k l}
      auto vl = S.vec(l);
      for (auto& x : vl) x = static_cast<int>((static_cast<long long>(x) * k) % p);
      out.psi_linear = out.psi_linear && R.adams(R.irr(l), k) == R.irr(fp_code(vl, p));
    }
    for (int j = 1; j < p; ++j) {
      VirtualRep want = k % p == 0 ? R.one().scaled(pd) : phi(static_cast<long long>(j) * k);
      out.psi_phi = out.psi_phi && R.adams(phi(j), k) == want;
    }
  }
  // closed form as an element of R(G)
  auto closed = [&](int j, long long k) {
    if (k % p == 0) {
      long long b = binomial(pd / p, k / p);
      long long num = binomial(pd, k) - b;
      if (num % (pd * pd)) throw ValidationError("closed form has a non-integral coefficient");
      return R.one().scaled(b) + rhoV.scaled(num / (pd * pd));
    }
    long long num = binomial(pd, k);
    if (num % pd) throw ValidationError("closed form has a non-integral coefficient");
    return phi(static_cast<long long>(j) * k).scaled(num / pd);
  };
  out.lambda_phi_table = out.lambda_phi_center = out.lambda_phi_noncentral = true;
  for (int j = 1; j < p; ++j) {
    auto lam = R.lambda_series(phi(j), static_cast<int>(pd));
    for (long long k = 0; k <= pd; ++k) {
      VirtualRep want = closed(j, k);
      out.lambda_phi_table = out.lambda_phi_table && lam[k] == want;
      // restriction to Z: characters of Z as multiplicities of zeta^0..zeta^{p-1}
      std::vector<long long> onZ(p, 0), brute(p, 0);
      for (int i = 0; i < h; ++i) {
        if (!want.c[i]) continue;
        if (i < V) onZ[0] += want.c[i];
        else onZ[i - V + 1] += want.c[i] * pd;
      }
      brute[(static_cast<long long>(j) * k) % p] = binomial(pd, k);
      out.lambda_phi_center = out.lambda_phi_center && onZ == brute;
      // restriction to a non-central cyclic C: rho_V -> p^{2d-1} rho_C,
      // phi -> p^{d-1} rho_C, trivial -> 1
      long long rho_part = want.c[1], triv = want.c[0] - rho_part, phi_part = 0;
      for (int i = V; i < h; ++i) phi_part += want.c[i];
      std::vector<long long> cf(p, rho_part * (pd * pd / p) + phi_part * (pd / p));
      cf[0] += triv;
      auto br = lambda_multiple_regular(p, pd / p);
      out.lambda_phi_noncentral = out.lambda_phi_noncentral && br[k] == cf;
    }
  }
  return out;
}

}  // namespace chernlab
