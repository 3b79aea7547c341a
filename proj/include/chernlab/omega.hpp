#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chernlab/cyclotomic.hpp"
#include "chernlab/errors.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/limits.hpp"
#include "chernlab/repring.hpp"

namespace chernlab {

using Tuple = std::vector<int>;                   // images of the generators of Z_p^n
using OmegaChElem = std::vector<LatticeDivisor>;  // irreducible index -> divisor
using ClassMap = std::vector<int>;                // point code of Theta(w) -> class

/// Largest v with p^v dividing the exponent of G.
inline int p_part_exponent(int exponent, int p) {
  int v = 0;
  while (exponent % p == 0) {
    exponent /= p;
    ++v;
  }
  return v;
}
inline int p_part_exponent(const GroupModel& G, int p) { return p_part_exponent(G.exponent(), p); }

inline bool is_p_power(long long m, int p) {
  while (m % p == 0) m /= p;
  return m == 1;
}

inline std::vector<int> p_elements(const GroupModel& G, int p) {
  std::vector<int> out;
  for (int a = 0; a < G.order; ++a)
    if (is_p_power(G.elt_order[a], p)) out.push_back(a);
  return out;
}

/// Class used for Omega'' signatures: the character-table class when the
/// model carries one, else the model's own class id.
inline int sig_class(const GroupModel& G, int a) { return G.table_class.empty() ? G.cls[a] : G.table_class[a]; }

/// u(a) = prod g_i^{a_i}.
inline int hom_eval(const GroupModel& G, const Tuple& u, const std::vector<int>& a) {
  int r = 0;
  for (std::size_t i = 0; i < u.size(); ++i) r = G.op(r, G.power(u[i], a[i]));
  return r;
}

struct OmegaCensus {
  int p = 0, n = 0, w = 0;
  std::vector<Tuple> reps;        // lexicographically least tuple of each orbit, sorted
  std::vector<long long> orbit;   // orbit sizes
};

/// Conjugacy classes of commuting n-tuples of p-elements.
inline OmegaCensus enumerate_omega(const GroupModel& G, int p, int n) {
  if (G.order > limits().group_order) throw ResourceLimit("group order above ceiling");
  OmegaCensus out;
  out.p = p;
  out.n = n;
  out.w = p_part_exponent(G, p);
  auto P = p_elements(G, p);
  long long visited = 0;
  Tuple t(n);
  std::vector<int> conj_buf(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (++visited > limits().tuples) throw ResourceLimit("tuple enumeration above ceiling");
      long long stab = 0;
      for (int h = 0; h < G.order; ++h) {
        for (int k = 0; k < n; ++k) conj_buf[k] = G.conj(h, t[k]);
        if (std::lexicographical_compare(conj_buf.begin(), conj_buf.end(), t.begin(), t.end())) return;
        if (conj_buf == t) ++stab;
      }
      out.reps.push_back(t);
      out.orbit.push_back(G.order / stab);
      return;
    }
    for (int g : P) {
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = G.commute(g, t[k]);
      if (!ok) continue;
      t[i] = g;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Domain (Z/p^w)^n of the class-valued maps.
inline Lattice omega_domain(int p, int w, int n) { return Lattice(p, std::max(w, 1), n); }

inline ClassMap pointwise_signature(const GroupModel& G, const Tuple& u, const Lattice& A) {
  ClassMap s(A.size());
  for (std::uint32_t c = 0; c < A.size(); ++c) s[c] = sig_class(G, hom_eval(G, u, A.decode(c)));
  return s;
}

/// Class of h^k expressed on signature classes.
class ClassPowers {
 public:
  explicit ClassPowers(const GroupModel& G) : e_(G.exponent()) {
    int h = 0;
    for (int a = 0; a < G.order; ++a) h = std::max(h, sig_class(G, a) + 1);
    rep_.assign(h, -1);
    for (int a = 0; a < G.order; ++a)
      if (rep_[sig_class(G, a)] < 0) rep_[sig_class(G, a)] = a;
    pw_.assign(h, std::vector<int>(e_));
    order_.assign(h, 1);
    for (int c = 0; c < h; ++c) {
      for (int k = 0; k < e_; ++k) pw_[c][k] = sig_class(G, G.power(rep_[c], k));
      order_[c] = G.elt_order[rep_[c]];
    }
  }
  int power(int c, long long k) const { return pw_[c][((k % e_) + e_) % e_]; }
  int order(int c) const { return order_[c]; }
  int count() const { return static_cast<int>(rep_.size()); }

 private:
  int e_;
  std::vector<int> rep_;
  std::vector<std::vector<int>> pw_;
  std::vector<int> order_;
};

/// phi(k a) = phi(a)^k for all a and k.
inline bool is_z_equivariant(const ClassMap& s, const Lattice& A, const ClassPowers& cp) {
  int M = A.modulus();
  for (std::uint32_t a = 0; a < A.size(); ++a)
    for (int k = 0; k < M; ++k)
      if (s[A.scale(a, k)] != cp.power(s[a], k)) return false;
  return true;
}

namespace detail {

// Cyclic subgroups of (Z/p^w)^n as a tree under multiplication by p.
struct CyclicTree {
  std::vector<std::uint32_t> gens;   // canonical generator (least code) of each nontrivial cyclic subgroup
  std::vector<int> order_exp;        // log_p of its order
  std::vector<int> parent;           // node of <p g>, -1 for the trivial group
  std::vector<long long> parent_k;   // p g = parent_k * gen(parent)
  std::vector<int> node_of;          // code -> node of <code>
  std::vector<long long> mult_of;    // code = mult_of * gen(node_of)

  explicit CyclicTree(const Lattice& A) {
    node_of.assign(A.size(), -1);
    mult_of.assign(A.size(), 0);
    int M = A.modulus();
    for (std::uint32_t a = 1; a < A.size(); ++a) {
      if (node_of[a] >= 0) continue;
      int id = static_cast<int>(gens.size());
      gens.push_back(a);
      order_exp.push_back(A.order_exp(a));
      for (int k = 1; k < M; ++k) {
        std::uint32_t b = A.scale(a, k);
        if (b == 0 || std::gcd(k, M) != 1) continue;
        node_of[b] = id;
        mult_of[b] = k;
      }
    }
    // non-generators of a cyclic subgroup are reached from its generator
    for (std::size_t id = 0; id < gens.size(); ++id) {
      std::uint32_t pg = A.scale(gens[id], A.p);
      if (pg == 0) {
        parent.push_back(-1);
        parent_k.push_back(0);
      } else {
        parent.push_back(node_of[pg]);
        parent_k.push_back(mult_of[pg]);
      }
    }
  }
};

}  // namespace detail

struct OmegaVariants {
  OmegaCensus omega;
  Lattice domain{2, 1, 1};
  std::vector<ClassMap> prime;        // Omega' as pointwise class maps, sorted
  std::vector<int> omega_to_prime;    // surjection, by index
  mpz_class dprime_count;             // |Omega''|
  bool dprime_listed = false;
  std::vector<ClassMap> dprime;       // Omega'' when small enough, sorted
  std::vector<int> prime_to_dprime;   // injection, by index (when listed)
};

/// |Omega''| by dynamic programming over the cyclic-subgroup tree.
inline mpz_class count_omega_dprime(const GroupModel& G, int p, int n) {
  int w = p_part_exponent(G, p);
  if (w == 0) return 1;
  Lattice A = omega_domain(p, w, n);
  detail::CyclicTree T(A);
  ClassPowers cp(G);
  int h = cp.count();
  int N = static_cast<int>(T.gens.size());
  std::vector<std::vector<int>> children(N);
  std::vector<int> roots;
  for (int i = 0; i < N; ++i) (T.parent[i] < 0 ? roots : children[T.parent[i]]).push_back(i);
  std::vector<std::vector<mpz_class>> f(N, std::vector<mpz_class>(h));
  // process nodes by decreasing order so children come first
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return T.order_exp[a] > T.order_exp[b]; });
  auto admissible = [&](int node, int c) {
    long long ordc = cp.order(c);
    if (!is_p_power(ordc, p)) return false;
    long long lim = 1;
    for (int i = 0; i < T.order_exp[node]; ++i) lim *= p;
    return lim % ordc == 0;
  };
  for (int node : order)
    for (int c = 0; c < h; ++c) {
      if (!admissible(node, c)) continue;
      mpz_class prod = 1;
      for (int ch : children[node]) {
        mpz_class s = 0;
        int want = cp.power(c, T.parent_k[ch]);
        for (int c2 = 0; c2 < h; ++c2)
          if (admissible(ch, c2) && cp.power(c2, p) == want) s += f[ch][c2];
        prod *= s;
      }
      f[node][c] = prod;
    }
  int id = 0;
  for (int c = 0; c < h; ++c)
    if (cp.order(c) == 1) id = c;
  mpz_class total = 1;
  for (int r : roots) {
    mpz_class s = 0;
    for (int c = 0; c < h; ++c)
      if (admissible(r, c) && cp.power(c, p) == id) s += f[r][c];
    total *= s;
  }
  return total;
}

inline std::vector<ClassMap> list_omega_dprime(const GroupModel& G, int p, int n) {
  int w = p_part_exponent(G, p);
  Lattice A = omega_domain(p, w, n);
  ClassPowers cp(G);
  int id = 0;
  for (int c = 0; c < cp.count(); ++c)
    if (cp.order(c) == 1) id = c;
  if (w == 0) return {ClassMap(A.size(), id)};
  detail::CyclicTree T(A);
  int N = static_cast<int>(T.gens.size());
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return T.order_exp[a] < T.order_exp[b]; });
  std::vector<int> val(N, -1);
  std::vector<ClassMap> out;
  std::function<void(int)> rec = [&](int i) {
    if (i == N) {
      ClassMap s(A.size(), id);
      for (std::uint32_t a = 1; a < A.size(); ++a) s[a] = cp.power(val[T.node_of[a]], T.mult_of[a]);
      out.push_back(s);
      if (static_cast<long long>(out.size()) > limits().omega_elements) throw ResourceLimit("Omega'' above ceiling");
      return;
    }
    int node = order[i];
    long long lim = 1;
    for (int k = 0; k < T.order_exp[node]; ++k) lim *= p;
    int want = T.parent[node] < 0 ? id : cp.power(val[T.parent[node]], T.parent_k[node]);
    for (int c = 0; c < cp.count(); ++c) {
      long long oc = cp.order(c);
      if (!is_p_power(oc, p) || lim % oc) continue;
      if (cp.power(c, p) != want) continue;
      val[node] = c;
      rec(i + 1);
    }
    val[node] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

enum class OmegaVariant { pointwise, doubleprime };

/// Omega, Omega' and (counted, and listed when small) Omega'' with the
/// natural maps between them. The `variant` only selects how much work is
/// done: `pointwise` skips Omega''.
inline OmegaVariants enumerate_omega_variants(const GroupModel& G, int p, int n,
                                              OmegaVariant variant = OmegaVariant::doubleprime) {
  OmegaVariants out;
  out.omega = enumerate_omega(G, p, n);
  int w = out.omega.w;
  out.domain = omega_domain(p, w, n);
  std::vector<ClassMap> sigs;
  for (auto& u : out.omega.reps) sigs.push_back(pointwise_signature(G, u, out.domain));
  out.prime = sigs;
  std::sort(out.prime.begin(), out.prime.end());
  out.prime.erase(std::unique(out.prime.begin(), out.prime.end()), out.prime.end());
  for (auto& s : sigs)
    out.omega_to_prime.push_back(static_cast<int>(std::lower_bound(out.prime.begin(), out.prime.end(), s) - out.prime.begin()));
  if (variant == OmegaVariant::pointwise) return out;
  out.dprime_count = count_omega_dprime(G, p, n);
  if (out.dprime_count <= limits().omega_elements) {
    out.dprime = list_omega_dprime(G, p, n);
    out.dprime_listed = true;
    for (auto& s : out.prime) {
      auto it = std::lower_bound(out.dprime.begin(), out.dprime.end(), s);
      if (it == out.dprime.end() || *it != s) throw ValidationError("pointwise class map is not Z-equivariant");
      out.prime_to_dprime.push_back(static_cast<int>(it - out.dprime.begin()));
    }
  }
  return out;
}

/// Fourier inversion of a class function along u: for each point x of
/// Theta(v), mult(x) = p^{-vn} sum_a f(u(a)) zeta_{p^v}^{-<a,x>}, where f is
/// given by its values on elements lifted to Z[zeta_N].
namespace detail {

inline LatticeDivisor fourier_divisor(const Lattice& L, const Cyclotomic& Z, const std::vector<CycVal>& values_at_a) {
  int M = L.modulus();
  int step = Z.conductor() / M;
  long long denom = L.size();
  LatticeDivisor D(L);
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    CycVal s = Z.zero();
    for (std::uint32_t a = 0; a < L.size(); ++a) {
      int pr = L.pairing(a, x);
      s = Z.add(s, Z.mul(values_at_a[a], Z.zeta(-static_cast<long long>(pr) * step)));
    }
    CycVal q;
    if (!Z.is_integer(s) || !Z.div_exact(s, denom, q) || q[0] < 0)
      throw NonIntegralMultiplicity("Fourier coefficient at " + L.point_string(x) + " is not a nonnegative integer");
    if (q[0]) D = D + LatticeDivisor::point_code(L, x, q[0]);
  }
  return D;
}

}  // namespace detail

/// kappa(u) on every irreducible of the table attached to the model.
inline OmegaChElem kappa(const GroupModel& G, const CharacterTable& t, const Tuple& u, int p, int v) {
  if (G.table_class.empty()) throw ValidationError("group model has no character table attached");
  Lattice L(p, v, static_cast<int>(u.size()));
  int M = L.modulus();
  for (int g : u)
    if (M % G.elt_order[g]) throw ValidationError("p^v does not kill the image of u");
  auto Z = Cyclotomic::make(std::lcm(t.exponent, M));
  const Cyclotomic& Zt = t.Z();
  std::vector<int> cls_at(L.size());
  for (std::uint32_t a = 0; a < L.size(); ++a) cls_at[a] = G.table_class[hom_eval(G, u, L.decode(a))];
  // W[x][c] = sum over a in class c of zeta^{-<a,x>}
  std::vector<int> used;
  std::vector<int> slot(t.num_classes(), -1);
  for (int c : cls_at)
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(used.size());
      used.push_back(c);
    }
  int step = Z->conductor() / M;
  std::vector<std::vector<CycVal>> W(L.size());
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    std::vector<std::vector<long long>> cnt(used.size(), std::vector<long long>(M, 0));
    for (std::uint32_t a = 0; a < L.size(); ++a) ++cnt[slot[cls_at[a]]][L.pairing(a, x)];
    for (auto& row : cnt) {
      CycVal w = Z->zero();
      for (int r = 0; r < M; ++r)
        if (row[r]) w = Z->add(w, Z->scale(Z->zeta(-static_cast<long long>(r) * step), row[r]));
      W[x].push_back(w);
    }
  }
  long long denom = L.size();
  OmegaChElem out;
  for (int i = 0; i < t.num_irr(); ++i) {
    std::vector<CycVal> chi;
    for (int c : used) chi.push_back(Zt.lift_to(t.chi[i][c], *Z));
    LatticeDivisor D(L);
    for (std::uint32_t x = 0; x < L.size(); ++x) {
      CycVal s = Z->zero();
      for (std::size_t k = 0; k < used.size(); ++k) s = Z->add(s, Z->mul(chi[k], W[x][k]));
      CycVal q;
      if (!Z->is_integer(s) || !Z->div_exact(s, denom, q) || q[0] < 0)
        throw NonIntegralMultiplicity("Fourier coefficient at " + L.point_string(x) + " is not a nonnegative integer");
      if (q[0]) D = D + LatticeDivisor::point_code(L, x, q[0]);
    }
    out.push_back(std::move(D));
  }
  return out;
}

/// kappa(u) on an integer-valued class function given per element.
inline LatticeDivisor kappa_class_function(const GroupModel& G, const std::vector<long long>& f, const Tuple& u, int p, int v) {
  Lattice L(p, v, static_cast<int>(u.size()));
  auto Z = Cyclotomic::make(L.modulus());
  std::vector<CycVal> vals(L.size());
  for (std::uint32_t a = 0; a < L.size(); ++a) vals[a] = Z->from_int(f[hom_eval(G, u, L.decode(a))]);
  return detail::fourier_divisor(L, *Z, vals);
}

/// xi(f): a -> the class h with chi_V(h) = sum_x mult(x) zeta^{<a,x>} for all V.
inline ClassMap xi_class_map(const OmegaChElem& f, const CharacterTable& t) {
  const Lattice& L = f.at(0).lattice();
  int M = L.modulus();
  auto Z = Cyclotomic::make(std::lcm(t.exponent, M));
  int step = Z->conductor() / M;
  const Cyclotomic& Zt = t.Z();
  int h = t.num_classes();
  std::vector<std::vector<CycVal>> col(h);
  for (int c = 0; c < h; ++c)
    for (int i = 0; i < t.num_irr(); ++i) col[c].push_back(Zt.lift_to(t.chi[i][c], *Z));
  ClassMap out(L.size());
  for (std::uint32_t a = 0; a < L.size(); ++a) {
    std::vector<CycVal> val;
    for (int i = 0; i < t.num_irr(); ++i) {
      CycVal s = Z->zero();
      for (auto& [x, m] : f[i].terms()) s = Z->add(s, Z->scale(Z->zeta(static_cast<long long>(L.pairing(a, x)) * step), m));
      val.push_back(s);
    }
    int found = -1;
    for (int c = 0; c < h && found < 0; ++c)
      if (col[c] == val) found = c;
    if (found < 0) throw NoMatchingClass("no class matches the character values at " + L.point_string(a));
    out[a] = found;
  }
  // Z-equivariance
  for (std::uint32_t a = 0; a < L.size(); ++a)
    for (int k = 0; k < M; ++k)
      if (out[L.scale(a, k)] != t.power(out[a], k)) throw NoMatchingClass("xi image is not Z-equivariant");
  return out;
}

struct OmegaChOptions {
  bool use_adams = true;  // extra psi relations for pruning and deduction
};

/// Positive Lambda-semiring maps R+(G) -> N[Theta(v)] by depth-first search.
inline std::vector<OmegaChElem> enumerate_omega_ch(const RepRing& R, int p, int n, int v, OmegaChOptions opt = {}) {
  Lattice L(p, v, n);
  int h = R.h();
  struct Rel {
    int kind;  // 0 product, 1 lambda, 2 psi
    int i, j;  // operands (j unused unless product); for lambda/psi j is r/k
    std::vector<long long> rhs;
  };
  std::vector<Rel> rels;
  for (int i = 1; i < h; ++i)
    for (int j = i; j < h; ++j) rels.push_back({0, i, j, R.product(i, j).c});
  for (int i = 1; i < h; ++i)
    for (int r = 2; r <= R.dim(i); ++r) rels.push_back({1, i, r, R.lambda_irr(i, r).c});
  if (opt.use_adams) {
    int e = R.table().exponent;
    for (int k = 2; k <= e; ++k) {
      if (!detail::is_prime(k)) continue;
      for (int i = 1; i < h; ++i) rels.push_back({2, i, k, R.adams(R.irr(i), k).c});
    }
  }
  std::vector<std::vector<int>> rels_of(h);
  for (int r = 0; r < static_cast<int>(rels.size()); ++r) {
    std::set<int> vs{rels[r].i};
    if (rels[r].kind == 0) vs.insert(rels[r].j);
    for (int k = 0; k < h; ++k)
      if (rels[r].rhs[k]) vs.insert(k);
    for (int x : vs) rels_of[x].push_back(r);
  }
  std::vector<int> order(h);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.dim(a) < R.dim(b); });
  std::map<long long, std::vector<LatticeDivisor>> cands;
  for (int i = 1; i < h; ++i)
    if (!cands.count(R.dim(i))) cands[R.dim(i)] = all_divisors(L, static_cast<int>(R.dim(i)));

  std::vector<std::optional<LatticeDivisor>> D(h);
  D[0] = LatticeDivisor::zero_point(L);
  std::vector<OmegaChElem> out;
  long long nodes = 0;

  auto lhs = [&](const Rel& r) -> VirtualLattice {
    if (r.kind == 0) return (*D[r.i] * *D[r.j]).to_virtual();
    if (r.kind == 1) return D[r.i]->lambda(r.j).to_virtual();
    return D[r.i]->psi(r.j).to_virtual();
  };
  // Returns false on contradiction; appends deduced indices to `trail`.
  std::function<bool(std::vector<int>&, std::vector<int>)> propagate = [&](std::vector<int>& trail, std::vector<int> queue) {
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int ri : rels_of[x]) {
        const Rel& r = rels[ri];
        if (!D[r.i] || (r.kind == 0 && !D[r.j])) continue;
        VirtualLattice rest = lhs(r);
        int missing = -1, n_missing = 0;
        for (int k = 0; k < h; ++k) {
          if (!r.rhs[k]) continue;
          if (D[k]) rest = rest - D[k]->to_virtual().scaled(r.rhs[k]);
          else {
            ++n_missing;
            missing = k;
          }
        }
        if (n_missing == 0) {
          if (!rest.is_zero()) return false;
          continue;
        }
        if (n_missing > 1) continue;
        long long c = r.rhs[missing];
        LatticeDivisor E(L);
        for (auto& [pt, m] : rest.terms()) {
          if (m % c) return false;
          long long q = m / c;
          if (q < 0) return false;
          E = E + LatticeDivisor::point_code(L, pt, q);
        }
        if (E.dim() != R.dim(missing)) return false;
        D[missing] = E;
        trail.push_back(missing);
        queue.push_back(missing);
      }
    }
    return true;
  };
  std::function<void()> dfs = [&]() {
    if (++nodes > limits().search_nodes) throw ResourceLimit("Omega_Ch search above node ceiling");
    int next = -1;
    for (int i : order)
      if (!D[i]) {
        next = i;
        break;
      }
    if (next < 0) {
      OmegaChElem f;
      for (auto& d : D) f.push_back(*d);
      out.push_back(f);
      return;
    }
    for (const auto& cand : cands[R.dim(next)]) {
      D[next] = cand;
      std::vector<int> trail{next};
      if (propagate(trail, {next})) dfs();
      for (int t : trail) D[t].reset();
    }
  };
  std::vector<int> trail0;
  if (propagate(trail0, {0})) dfs();
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbit structure of the subgroup generated by u on the points of a
/// permutation group; for sigma4 this is the stratum index 0..4.
inline int sigma4_stratum(const GroupModel& G, const Tuple& u) {
  if (G.perms.empty() || G.perms[0].size() != 4) throw ValidationError("sigma4 stratum needs the degree-4 permutation model");
  std::set<int> sub{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : u) {
      int y = G.op(x, g);
      if (sub.insert(y).second) frontier.push_back(y);
    }
  }
  std::vector<int> seen(4, 0), sizes;
  for (int i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    std::set<int> orb;
    for (int g : sub) orb.insert(G.perms[g][i]);
    for (int j : orb) seen[j] = 1;
    sizes.push_back(static_cast<int>(orb.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  if (sizes == std::vector<int>{1, 1, 1, 1}) return 0;
  if (sizes == std::vector<int>{1, 1, 2}) return 1;
  if (sizes == std::vector<int>{2, 2}) return 2;
  bool cyclic = false;
  for (int g : sub) cyclic = cyclic || G.elt_order[g] == 4;
  return cyclic ? 4 : 3;
}

/// Stratum sizes of Omega(sigma4) predicted for height n.
inline std::vector<long long> sigma4_strata_formula(int n) {
  long long t = 1LL << n;
  return {1, t - 1, (t / 2) * (t - 1), (t - 1) * (t / 2 - 1) / 3, (t / 2) * (t - 1)};
}

/// Pairs (d, u) in Theta(1) x Z[Theta]_3^+ over Theta(v) with 2d = 0,
/// lambda^3 u = [0], psi^{-1} u = u and psi^2 u + u = 2[0] + [d] + [d]u.
inline std::vector<std::pair<std::uint32_t, LatticeDivisor>> sigma4_pairs(const Lattice& L) {
  std::vector<std::pair<std::uint32_t, LatticeDivisor>> out;
  auto us = all_divisors(L, 3);
  LatticeDivisor zero = LatticeDivisor::zero_point(L);
  for (std::uint32_t d = 0; d < L.size(); ++d) {
    if (L.scale(d, 2) != 0) continue;
    LatticeDivisor dd = LatticeDivisor::point_code(L, d);
    for (auto& u : us) {
      if (u.lambda(3) != zero) continue;
      if (u.psi(-1) != u) continue;
      if (u.psi(2) + u != zero.scaled(2) + dd + dd * u) continue;
      out.push_back({d, u});
    }
  }
  return out;
}

}  // namespace chernlab
