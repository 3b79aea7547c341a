#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/fgl.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/limits.hpp"
#include "chernlab/subst.hpp"
#include "chernlab/symmetric.hpp"

namespace chernlab {

/// f_D(t) = t^d + c_1 t^{d-1} + ... + c_d with c_k in a local quotient ring.
struct DivisorPoly {
  QuotientPtr Q;
  FglPtr fgl;
  int d = 0;
  std::vector<Poly> c;  // c[k-1] = c_k

  DivisorPoly() = default;
  DivisorPoly(QuotientPtr q, FglPtr f, int deg, std::vector<Poly> cs) : Q(std::move(q)), fgl(std::move(f)), d(deg), c(std::move(cs)) {
    if (static_cast<int>(c.size()) != d) throw ValidationError("divisor needs one coefficient per degree");
    for (auto& x : c) x = Q->reduce(x.in_ring(Q->ring()));
  }

  /// d[0], i.e. f = t^d.
  static DivisorPoly zero_point(QuotientPtr q, FglPtr f, int deg) {
    std::vector<Poly> cs(deg, q->zero());
    return DivisorPoly(q, std::move(f), deg, std::move(cs));
  }
  /// Sum of the points with the given coordinates.
  static DivisorPoly from_roots(QuotientPtr q, FglPtr f, const std::vector<Poly>& roots) {
    int deg = static_cast<int>(roots.size());
    std::vector<Poly> e(deg + 1, q->zero());
    e[0] = q->one();
    for (auto& r : roots)
      for (int k = deg; k >= 1; --k) e[k] = e[k] + q->mul(e[k - 1], r);
    std::vector<Poly> cs;
    for (int k = 1; k <= deg; ++k) cs.push_back(k % 2 ? -e[k] : e[k]);
    return DivisorPoly(q, std::move(f), deg, std::move(cs));
  }
  static DivisorPoly point(QuotientPtr q, FglPtr f, const Poly& x) { return from_roots(std::move(q), std::move(f), {x}); }

  /// c_0 = 1, c_k for 1 <= k <= d, zero otherwise.
  Poly coeff(int k) const {
    if (k == 0) return Q->one();
    if (k < 0 || k > d) return Q->zero();
    return c[k - 1];
  }
  /// The coordinate of a degree one divisor.
  Poly root() const {
    if (d != 1) throw ValidationError("only a degree one divisor has a single root");
    return -c[0];
  }
  std::string to_string(const std::string& t = "t") const {
    std::string s = t + (d > 1 ? "^" + std::to_string(d) : std::string(d == 0 ? "^0" : ""));
    if (d == 0) return "1";
    for (int k = 1; k <= d; ++k) {
      if (c[k - 1].is_zero()) continue;
      s += " + (" + c[k - 1].to_string() + ")";
      int e = d - k;
      if (e > 0) s += "*" + t + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return s;
  }
  friend bool operator==(const DivisorPoly& a, const DivisorPoly& b) { return a.d == b.d && a.c == b.c; }
};

namespace detail {

/// The Honda or multiplicative law of `f` with at least the given precision.
inline FglPtr fgl_at_least(const FglPtr& f, int prec) {
  if (f->prec() >= prec) return f;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, FglPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  int want = std::max(prec, 8);
  auto key = std::make_tuple(static_cast<int>(f->kind()), f->p(), f->height(), want);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FglPtr g = f->kind() == FormalGroupLaw::Kind::honda ? FormalGroupLaw::honda(f->p(), f->height(), want)
                                                     : FormalGroupLaw::multiplicative(f->p(), want);
  cache.emplace(key, g);
  return g;
}

/// Which block-degree vectors survive; always closed under going down.
struct DegreeKeep {
  std::function<bool(const std::vector<int>&)> keep;
  int max_total = 0;  // largest total degree kept
};

inline DegreeKeep total_degree_below(int B) {
  DegreeKeep k;
  k.keep = [B](const std::vector<int>& m) {
    int s = 0;
    for (int x : m) s += x;
    return s < B;
  };
  k.max_total = B - 1;
  return k;
}

/// Exact filter for substituting c-values into Q: a monomial in the roots of
/// multidegree m only contributes through e-monomials of that multidegree,
/// so it can be dropped unless some e-monomial of larger or equal
/// multidegree has a nonzero image.
inline DegreeKeep keep_for_values(const QuotientRing& Q, const std::vector<std::vector<Poly>>& cvals) {
  struct Slot {
    int block, weight;
    Poly val;
  };
  std::vector<Slot> slots;
  int nb = static_cast<int>(cvals.size());
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < static_cast<int>(cvals[b].size()); ++k)
      if (!cvals[b][k].is_zero()) slots.push_back({b, k + 1, Q.reduce(cvals[b][k])});
  int N = Q.nilpotency_index();
  std::vector<int> maxdeg(nb, 0);
  std::set<std::vector<int>> degs;
  degs.insert(std::vector<int>(nb, 0));
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Poly>> frontier;
  frontier.push_back({std::vector<int>(slots.size(), 0), Q.one()});
  seen.insert(frontier[0].first);
  std::int64_t visited = 0;
  while (!frontier.empty()) {
    auto [ex, img] = std::move(frontier.back());
    frontier.pop_back();
    int factors = 0;
    for (int x : ex) factors += x;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto nx = ex;
      ++nx[s];
      if (!seen.insert(nx).second) continue;
      Poly ni = Q.mul(img, slots[s].val);
      if (ni.is_zero()) continue;
      if (factors + 1 >= N) throw PrecisionExceeded("divisor coefficients are not nilpotent in the target ring");
      if (++visited > limits().search_nodes) throw ResourceLimit("too many monomials in the divisor coefficients");
      std::vector<int> md(nb, 0);
      for (std::size_t t = 0; t < slots.size(); ++t) md[slots[t].block] += slots[t].weight * nx[t];
      for (int b = 0; b < nb; ++b) maxdeg[b] = std::max(maxdeg[b], md[b]);
      degs.insert(md);
      frontier.push_back({std::move(nx), std::move(ni)});
    }
  }
  // down-closure on the box [0, maxdeg]
  std::vector<int> stride(nb + 1, 1);
  for (int b = 0; b < nb; ++b) stride[b + 1] = stride[b] * (maxdeg[b] + 1);
  auto grid = std::make_shared<std::vector<char>>(stride[nb], 0);
  auto index = [stride, nb](const std::vector<int>& m) {
    int i = 0;
    for (int b = 0; b < nb; ++b) i += m[b] * stride[b];
    return i;
  };
  for (auto& m : degs) (*grid)[index(m)] = 1;
  for (int i = stride[nb] - 1; i >= 0; --i) {
    if ((*grid)[i]) continue;
    for (int b = 0; b < nb; ++b) {
      int coord = (i / stride[b]) % (maxdeg[b] + 1);
      if (coord < maxdeg[b] && (*grid)[i + stride[b]]) {
        (*grid)[i] = 1;
        break;
      }
    }
  }
  DegreeKeep k;
  for (int i = 0; i < stride[nb]; ++i)
    if ((*grid)[i]) {
      int s = 0;
      for (int b = 0; b < nb; ++b) s += (i / stride[b]) % (maxdeg[b] + 1);
      k.max_total = std::max(k.max_total, s);
    }
  k.keep = [grid, maxdeg, index, nb](const std::vector<int>& m) {
    for (int b = 0; b < nb; ++b)
      if (m[b] > maxdeg[b]) return false;
    return (*grid)[index(m)] != 0;
  };
  return k;
}

/// Polynomials in blocks of root variables x_{b,a}, truncated by block
/// degree, together with one c-variable per elementary symmetric function
/// of each block.
class Universal {
 public:
  Universal(FieldPtr F, std::vector<int> sizes, DegreeKeep keep) : sizes_(std::move(sizes)), keep_(std::move(keep)) {
    std::vector<std::string> names;
    int nb = static_cast<int>(sizes_.size());
    xv_.resize(nb);
    cv_.resize(nb);
    for (int b = 0; b < nb; ++b)
      for (int a = 0; a < sizes_[b]; ++a) {
        xv_[b].push_back(static_cast<int>(names.size()));
        names.push_back("x" + std::to_string(b) + "_" + std::to_string(a + 1));
      }
    for (int b = 0; b < nb; ++b)
      for (int k = 0; k < sizes_[b]; ++k) {
        cv_[b].push_back(static_cast<int>(names.size()));
        names.push_back("c" + std::to_string(b) + "_" + std::to_string(k + 1));
      }
    if (static_cast<int>(names.size()) > kMaxVars) throw DegreeCeiling("too many root variables for the universal computation");
    ring_ = PolyRing::make(std::move(F), names);
    block_of_.assign(names.size(), -1);
    for (int b = 0; b < nb; ++b)
      for (int v : xv_[b]) block_of_[v] = b;
    syms_.resize(nb);
  }

  const RingPtr& ring() const { return ring_; }
  int max_total() const { return keep_.max_total; }
  const std::vector<int>& cvars(int b) const { return cv_[b]; }

  bool keep(const Monomial& m) const {
    std::vector<int> deg(sizes_.size(), 0);
    for (int v = 0; v < ring_->nvars(); ++v)
      if (m.e[v] && block_of_[v] >= 0) deg[block_of_[v]] += m.e[v];
    return keep_.keep(deg);
  }
  Poly trunc(const Poly& p) const {
    return p.filtered([this](const Monomial& m) { return keep(m); });
  }
  Poly mul(const Poly& a, const Poly& b) const {
    return Poly::mul_filtered(a, b, [this](const Monomial& m) { return keep(m); });
  }
  Poly x(int b, int a) const { return trunc(Poly::var(ring_, xv_[b][a])); }

  /// F(u, v) for u, v without constant term.
  Poly add(const FormalGroupLaw& f, const Poly& u, const Poly& v) const {
    if (u.constant_term() || v.constant_term()) throw PrecisionExceeded("formal sum needs arguments without constant term");
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    require_prec(f);
    int ui = single_var(u), vi = single_var(v);
    if (ui >= 0 && vi >= 0 && ui != vi) return trunc(f.as_poly(ring_, ui, vi));
    std::vector<Poly> vp{Poly::constant(ring_, 1)};
    while (vp.size() < static_cast<std::size_t>(f.prec())) {
      Poly nx = mul(vp.back(), v);
      if (nx.is_zero()) break;
      vp.push_back(std::move(nx));
    }
    Poly out(ring_), up = Poly::constant(ring_, 1);
    for (int i = 0; i < f.prec(); ++i) {
      if (i > 0) up = mul(up, u);
      if (up.is_zero()) break;
      Poly inner(ring_);
      for (int j = 0; j < static_cast<int>(vp.size()) && i + j < f.prec(); ++j)
        if (Coef c = f.coeff(i, j)) inner += vp[j].scaled(c);
      if (!inner.is_zero()) out += mul(up, inner);
    }
    return out;
  }

  /// s(u) for a one-variable series s with s(0) = 0.
  Poly series(const std::vector<Coef>& s, const Poly& u) const {
    if (static_cast<int>(s.size()) <= max_total()) throw PrecisionExceeded("series precision too small for the universal computation");
    Poly out(ring_), up = Poly::constant(ring_, 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
      up = mul(up, u);
      if (up.is_zero()) break;
      if (s[i]) out += up.scaled(s[i]);
    }
    return out;
  }

  /// e_0..e_N of the roots.
  std::vector<Poly> elementary(const std::vector<Poly>& roots) const {
    int n = static_cast<int>(roots.size());
    std::vector<Poly> e(n + 1, Poly(ring_));
    e[0] = Poly::constant(ring_, 1);
    for (int r = 0; r < n; ++r)
      for (int k = r + 1; k >= 1; --k) e[k] += mul(e[k - 1], roots[r]);
    return e;
  }

  /// Rewrites a polynomial symmetric in every block in the c-variables.
  Poly to_c(const Poly& p) const {
    Poly cur = p;
    std::vector<int> ident(ring_->nvars());
    for (int v = 0; v < ring_->nvars(); ++v) ident[v] = v;
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
      if (!syms_[b]) syms_[b] = std::make_unique<BlockSymmetrizer>(ring_, xv_[b]);
      cur = syms_[b]->run(cur, ring_, cv_[b], ident, true);
    }
    return cur;
  }

  /// Evaluate a c-polynomial with the given c-values of each block.
  Poly evaluate(const Poly& p, const std::vector<std::vector<Poly>>& cvals, const Target& tgt) const {
    std::vector<Poly> images(ring_->nvars(), Poly(tgt.ring));
    for (std::size_t b = 0; b < sizes_.size(); ++b)
      for (int k = 0; k < sizes_[b]; ++k) images[cv_[b][k]] = cvals[b][k].in_ring(tgt.ring);
    return substitute(p, images, tgt);
  }

  void require_prec(const FormalGroupLaw& f) const {
    if (f.prec() <= max_total()) throw PrecisionExceeded("formal group law precision too small for the universal computation");
  }

 private:
  int single_var(const Poly& p) const {
    if (p.size() != 1 || p.lc() != 1 || p.lm().degree() != 1) return -1;
    for (int v = 0; v < ring_->nvars(); ++v)
      if (p.lm().e[v]) return v;
    return -1;
  }

  std::vector<int> sizes_;
  DegreeKeep keep_;
  RingPtr ring_;
  std::vector<std::vector<int>> xv_, cv_;
  std::vector<int> block_of_;
  mutable std::vector<std::unique_ptr<BlockSymmetrizer>> syms_;
};

inline void require_compatible(const DivisorPoly& a, const DivisorPoly& b) {
  if (a.Q != b.Q && !a.Q->ring()->same_as(*b.Q->ring())) throw IncompatibleField("divisors live in different rings");
  if (a.fgl->p() != b.fgl->p() || a.fgl->height() != b.fgl->height() || a.fgl->kind() != b.fgl->kind())
    throw IncompatibleField("divisors use different formal group laws");
}

/// c_k = (-1)^k e_k for k = 1..N, rewritten in the c-variables.
inline std::vector<Poly> chern_coefficients(const Universal& U, const std::vector<Poly>& roots) {
  auto e = U.elementary(roots);
  std::vector<Poly> out;
  for (std::size_t k = 1; k < e.size(); ++k) out.push_back(U.to_c(k % 2 ? -e[k] : e[k]));
  return out;
}

inline std::vector<std::vector<int>> subsets(int d, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > d) return out;
  for (;;) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == d - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Formal sums over all r-subsets of the block's roots, sharing prefixes.
inline std::vector<Poly> subset_sums(const Universal& U, const FormalGroupLaw& f, int block, int d, int r) {
  std::map<std::vector<int>, Poly> memo;
  std::vector<Poly> out;
  for (auto& s : subsets(d, r)) {
    Poly acc = U.x(block, s[0]);
    std::vector<int> pre{s[0]};
    for (int i = 1; i < r; ++i) {
      pre.push_back(s[i]);
      auto it = memo.find(pre);
      if (it != memo.end()) {
        acc = it->second;
        continue;
      }
      acc = U.add(f, acc, U.x(block, s[i]));
      memo.emplace(pre, acc);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace detail

/// Universal identities as polynomials in the c-variables of the blocks;
/// shared by the divisor operations and the presentation builder.
struct UniversalIdentity {
  std::shared_ptr<detail::Universal> U;
  std::vector<Poly> c;  // c_k of the result, k = 1..degree
};

/// c_k(D E) for deg D = d, deg E = e.
inline UniversalIdentity universal_product(const FglPtr& f0, FieldPtr field, int d, int e, detail::DegreeKeep keep) {
  UniversalIdentity out;
  out.U = std::make_shared<detail::Universal>(std::move(field), std::vector<int>{d, e}, keep);
  auto f = detail::fgl_at_least(f0, out.U->max_total() + 1);
  std::vector<Poly> roots;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < e; ++b) roots.push_back(out.U->add(*f, out.U->x(0, a), out.U->x(1, b)));
  out.c = detail::chern_coefficients(*out.U, roots);
  return out;
}

/// c_k(lambda^r D) for deg D = d.
inline UniversalIdentity universal_lambda(const FglPtr& f0, FieldPtr field, int d, int r, detail::DegreeKeep keep) {
  UniversalIdentity out;
  out.U = std::make_shared<detail::Universal>(std::move(field), std::vector<int>{d}, keep);
  auto f = detail::fgl_at_least(f0, out.U->max_total() + 1);
  out.c = detail::chern_coefficients(*out.U, detail::subset_sums(*out.U, *f, 0, d, r));
  return out;
}

/// c_k(psi^k D) through the roots [k](x_a).
inline UniversalIdentity universal_psi(const FglPtr& f0, FieldPtr field, int d, long long k, detail::DegreeKeep keep) {
  UniversalIdentity out;
  out.U = std::make_shared<detail::Universal>(std::move(field), std::vector<int>{d}, keep);
  auto f = detail::fgl_at_least(f0, out.U->max_total() + 1);
  const auto& s = f->series(k);
  std::vector<Poly> roots;
  for (int a = 0; a < d; ++a) roots.push_back(out.U->series(s, out.U->x(0, a)));
  out.c = detail::chern_coefficients(*out.U, roots);
  return out;
}

/// The divisor with roots x_i +_F x'_j.
inline DivisorPoly divisor_mul(const DivisorPoly& D, const DivisorPoly& E) {
  detail::require_compatible(D, E);
  int de = D.d * E.d;
  if (de > limits().divisor_degree) throw DegreeCeiling("product degree " + std::to_string(de) + " above ceiling");
  if (de == 0) return DivisorPoly(D.Q, D.fgl, 0, {});
  auto keep = detail::keep_for_values(*D.Q, {D.c, E.c});
  auto id = universal_product(D.fgl, D.Q->ring()->field(), D.d, E.d, keep);
  Target tgt(*D.Q);
  std::vector<Poly> cs;
  for (auto& p : id.c) cs.push_back(id.U->evaluate(p, {D.c, E.c}, tgt));
  return DivisorPoly(D.Q, D.fgl, de, std::move(cs));
}

/// The divisor with roots the formal sums over r-subsets of the roots of D.
inline DivisorPoly divisor_lambda(const DivisorPoly& D, int r) {
  if (r < 0) throw LambdaOutOfRange("negative lambda index");
  if (r == 0) return DivisorPoly::zero_point(D.Q, D.fgl, 1);
  if (r > D.d) return DivisorPoly(D.Q, D.fgl, 0, {});
  long long deg = binomial(D.d, r);
  if (deg > limits().divisor_degree) throw DegreeCeiling("lambda degree " + std::to_string(deg) + " above ceiling");
  auto keep = detail::keep_for_values(*D.Q, {D.c});
  auto id = universal_lambda(D.fgl, D.Q->ring()->field(), D.d, r, keep);
  Target tgt(*D.Q);
  std::vector<Poly> cs;
  for (auto& p : id.c) cs.push_back(id.U->evaluate(p, {D.c}, tgt));
  return DivisorPoly(D.Q, D.fgl, static_cast<int>(deg), std::move(cs));
}

enum class PsiRoute { automatic, universal };

/// k = p^m with the prime of the law.
inline int prime_power_exponent(long long k, int p) {
  if (k < 1) return -1;
  int m = 0;
  while (k % p == 0) {
    k /= p;
    ++m;
  }
  return k == 1 ? m : -1;
}

/// The divisor with roots [k](x_i). Over a field of characteristic p and
/// k = p^m this is c_i -> c_i^{p^{nm}}.
inline DivisorPoly divisor_psi(const DivisorPoly& D, long long k, PsiRoute route = PsiRoute::automatic) {
  if (k == 1) return D;
  if (k == 0) return DivisorPoly::zero_point(D.Q, D.fgl, D.d);
  int p = D.fgl->p();
  int m = prime_power_exponent(k, p);
  if (route == PsiRoute::automatic && m > 0 && D.Q->ring()->F().p() == p) {
    unsigned long long q = 1;
    for (int i = 0; i < D.fgl->height() * m; ++i) q *= static_cast<unsigned long long>(p);
    std::vector<Poly> cs;
    for (auto& c : D.c) cs.push_back(D.Q->pow(c, q));
    return DivisorPoly(D.Q, D.fgl, D.d, std::move(cs));
  }
  if (D.d > limits().divisor_degree) throw DegreeCeiling("divisor degree above ceiling");
  auto keep = detail::keep_for_values(*D.Q, {D.c});
  auto id = universal_psi(D.fgl, D.Q->ring()->field(), D.d, k, keep);
  Target tgt(*D.Q);
  std::vector<Poly> cs;
  for (auto& p2 : id.c) cs.push_back(id.U->evaluate(p2, {D.c}, tgt));
  return DivisorPoly(D.Q, D.fgl, D.d, std::move(cs));
}

/// D + E, i.e. f_D f_E.
inline DivisorPoly divisor_add(const DivisorPoly& D, const DivisorPoly& E) {
  detail::require_compatible(D, E);
  int n = D.d + E.d;
  std::vector<Poly> cs;
  for (int k = 1; k <= n; ++k) {
    Poly s = D.Q->zero();
    for (int i = 0; i <= k; ++i) s = s + D.Q->mul(D.coeff(i), E.coeff(k - i));
    cs.push_back(s);
  }
  return DivisorPoly(D.Q, D.fgl, n, std::move(cs));
}

/// The point of the formal group with lattice coordinates a, given the
/// coordinates of the basis points: sum^F [a_i](x_i).
inline Poly lattice_point_coordinate(const FormalGroupLaw& f, const QuotientRing& Q, const std::vector<Poly>& basis,
                                     const std::vector<int>& a) {
  Poly acc = Q.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!a[i]) continue;
    Poly term = fgl_mul_in_ring(f, a[i], basis[i], Q);
    acc = acc.is_zero() ? term : fgl_add_in_ring(f, acc, term, Q);
  }
  return acc;
}

/// Transport of a lattice divisor along the coordinates of the basis points.
inline DivisorPoly divisor_from_lattice(const QuotientPtr& Q, const FglPtr& f, const std::vector<Poly>& basis,
                                        const LatticeDivisor& D) {
  const Lattice& L = D.lattice();
  std::vector<Poly> roots;
  for (auto& [x, m] : D.terms()) {
    Poly r = lattice_point_coordinate(*f, *Q, basis, L.decode(x));
    for (long long i = 0; i < m; ++i) roots.push_back(r);
  }
  return DivisorPoly::from_roots(Q, f, roots);
}

}  // namespace chernlab
