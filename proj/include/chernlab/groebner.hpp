#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/limits.hpp"
#include "chernlab/linalg.hpp"
#include "chernlab/poly.hpp"

namespace chernlab {

namespace detail {

inline const Poly* find_divisor(const std::vector<Poly>& basis, const Monomial& m) {
  for (auto& g : basis)
    if (!g.is_zero() && g.lm().divides(m)) return &g;
  return nullptr;
}

inline bool all_monomial(const std::vector<Poly>& basis) {
  for (auto& g : basis)
    if (g.size() != 1) return false;
  return true;
}

}  // namespace detail

/// Fully reduced remainder of p modulo the list (a Groebner basis for a
/// canonical answer).
inline Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  if (p.is_zero() || basis.empty()) return p;
  for (auto& g : basis) Poly::check_ring(p, g);
  if (detail::all_monomial(basis)) {
    return p.filtered([&](const Monomial& m) { return detail::find_divisor(basis, m) == nullptr; });
  }
  const Field& F = p.ring()->F();
  const auto& ord = p.ring()->order();
  std::vector<Term> w = p.terms();
  std::vector<Term> rem;
  std::size_t head = 0;
  std::vector<Term> next;
  while (head < w.size()) {
    const Term t = w[head];
    const Poly* g = detail::find_divisor(basis, t.m);
    if (!g) {
      rem.push_back(t);
      ++head;
      continue;
    }
    Monomial q = g->lm().quotient_of(t.m);
    Coef f = F.div(t.c, g->lc());
    // w[head+1..] - f*q*tail(g)
    next.clear();
    next.reserve(w.size() - head + g->size());
    std::size_t i = head + 1, j = 1;
    const auto& gt = g->terms();
    while (i < w.size() || j < gt.size()) {
      int c;
      Monomial gm;
      if (j < gt.size()) gm = gt[j].m * q;
      if (i == w.size()) c = -1;
      else if (j == gt.size()) c = 1;
      else c = ord.cmp(w[i].m, gm);
      if (c > 0) {
        next.push_back(w[i++]);
      } else if (c < 0) {
        next.push_back({gm, F.neg(F.mul(f, gt[j].c))});
        ++j;
      } else {
        Coef s = F.sub(w[i].c, F.mul(f, gt[j].c));
        if (s) next.push_back({gm, s});
        ++i;
        ++j;
      }
    }
    w.swap(next);
    head = 0;
  }
  Poly r(p.ring());
  r.mutable_terms() = std::move(rem);
  return r;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  const Field& F = f.ring()->F();
  return f.times_monomial(f.lm().quotient_of(l), F.inv(f.lc())) -
         g.times_monomial(g.lm().quotient_of(l), F.inv(g.lc()));
}

/// Interreduce a Groebner basis into the reduced one: minimal, monic, each
/// element reduced by the others; sorted by ascending leading monomial.
inline std::vector<Poly> reduce_basis(std::vector<Poly> g) {
  std::vector<Poly> nz;
  for (auto& x : g)
    if (!x.is_zero()) nz.push_back(x.monic());
  if (nz.empty()) return nz;
  const auto& ord = nz[0].ring()->order();
  std::sort(nz.begin(), nz.end(), [&](const Poly& a, const Poly& b) { return ord.greater(b.lm(), a.lm()); });
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < nz.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < nz.size() && !redundant; ++j) {
      if (i == j) continue;
      if (nz[j].lm().divides(nz[i].lm()) && (nz[j].lm() != nz[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(nz[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly lead = Poly::monomial(minimal[i].ring(), minimal[i].lm(), 1);
    Poly tail = minimal[i] - lead;
    out.push_back((lead + normal_form(tail, others)).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ord.greater(b.lm(), a.lm()); });
  return out;
}

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal
/// selection strategy and the product and chain criteria.
inline std::vector<Poly> buchberger(const std::vector<Poly>& gens, std::int64_t pair_ceiling = -1,
                                    BuchbergerStats* stats = nullptr) {
  if (pair_ceiling < 0) pair_ceiling = limits().gb_pairs;
  std::vector<Poly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return G;
  // interreduce the input fully; leading terms may change
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < G.size() && !changed; ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      Poly h = normal_form(G[i], others);
      if (h == G[i]) continue;
      changed = true;
      if (h.is_zero())
        G.erase(G.begin() + static_cast<long>(i));
      else
        G[i] = h.monic();
    }
  }
  if (G.empty()) return G;
  for (auto& g : G)
    if (g.is_constant()) return {Poly::constant(g.ring(), 1)};
  const auto& ord = G[0].ring()->order();

  struct Pair {
    int i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    int da = a.lcm.degree(), db = b.lcm.degree();
    if (da != db) return da < db;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> open;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (G[i].is_zero()) continue;
      pending.push_back({i, j, Monomial::lcm(G[i].lm(), G[j].lm())});
      open.insert({i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) add_pairs_for(j);

  std::size_t considered = 0;
  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    open.erase({pr.i, pr.j});
    if (++considered > static_cast<std::size_t>(pair_ceiling))
      throw ResourceLimit("Buchberger pair ceiling of " + std::to_string(pair_ceiling) + " exceeded");
    const Poly& f = G[pr.i];
    const Poly& g = G[pr.j];
    if (Monomial::coprime(f.lm(), g.lm())) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == pr.i || k == pr.j || G[k].is_zero()) continue;
      if (!G[k].lm().divides(pr.lcm)) continue;
      auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
      if (!open.count(key(pr.i, k)) && !open.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;
    if (stats) ++stats->pairs_reduced;
    Poly h = normal_form(s_polynomial(f, g), G);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return {Poly::constant(h.ring(), 1)};
    G.push_back(h);
    add_pairs_for(static_cast<int>(G.size()) - 1);
  }
  if (stats) stats->pairs_considered = considered;
  return reduce_basis(G);
}

/// True if every S-pair of the list reduces to zero by the list itself.
inline bool is_groebner_basis(const std::vector<Poly>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (Monomial::coprime(G[i].lm(), G[j].lm())) continue;
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  return true;
}

inline bool same_ideal_basis(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Monomials outside the leading-term ideal, ascending in the order. With a
/// non zero-dimensional basis this throws Infinite unless `cap` (a total
/// degree bound) is given.
inline std::vector<Monomial> standard_monomials(const std::vector<Poly>& basis, const RingPtr& ring, int cap = -1) {
  int n = ring->nvars();
  std::vector<int> bound(n, -1);
  for (auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {};
    const Monomial& m = g.lm();
    int support = -1, cnt = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[i]) { support = i; ++cnt; }
    if (cnt == 1 && (bound[support] < 0 || m.e[support] < bound[support])) bound[support] = m.e[support];
  }
  bool finite = true;
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) finite = false;
  if (!finite && cap < 0) throw Infinite("quotient is not finite dimensional");
  std::vector<Monomial> lts;
  for (auto& g : basis)
    if (!g.is_zero()) lts.push_back(g.lm());
  std::vector<Monomial> out;
  Monomial cur;
  std::size_t ceiling = 5000000;
  std::function<void(int, int)> rec = [&](int i, int deg) {
    if (i == n) {
      for (auto& l : lts)
        if (l.divides(cur)) return;
      out.push_back(cur);
      if (out.size() > ceiling) throw ResourceLimit("too many standard monomials");
      return;
    }
    int hi = bound[i] >= 0 ? bound[i] - 1 : cap - deg;
    if (cap >= 0) hi = std::min(hi, cap - deg);
    for (int e = 0; e <= hi; ++e) {
      cur.e[i] = static_cast<std::uint16_t>(e);
      // prune: if the partial monomial is already divisible stop increasing
      bool dead = false;
      for (auto& l : lts) {
        bool div = true;
        for (int k = 0; k < n; ++k)
          if (l.e[k] > (k <= i ? cur.e[k] : 0)) { div = false; break; }
        if (div) { dead = true; break; }
      }
      if (dead) break;
      rec(i + 1, deg + e);
    }
    cur.e[i] = 0;
  };
  rec(0, 0);
  const auto& ord = ring->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
  return out;
}

/// F_q[x]/I presented by a reduced Groebner basis.
class QuotientRing {
 public:
  QuotientRing(RingPtr r, const std::vector<Poly>& gens, bool already_groebner = false) : ring_(std::move(r)) {
    basis_ = already_groebner ? reduce_basis(gens) : buchberger(gens);
    monomial_ = detail::all_monomial(basis_);
    if (monomial_)
      for (auto& g : basis_) mono_gens_.push_back(g.lm());
  }
  static std::shared_ptr<const QuotientRing> make(RingPtr r, const std::vector<Poly>& gens) {
    return std::make_shared<const QuotientRing>(std::move(r), gens);
  }
  /// Ring with relations given as text.
  static std::shared_ptr<const QuotientRing> make(RingPtr r, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (auto& s : gens) ps.push_back(parse_poly(r, s));
    return std::make_shared<const QuotientRing>(std::move(r), ps);
  }

  const RingPtr& ring() const { return ring_; }
  const Field& F() const { return ring_->F(); }
  const std::vector<Poly>& basis() const { return basis_; }
  bool monomial_ideal() const { return monomial_; }

  bool is_standard(const Monomial& m) const {
    if (monomial_) {
      for (auto& g : mono_gens_)
        if (g.divides(m)) return false;
      return true;
    }
    return detail::find_divisor(basis_, m) == nullptr;
  }

  Poly reduce(const Poly& p) const {
    if (monomial_) return p.filtered([&](const Monomial& m) { return is_standard(m); });
    return normal_form(p, basis_);
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (monomial_) return Poly::mul_filtered(a, b, [&](const Monomial& m) { return is_standard(m); });
    return normal_form(a * b, basis_);
  }
  Poly pow(const Poly& a, unsigned long long e) const {
    Poly r = reduce(Poly::constant(ring_, 1));
    Poly b = reduce(a);
    while (e) {
      if (e & 1) r = mul(r, b);
      e >>= 1;
      if (e) {
        b = mul(b, b);
        if (b.is_zero()) {
          if (e) return Poly(ring_);
        }
      }
    }
    return r;
  }
  Poly parse(const std::string& s) const { return reduce(parse_poly(ring_, s)); }
  Poly one() const { return reduce(Poly::constant(ring_, 1)); }
  Poly zero() const { return Poly(ring_); }
  Poly var(const std::string& n) const { return reduce(Poly::var(ring_, n)); }

  const std::vector<Monomial>& standard() const {
    if (!std_cached_) {
      std_ = standard_monomials(basis_, ring_);
      std_cached_ = true;
    }
    return std_;
  }
  int dim() const { return static_cast<int>(standard().size()); }

  std::vector<Coef> coords(const Poly& p) const {
    const auto& sm = standard();
    if (index_.empty())
      for (int i = 0; i < static_cast<int>(sm.size()); ++i) index_[key(sm[i])] = i;
    std::vector<Coef> v(sm.size(), 0);
    Poly r = reduce(p);
    for (auto& t : r.terms()) v[index_.at(key(t.m))] = t.c;
    return v;
  }
  Poly from_coords(const std::vector<Coef>& v) const {
    const auto& sm = standard();
    std::vector<Term> ts;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) ts.push_back({sm[i], v[i]});
    return Poly::from_terms(ring_, std::move(ts));
  }

  /// Smallest N with m^N = 0 for m the ideal of the variables (local case);
  /// throws NotFiniteDimensional when some variable is not nilpotent.
  int nilpotency_index() const {
    if (nil_index_ >= 0) return nil_index_;
    int d = dim();
    const Field& Fq = F();
    std::vector<std::vector<Coef>> cur;
    for (int i = 0; i < ring_->nvars(); ++i) cur.push_back(coords(Poly::var(ring_, i)));
    cur = span_basis(Fq, cur, d);
    int k = 1;
    while (!cur.empty()) {
      if (k > d + 1) throw NotFiniteDimensional("ideal of the variables is not nilpotent");
      std::vector<std::vector<Coef>> nxt;
      for (auto& v : cur) {
        Poly b = from_coords(v);
        for (int i = 0; i < ring_->nvars(); ++i) nxt.push_back(coords(mul(b, Poly::var(ring_, i))));
      }
      cur = span_basis(Fq, nxt, d);
      ++k;
    }
    nil_index_ = k;
    return k;
  }

  bool is_local() const {
    try {
      (void)nilpotency_index();
      return true;
    } catch (const NotFiniteDimensional&) {
      return false;
    }
  }

  /// Nilpotency index of a single element (smallest k with a^k = 0), or -1.
  int element_nilpotency(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero()) return 1;
    Poly cur = r;
    int limit = 1;
    try {
      limit = dim() + 1;
    } catch (const Infinite&) {
      limit = 4096;
    }
    for (int k = 2; k <= limit; ++k) {
      cur = mul(cur, r);
      if (cur.is_zero()) return k;
    }
    return -1;
  }

 private:
  static std::string key(const Monomial& m) { return std::string(reinterpret_cast<const char*>(m.e.data()), sizeof(m.e)); }

  RingPtr ring_;
  std::vector<Poly> basis_;
  bool monomial_ = false;
  std::vector<Monomial> mono_gens_;
  mutable bool std_cached_ = false;
  mutable std::vector<Monomial> std_;
  mutable std::map<std::string, int> index_;
  mutable int nil_index_ = -1;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

/// Socle {a : x_i a = 0 for all i} of a finite dimensional local quotient,
/// as a row-reduced list of elements.
inline std::vector<Poly> socle(const QuotientRing& Q) {
  int d = 0;
  try {
    d = Q.dim();
  } catch (const Infinite&) {
    throw NotFiniteDimensional("socle needs a finite dimensional quotient");
  }
  if (!Q.is_local()) throw NotFiniteDimensional("socle needs a local quotient");
  const Field& F = Q.F();
  int n = Q.ring()->nvars();
  FMatrix M(std::max(1, n) * d, d);
  const auto& sm = Q.standard();
  for (int j = 0; j < d; ++j) {
    Poly b = Poly::monomial(Q.ring(), sm[j]);
    for (int i = 0; i < n; ++i) {
      auto v = Q.coords(Q.mul(b, Poly::var(Q.ring(), i)));
      for (int r = 0; r < d; ++r) M.at(i * d + r, j) = v[r];
    }
  }
  auto ker = kernel(F, M);
  // canonical basis: reduce with the largest standard monomial first
  std::vector<std::vector<Coef>> rev;
  for (auto& v : ker) rev.emplace_back(v.rbegin(), v.rend());
  rev = span_basis(F, rev, d);
  std::vector<Poly> out;
  for (auto& v : rev) out.push_back(Q.from_coords(std::vector<Coef>(v.rbegin(), v.rend())));
  return out;
}

inline bool is_gorenstein(const QuotientRing& Q) { return socle(Q).size() == 1; }

/// Rank of the span obtained from 1 by repeated multiplication by the
/// variables; equals dim for any quotient.
inline int closure_rank(const QuotientRing& Q) {
  const Field& F = Q.F();
  int d = Q.dim();
  std::vector<std::vector<Coef>> span = {Q.coords(Q.one())};
  span = span_basis(F, span, d);
  for (;;) {
    auto next = span;
    for (auto& v : span) {
      Poly b = Q.from_coords(v);
      for (int i = 0; i < Q.ring()->nvars(); ++i) next.push_back(Q.coords(Q.mul(b, Poly::var(Q.ring(), i))));
    }
    next = span_basis(F, next, d);
    if (next.size() == span.size()) return static_cast<int>(span.size());
    span = next;
  }
}

}  // namespace chernlab
