#pragma once

#include <map>
#include <string>
#include <vector>

#include "chernlab/groebner.hpp"

namespace chernlab {

/// e_k of the given variables of r.
inline Poly elementary_symmetric(const RingPtr& r, const std::vector<int>& vars, int k) {
  int d = static_cast<int>(vars.size());
  if (k == 0) return Poly::constant(r, 1);
  if (k > d || k < 0) return Poly(r);
  std::vector<Term> ts;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Monomial m;
    for (int i : idx) m.e[vars[i]] = 1;
    ts.push_back({m, 1});
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Poly::from_terms(r, std::move(ts));
}

/// Rewrites a polynomial symmetric in the `block` variables in terms of the
/// elementary symmetric polynomials of that block (Gauss' leading term
/// algorithm). The answer lives in `out`: e_k goes to variable out_e[k-1]
/// and any other variable v of p goes to out_other[v]. With `chern_signs`
/// the output is in c_k = (-1)^k e_k instead.
class BlockSymmetrizer {
 public:
  BlockSymmetrizer(RingPtr src, std::vector<int> block) : src_(std::move(src)), block_(std::move(block)) {
    for (int k = 1; k <= static_cast<int>(block_.size()); ++k) e_.push_back(elementary_symmetric(src_, block_, k));
  }

  Poly run(const Poly& p, const RingPtr& out, const std::vector<int>& out_e, const std::vector<int>& out_other,
           bool chern_signs = false) {
    const int d = static_cast<int>(block_.size());
    const Field& F = src_->F();
    using Key = std::vector<std::uint16_t>;
    auto key_greater = [](const Key& a, const Key& b) { return a > b; };
    std::map<Key, Poly, decltype(key_greater)> groups(key_greater);
    auto split = [&](const Monomial& m, Key& k, Monomial& rest) {
      k.assign(d, 0);
      rest = m;
      for (int i = 0; i < d; ++i) {
        k[i] = m.e[block_[i]];
        rest.e[block_[i]] = 0;
      }
    };
    {
      std::map<Key, std::vector<Term>, decltype(key_greater)> raw(key_greater);
      Key k;
      Monomial rest;
      for (auto& t : p.terms()) {
        split(t.m, k, rest);
        raw[k].push_back({rest, t.c});
      }
      for (auto& [kk, ts] : raw) groups.emplace(kk, Poly::from_terms(src_, ts));
    }
    std::vector<Term> out_terms;
    Key bk;
    Monomial rest;
    while (!groups.empty()) {
      auto it = groups.begin();
      if (it->second.is_zero()) {
        groups.erase(it);
        continue;
      }
      Key alpha = it->first;
      Poly q = it->second;
      for (int i = 0; i + 1 < d; ++i)
        if (alpha[i] < alpha[i + 1]) throw NotSymmetric("polynomial is not symmetric in the block");
      std::vector<int> ex(d);
      for (int i = 0; i < d; ++i) ex[i] = alpha[i] - (i + 1 < d ? alpha[i + 1] : 0);
      Poly E = e_product(ex);
      for (auto& t : E.terms()) {
        split(t.m, bk, rest);
        auto g = groups.find(bk);
        Poly delta = q.scaled(t.c);
        if (g == groups.end()) {
          groups.emplace(bk, -delta);
        } else {
          g->second -= delta;
        }
      }
      // record q * e^ex in the output ring
      int sign_exp = 0;
      Monomial em;
      for (int i = 0; i < d; ++i) {
        if (ex[i]) em.e[out_e[i]] = static_cast<std::uint16_t>(em.e[out_e[i]] + ex[i]);
        sign_exp += (i + 1) * ex[i];
      }
      Coef sgn = (chern_signs && (sign_exp & 1)) ? F.neg(1) : Coef(1);
      for (auto& t : q.terms()) {
        Monomial m = em;
        for (int v = 0; v < src_->nvars(); ++v) {
          if (!t.m.e[v]) continue;
          if (out_other[v] < 0) throw ValidationError("symmetrizer: unmapped variable");
          m.e[out_other[v]] = static_cast<std::uint16_t>(m.e[out_other[v]] + t.m.e[v]);
        }
        out_terms.push_back({m, F.mul(t.c, sgn)});
      }
    }
    return Poly::from_terms(out, std::move(out_terms));
  }

 private:
  Poly e_product(const std::vector<int>& ex) {
    auto it = cache_.find(ex);
    if (it != cache_.end()) return it->second;
    Poly r = Poly::constant(src_, 1);
    for (int i = 0; i < static_cast<int>(ex.size()); ++i)
      if (ex[i]) r = r * e_power(i, ex[i]);
    cache_.emplace(ex, r);
    return r;
  }
  const Poly& e_power(int i, int k) {
    auto& pw = powers_[i];
    if (pw.empty()) pw.push_back(Poly::constant(src_, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * e_[i]);
    return pw[k];
  }

  RingPtr src_;
  std::vector<int> block_;
  std::vector<Poly> e_;
  std::map<int, std::vector<Poly>> powers_;
  std::map<std::vector<int>, Poly> cache_;
};

/// Symmetric polynomial in all variables of its ring, expressed in
/// e1..ed over a fresh ring (lex e1 > ... > ed).
inline Poly symmetrize(const Poly& p) {
  const RingPtr& src = p.ring();
  int d = src->nvars();
  // adjacent transpositions must fix p
  for (int i = 0; i + 1 < d; ++i) {
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
      Monomial m = t.m;
      std::swap(m.e[i], m.e[i + 1]);
      ts.push_back({m, t.c});
    }
    if (Poly::from_terms(src, ts) != p) throw NotSymmetric("not invariant under swapping variables " + std::to_string(i + 1) + " and " + std::to_string(i + 2));
  }
  std::vector<std::string> names;
  for (int k = 1; k <= d; ++k) names.push_back("e" + std::to_string(k));
  RingPtr out = PolyRing::make(src->field(), names);
  std::vector<int> block(d), oe(d), other(d, -1);
  for (int i = 0; i < d; ++i) block[i] = oe[i] = i;
  BlockSymmetrizer s(src, block);
  return s.run(p, out, oe, other);
}

}  // namespace chernlab
