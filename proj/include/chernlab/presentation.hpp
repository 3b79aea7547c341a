#pragma once

#include <map>
#include <string>
#include <vector>

#include "chernlab/divisor.hpp"
#include "chernlab/linalg.hpp"
#include "chernlab/repring.hpp"

namespace chernlab {

struct PresentationOptions {
  FieldPtr field;     // defaults to the field of the law
  int initial_B = 0;  // 0: chosen from the law
  bool eliminate = true;
};

/// Generators c{i}_{k} for the non-trivial irreducibles, relations from
/// products and exterior powers, truncation c^{p^{nv}} = 0.
struct Presentation {
  std::vector<std::string> names;      // all generators
  std::vector<int> weights;            // weight of c{i}_{k} is k
  std::vector<int> irreducible;        // owning irreducible
  std::vector<int> first_var;          // first generator of irreducible i, -1 for trivial
  std::vector<std::string> labels;     // one per relation
  std::vector<Poly> relations;         // in the full ring, weight < B
  unsigned long long truncation = 0;   // p^{nv}
  int B = 0;                           // relations are exact modulo weight >= B
  int rounds = 0;
  bool certified = false;
  std::vector<std::string> eliminated_names;
  std::vector<Poly> eliminated_values;  // in the reduced ring
  RingPtr full;
  QuotientPtr Q;                        // reduced quotient
  RepRingPtr R;
  FglPtr fgl;

  int dim() const { return Q->dim(); }
  std::vector<std::string> standard_names() const {
    std::vector<std::string> out;
    for (auto& m : Q->standard()) out.push_back(Poly::monomial(Q->ring(), m, 1).to_string());
    return out;
  }
  /// Image of a generator in the reduced quotient.
  Poly image(const std::string& name) const {
    for (std::size_t i = 0; i < eliminated_names.size(); ++i)
      if (eliminated_names[i] == name) return eliminated_values[i];
    return Q->var(name);
  }
  /// The divisor f_i of an irreducible in the reduced quotient.
  DivisorPoly divisor(int i) const {
    int d = static_cast<int>(R->dim(i));
    if (first_var[i] < 0) return DivisorPoly::zero_point(Q, fgl, d);
    std::vector<Poly> cs;
    for (int k = 0; k < d; ++k) cs.push_back(image(names[first_var[i] + k]));
    return DivisorPoly(Q, fgl, d, std::move(cs));
  }
};

/// If Q = F[y]/y^N via a lex basis {x_i - g_i(y)} + {y^N} with y the
/// smallest variable, returns N; otherwise -1.
inline int single_generator_exponent(const QuotientRing& Q) {
  const RingPtr& r = Q.ring();
  int n = r->nvars();
  if (n == 0) return 1;
  int y = r->order().precedence.back();
  int N = -1;
  std::vector<bool> pivot(n, false);
  for (auto& g : Q.basis()) {
    const Monomial& m = g.lm();
    int support = -1, cnt = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[i]) {
        support = i;
        ++cnt;
      }
    if (cnt != 1) return -1;
    if (support == y) {
      if (g.size() != 1) return -1;
      N = m.e[y];
    } else {
      if (m.e[support] != 1) return -1;
      for (auto& t : g.terms()) {
        if (t.m == m) continue;
        for (int i = 0; i < n; ++i)
          if (i != y && t.m.e[i]) return -1;
      }
      pivot[support] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    if (i != y && !pivot[i]) return -1;
  return N;
}

namespace detail {

/// Coefficients 1, a_1, ..., a_D of a product of monic polynomials.
inline std::vector<Poly> product_coefficients(const std::vector<std::vector<Poly>>& factors, const Target& tgt) {
  std::vector<Poly> acc{tgt.reduce(Poly::constant(tgt.ring, 1))};
  for (auto& f : factors) {
    std::vector<Poly> nx(acc.size() + f.size(), Poly(tgt.ring));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      nx[i] += acc[i];
      for (std::size_t k = 0; k < f.size(); ++k) nx[i + k + 1] += tgt.mul(acc[i], f[k]);
    }
    acc = std::move(nx);
  }
  return acc;
}

/// Linear in v with a constant coefficient and v absent elsewhere.
inline bool solvable_for(const Poly& r, int v, Coef& unit) {
  bool found = false;
  for (auto& t : r.terms()) {
    if (!t.m.e[v]) continue;
    if (t.m.e[v] != 1 || t.m.degree() != 1) return false;
    found = true;
    unit = t.c;
  }
  return found;
}

}  // namespace detail

/// Presentation of the Chern approximation over a finite field. The
/// relations are expanded up to a weight bound B; B grows until every
/// monomial of weight in [B - wmax, B) vanishes in the result, which makes
/// the truncated ideal equal to the full one.
inline Presentation build_presentation(const RepRingPtr& R, const FglPtr& f, int v, PresentationOptions opt = {}) {
  const int p = f->p(), n = f->height();
  int vG = 0;
  for (long long e = R->table().exponent; e % p == 0; e /= p) ++vG;
  if (v < vG) throw ValidationError("v is below the p-part of the group exponent");
  FieldPtr F = opt.field ? opt.field : f->field();
  Presentation P;
  P.R = R;
  P.fgl = f;
  P.first_var.assign(R->h(), -1);
  int wmax = 1;
  for (int i = 0; i < R->h(); ++i) {
    if (R->dim(i) > limits().divisor_degree) throw DegreeCeiling("irreducible degree above ceiling");
    if (i == 0) continue;
    P.first_var[i] = static_cast<int>(P.names.size());
    for (int k = 1; k <= R->dim(i); ++k) {
      P.names.push_back("c" + std::to_string(i) + "_" + std::to_string(k));
      P.weights.push_back(k);
      P.irreducible.push_back(i);
      wmax = std::max(wmax, k);
    }
  }
  if (static_cast<int>(P.names.size()) > kMaxVars) throw ResourceLimit("too many Chern generators");
  for (int i = 0; i < R->h(); ++i)
    for (int j = i; j < R->h(); ++j)
      if (i && j && static_cast<long long>(R->dim(i)) * R->dim(j) > limits().divisor_degree)
        throw DegreeCeiling("tensor product degree above ceiling");
  P.truncation = 1;
  for (int k = 0; k < n * v; ++k) P.truncation *= static_cast<unsigned long long>(p);
  const int nv = static_cast<int>(P.names.size());
  P.full = PolyRing::make(F, P.names);
  std::vector<Poly> trunc;
  int max_weight = 0;
  for (int a = 0; a < nv; ++a) {
    trunc.push_back(Poly::var(P.full, a, static_cast<unsigned>(P.truncation)));
    max_weight += static_cast<int>(P.truncation - 1) * P.weights[a];
  }
  auto S = std::make_shared<const QuotientRing>(P.full, trunc, true);
  Target tgt(*S);

  auto cvals = [&](int i) {
    std::vector<Poly> cs;
    int d = static_cast<int>(R->dim(i));
    for (int k = 0; k < d; ++k) cs.push_back(P.first_var[i] < 0 ? Poly(P.full) : Poly::var(P.full, P.first_var[i] + k));
    return cs;
  };
  auto rhs = [&](const VirtualRep& V) {
    std::vector<std::vector<Poly>> factors;
    for (int k = 0; k < R->h(); ++k)
      for (long long m = 0; m < V.c[k]; ++m) factors.push_back(cvals(k));
    return detail::product_coefficients(factors, tgt);
  };

  int B = opt.initial_B > 0 ? opt.initial_B : static_cast<int>(std::min<long long>(max_weight + 1, 2 * wmax + 2));
  for (;;) {
    ++P.rounds;
    P.labels.clear();
    P.relations.clear();
    auto keep = detail::total_degree_below(B);
    std::map<std::pair<int, int>, UniversalIdentity> prod_cache, lam_cache;
    auto add_relations = [&](const std::string& label, const std::vector<Poly>& lhs, const std::vector<Poly>& right) {
      for (std::size_t a = 0; a < lhs.size(); ++a) {
        Poly r = tgt.reduce(lhs[a] - right[a + 1]);
        if (r.is_zero()) continue;
        P.labels.push_back(label + " coefficient " + std::to_string(a + 1));
        P.relations.push_back(r);
      }
    };
    for (int i = 1; i < R->h(); ++i)
      for (int j = i; j < R->h(); ++j) {
        int di = static_cast<int>(R->dim(i)), dj = static_cast<int>(R->dim(j));
        auto key = std::make_pair(di, dj);
        if (!prod_cache.count(key)) prod_cache.emplace(key, universal_product(f, F, di, dj, keep));
        auto& id = prod_cache.at(key);
        std::vector<Poly> lhs;
        for (auto& c : id.c) lhs.push_back(id.U->evaluate(c, {cvals(i), cvals(j)}, tgt));
        add_relations("product " + std::to_string(i) + "*" + std::to_string(j), lhs, rhs(R->product(i, j)));
      }
    for (int i = 1; i < R->h(); ++i) {
      int di = static_cast<int>(R->dim(i));
      for (int r = 2; r <= di; ++r) {
        auto key = std::make_pair(di, r);
        if (!lam_cache.count(key)) lam_cache.emplace(key, universal_lambda(f, F, di, r, keep));
        auto& id = lam_cache.at(key);
        std::vector<Poly> lhs;
        for (auto& c : id.c) lhs.push_back(id.U->evaluate(c, {cvals(i)}, tgt));
        add_relations("lambda " + std::to_string(r) + " of " + std::to_string(i), lhs, rhs(R->lambda_irr(i, r)));
      }
    }

    // degree-one elimination
    std::vector<Poly> rels = P.relations;
    for (auto& t : trunc) rels.push_back(t);
    std::vector<bool> gone(nv, false);
    std::vector<std::pair<int, Poly>> subs;  // in elimination order
    bool progress = opt.eliminate;
    while (progress) {
      progress = false;
      for (std::size_t ri = 0; ri < rels.size() && !progress; ++ri) {
        for (int a = nv - 1; a >= 0 && !progress; --a) {
          Coef u = 0;
          if (gone[a] || !detail::solvable_for(rels[ri], a, u)) continue;
          Poly val = -(rels[ri] - Poly::var(P.full, a).scaled(u)).scaled(F->inv(u));
          std::vector<Poly> images;
          for (int b = 0; b < nv; ++b) images.push_back(b == a ? val : Poly::var(P.full, b));
          std::vector<Poly> next;
          for (std::size_t rj = 0; rj < rels.size(); ++rj) {
            if (rj == ri) continue;
            Poly s = substitute(rels[rj], images, tgt);
            if (!s.is_zero()) next.push_back(s);
          }
          for (auto& [b, w] : subs) w = substitute(w, images, tgt);
          subs.push_back({a, val});
          rels = std::move(next);
          gone[a] = true;
          progress = true;
        }
      }
    }
    std::vector<std::string> kept;
    for (int a = 0; a < nv; ++a)
      if (!gone[a]) kept.push_back(P.names[a]);
    RingPtr red = PolyRing::make(F, kept, MonomialOrder{MonomialOrder::Kind::lex, {}});
    std::vector<Poly> gens;
    for (auto& r : rels) gens.push_back(r.in_ring(red));
    // reduction modulo the truncation ideal erased these
    for (int a = 0; a < nv; ++a)
      if (!gone[a]) gens.push_back(trunc[a].in_ring(red));
    P.Q = std::make_shared<const QuotientRing>(red, gens);
    P.eliminated_names.clear();
    P.eliminated_values.clear();
    for (auto& [a, w] : subs) {
      P.eliminated_names.push_back(P.names[a]);
      P.eliminated_values.push_back(P.Q->reduce(w.in_ring(red)));
    }
    P.B = B;

    if (B > max_weight) {
      P.certified = true;
      break;
    }
    // images of all monomials by weight
    int d = P.Q->dim();
    const Field& Fq = *F;
    std::vector<std::vector<Coef>> var_img;
    for (int a = 0; a < nv; ++a) var_img.push_back(P.Q->coords(P.image(P.names[a])));
    std::vector<std::vector<std::vector<Coef>>> img(B);
    img[0] = {P.Q->coords(P.Q->one())};
    int top = 0;
    for (int k = 1; k < B; ++k) {
      std::vector<std::vector<Coef>> vs;
      for (int a = 0; a < nv; ++a) {
        int w = P.weights[a];
        if (k < w) continue;
        Poly x = P.Q->from_coords(var_img[a]);
        for (auto& b : img[k - w]) vs.push_back(P.Q->coords(P.Q->mul(x, P.Q->from_coords(b))));
      }
      img[k] = span_basis(Fq, vs, d);
      if (!img[k].empty()) top = k;
    }
    bool ok = true;
    for (int k = std::max(0, B - wmax); k < B; ++k)
      if (!img[k].empty()) ok = false;
    if (ok) {
      P.certified = true;
      break;
    }
    B = std::min(max_weight + 1, std::max(B + 1, top + wmax + 1));
  }
  return P;
}

}  // namespace chernlab
