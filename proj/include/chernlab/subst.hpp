#pragma once

#include <map>
#include <string>
#include <vector>

#include "chernlab/groebner.hpp"

namespace chernlab {

/// Where a substitution lands: a plain polynomial ring, or a quotient in
/// which every intermediate product is reduced.
struct Target {
  RingPtr ring;
  const QuotientRing* quotient = nullptr;

  explicit Target(RingPtr r) : ring(std::move(r)) {}
  explicit Target(const QuotientRing& q) : ring(q.ring()), quotient(&q) {}

  Poly reduce(const Poly& p) const { return quotient ? quotient->reduce(p) : p; }
  Poly mul(const Poly& a, const Poly& b) const { return quotient ? quotient->mul(a, b) : a * b; }
};

/// Ring map given by images of the source variables (by index).
inline Poly substitute(const Poly& p, const std::vector<Poly>& images, const Target& tgt) {
  const int n = p.ring()->nvars();
  if (static_cast<int>(images.size()) != n) throw UnassignedVariable("substitution needs one image per variable");
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int v, int e) -> const Poly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(tgt.reduce(Poly::constant(tgt.ring, 1)));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(tgt.mul(pw.back(), images[v]));
    return pw[e];
  };
  const Field& Ft = tgt.ring->F();
  const Field& Fs = p.ring()->F();
  require_same_field(Fs, Ft);
  Poly acc(tgt.ring);
  // group terms by all but the last used variable to save multiplications
  for (auto& t : p.terms()) {
    Poly m = Poly(tgt.ring, t.c);
    for (int v = 0; v < n && !m.is_zero(); ++v)
      if (t.m.e[v]) m = tgt.mul(m, power(v, t.m.e[v]));
    acc += m;
  }
  return tgt.reduce(acc);
}

/// Substitution by variable name. Every variable occurring in p must be
/// assigned.
inline Poly poly_eval_subst(const Poly& p, const std::map<std::string, Poly>& assignment, const Target& tgt) {
  const int n = p.ring()->nvars();
  std::vector<bool> used(n, false);
  for (auto& t : p.terms())
    for (int v = 0; v < n; ++v)
      if (t.m.e[v]) used[v] = true;
  std::vector<Poly> images;
  for (int v = 0; v < n; ++v) {
    auto it = assignment.find(p.ring()->names()[v]);
    if (it == assignment.end()) {
      if (used[v]) throw UnassignedVariable("no image for variable " + p.ring()->names()[v]);
      images.push_back(Poly(tgt.ring));
    } else {
      images.push_back(tgt.reduce(it->second.in_ring(tgt.ring)));
    }
  }
  return substitute(p, images, tgt);
}

}  // namespace chernlab
