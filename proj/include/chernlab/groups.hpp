#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chernlab/character_table.hpp"
#include "chernlab/errors.hpp"
#include "chernlab/field.hpp"
#include "chernlab/limits.hpp"

namespace chernlab {

/// Finite group given by its multiplication table.
struct GroupModel {
  std::string name;
  int order = 1;
  std::vector<int> mul;  // mul[a*order+b] = ab
  std::vector<int> inv;
  std::vector<int> elt_order;
  std::vector<int> cls;  // conjugacy class id, numbered by smallest member
  int num_classes = 0;
  std::vector<int> table_class;   // class index in the matching CharacterTable, if any
  std::vector<int> fixed_points;  // permutation models only
  std::vector<std::vector<int>> perms;  // permutation models only
  std::vector<std::string> labels;

  int op(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  int power(int a, long long k) const {
    long long o = elt_order[a];
    long long km = ((k % o) + o) % o;
    int r = 0, b = a;
    while (km) {
      if (km & 1) r = op(r, b);
      b = op(b, b);
      km >>= 1;
    }
    return r;
  }
  int conj(int h, int g) const { return op(op(h, g), inv[h]); }
  bool commute(int a, int b) const { return op(a, b) == op(b, a); }

  void finish() {
    if (order > limits().group_order) throw ResourceLimit("group order above ceiling");
    inv.assign(order, -1);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        if (op(a, b) == 0) { inv[a] = b; break; }
    elt_order.assign(order, 0);
    for (int a = 0; a < order; ++a) {
      int x = a, k = 1;
      while (x != 0) { x = op(x, a); ++k; }
      elt_order[a] = k;
    }
    cls.assign(order, -1);
    num_classes = 0;
    for (int g = 0; g < order; ++g) {
      if (cls[g] >= 0) continue;
      for (int h = 0; h < order; ++h) cls[conj(h, g)] = num_classes;
      ++num_classes;
    }
  }

  int exponent() const {
    int e = 1;
    for (int o : elt_order) e = std::lcm(e, o);
    return e;
  }
};

namespace detail {

inline std::vector<std::vector<int>> all_perms(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> cycle_type(const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  std::vector<bool> seen(k, false);
  std::vector<int> t;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) { seen[j] = true; j = p[j]; ++len; }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

inline std::string cycle_string(const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  std::vector<bool> seen(k, false);
  std::string s;
  for (int i = 0; i < k; ++i) {
    if (seen[i] || p[i] == i) { seen[i] = true; continue; }
    s += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

inline GroupModel perm_model(const std::string& name, const std::vector<std::vector<int>>& elems) {
  GroupModel G;
  G.name = name;
  G.order = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < G.order; ++i) idx[elems[i]] = i;
  int k = static_cast<int>(elems[0].size());
  G.mul.resize(static_cast<std::size_t>(G.order) * G.order);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = elems[a][elems[b][i]];  // (ab)(i) = a(b(i))
      G.mul[static_cast<std::size_t>(a) * G.order + b] = idx.at(c);
    }
  G.perms = elems;
  G.fixed_points.resize(G.order);
  for (int a = 0; a < G.order; ++a) {
    int f = 0;
    for (int i = 0; i < k; ++i) f += elems[a][i] == i;
    G.fixed_points[a] = f;
    G.labels.push_back(cycle_string(elems[a]));
  }
  G.finish();
  return G;
}

// Subgroup of S_k generated by the given permutations, identity first.
inline std::vector<std::vector<int>> generate_perms(const std::vector<std::vector<int>>& gens) {
  int k = static_cast<int>(gens[0].size());
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  std::set<std::vector<int>> seen{id};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto& g : gens) {
      std::vector<int> c(k);
      for (int j = 0; j < k; ++j) c[j] = g[out[i][j]];
      if (seen.insert(c).second) out.push_back(c);
    }
  std::sort(out.begin() + 1, out.end());
  return out;
}

}  // namespace detail

inline GroupModel symmetric_model(int k) {
  auto perms = detail::all_perms(k);
  return detail::perm_model("sigma" + std::to_string(k), perms);
}

inline GroupModel cyclic_product_model(int m, int k) {
  GroupModel G;
  G.name = k == 1 ? "C" + std::to_string(m) : "C" + std::to_string(m) + "xC" + std::to_string(k);
  G.order = m * k;
  G.mul.resize(static_cast<std::size_t>(G.order) * G.order);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      int x = (a / k + b / k) % m, y = (a % k + b % k) % k;
      G.mul[static_cast<std::size_t>(a) * G.order + b] = x * k + y;
    }
  for (int a = 0; a < G.order; ++a)
    G.labels.push_back(k == 1 ? std::to_string(a) : "(" + std::to_string(a / k) + "," + std::to_string(a % k) + ")");
  G.finish();
  G.table_class.resize(G.order);
  std::iota(G.table_class.begin(), G.table_class.end(), 0);
  return G;
}

/// Standard symplectic form on F_p^{2d}: b(u,w) = sum u_i w_{d+i} - u_{d+i} w_i.
inline int symplectic_form(const std::vector<int>& u, const std::vector<int>& w, int p) {
  int d = static_cast<int>(u.size()) / 2;
  long long s = 0;
  for (int i = 0; i < d; ++i) s += static_cast<long long>(u[i]) * w[d + i] - static_cast<long long>(u[d + i]) * w[i];
  return static_cast<int>(((s % p) + p) % p);
}

inline std::vector<int> fp_vector(int code, int p, int len) {
  std::vector<int> v(len);
  for (int i = len - 1; i >= 0; --i) { v[i] = code % p; code /= p; }
  return v;
}
inline int fp_code(const std::vector<int>& v, int p) {
  int c = 0;
  for (int x : v) c = c * p + (((x % p) + p) % p);
  return c;
}

/// F_p x V with (x,u)(y,w) = (x + y + b(u,w), u + w); element (x,u) has
/// index x * p^{2d} + code(u).
inline GroupModel extraspecial_model(int p, int d) {
  GroupModel G;
  G.name = "extraspecial(" + std::to_string(p) + "," + std::to_string(d) + ")";
  int V = 1;
  for (int i = 0; i < 2 * d; ++i) V *= p;
  G.order = p * V;
  if (G.order > limits().group_order) throw ResourceLimit("group order above ceiling");
  std::vector<std::vector<int>> vec(V);
  for (int c = 0; c < V; ++c) vec[c] = fp_vector(c, p, 2 * d);
  G.mul.resize(static_cast<std::size_t>(G.order) * G.order);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      int x = a / V, u = a % V, y = b / V, w = b % V;
      std::vector<int> s(2 * d);
      for (int i = 0; i < 2 * d; ++i) s[i] = (vec[u][i] + vec[w][i]) % p;
      int z = (x + y + symplectic_form(vec[u], vec[w], p)) % p;
      G.mul[static_cast<std::size_t>(a) * G.order + b] = z * V + fp_code(s, p);
    }
  for (int a = 0; a < G.order; ++a) {
    std::string s = "(" + std::to_string(a / V) + ";";
    auto v = vec[a % V];
    for (int i = 0; i < 2 * d; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    G.labels.push_back(s + ")");
  }
  G.finish();
  G.table_class.resize(G.order);
  for (int a = 0; a < G.order; ++a) G.table_class[a] = (a % V == 0) ? a / V : p + (a % V) - 1;
  return G;
}

inline CharacterTable trivial_table() { return make_table("trivial", 1, {1}, {1}, {}, {{1}}); }

inline CharacterTable cyclic_product_table(int m, int k) {
  auto G = cyclic_product_model(m, k);
  CharacterTable t;
  t.name = G.name;
  t.order = G.order;
  t.exponent = std::lcm(m, k);
  t.classes.resize(G.order);
  for (int a = 0; a < G.order; ++a) {
    t.classes[a].size = 1;
    t.classes[a].elt_order = G.elt_order[a];
    t.classes[a].power.resize(t.exponent);
    for (int j = 0; j < t.exponent; ++j) t.classes[a].power[j] = G.power(a, j);
  }
  const Cyclotomic& Z = t.Z();
  int L = t.exponent;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<CycVal> row;
      for (int a = 0; a < G.order; ++a) {
        int x = a / k, y = a % k;
        row.push_back(Z.zeta(static_cast<long long>(i) * x * (L / m) + static_cast<long long>(j) * y * (L / k)));
      }
      t.chi.push_back(row);
    }
  return t;
}

/// Classes 1^3, 1.2, 3; irreducibles 1, eps, sigma.
inline CharacterTable sigma3_table() {
  return make_table("sigma3", 6, {1, 3, 2}, {1, 2, 3}, {{2, {0, 0, 2}}, {3, {0, 1, 0}}},
                    {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
}

/// Classes 1^4, 1^2.2, 2^2, 1.3, 4; irreducibles 1, eps, sigma, rho, eps*rho.
inline CharacterTable sigma4_table() {
  return make_table("sigma4", 24, {1, 6, 3, 8, 6}, {1, 2, 2, 3, 4}, {{2, {0, 0, 0, 3, 2}}, {3, {0, 1, 2, 0, 4}}},
                    {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}});
}

/// D8 = <(1234), (13)>; classes 1, r^2, {r, r^3}, {(13),(24)}, {(12)(34),(14)(23)}.
inline CharacterTable d8_table() {
  return make_table("D8", 8, {1, 1, 2, 2, 2}, {1, 2, 4, 2, 2}, {{2, {0, 0, 1, 0, 0}}},
                    {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}});
}

/// Class fusion D8 -> sigma4 for the tables above.
inline std::vector<int> d8_into_sigma4() { return {0, 2, 4, 1, 2}; }
/// Class fusion C3 -> sigma3.
inline std::vector<int> c3_into_sigma3() { return {0, 2, 2}; }

/// Classes: central (x,0) for x in F_p, then (0,u) for u != 0 in code
/// order. Irreducibles: linear chi_l(x,u) = z^{l.u} for l in code order,
/// then phi(z^j) for j = 1..p-1.
inline CharacterTable extraspecial_table(int p, int d) {
  CharacterTable t;
  t.name = "extraspecial(" + std::to_string(p) + "," + std::to_string(d) + ")";
  int V = 1;
  for (int i = 0; i < 2 * d; ++i) V *= p;
  int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  t.order = static_cast<long long>(p) * V;
  if (t.order > limits().group_order) throw ResourceLimit("group order above ceiling");
  t.exponent = p;
  int h = p + V - 1;
  t.classes.resize(h);
  for (int x = 0; x < p; ++x) {
    t.classes[x].size = 1;
    t.classes[x].elt_order = x == 0 ? 1 : p;
    t.classes[x].power.resize(p);
    for (int k = 0; k < p; ++k) t.classes[x].power[k] = (x * k) % p;
  }
  for (int u = 1; u < V; ++u) {
    auto& c = t.classes[p + u - 1];
    c.size = p;
    c.elt_order = p;
    c.power.resize(p);
    auto vu = fp_vector(u, p, 2 * d);
    for (int k = 0; k < p; ++k) {
      std::vector<int> w(2 * d);
      for (int i = 0; i < 2 * d; ++i) w[i] = (vu[i] * k) % p;
      int code = fp_code(w, p);
      c.power[k] = code == 0 ? 0 : p + code - 1;
    }
  }
  const Cyclotomic& Z = t.Z();
  for (int l = 0; l < V; ++l) {
    auto vl = fp_vector(l, p, 2 * d);
    std::vector<CycVal> row(h);
    for (int x = 0; x < p; ++x) row[x] = Z.one();
    for (int u = 1; u < V; ++u) {
      auto vu = fp_vector(u, p, 2 * d);
      long long dot = 0;
      for (int i = 0; i < 2 * d; ++i) dot += vl[i] * vu[i];
      row[p + u - 1] = Z.zeta(dot);
    }
    t.chi.push_back(row);
  }
  for (int j = 1; j < p; ++j) {
    std::vector<CycVal> row(h, Z.zero());
    for (int x = 0; x < p; ++x) row[x] = Z.scale(Z.zeta(static_cast<long long>(j) * x), pd);
    t.chi.push_back(row);
  }
  return t;
}

namespace detail {

inline bool parse_extraspecial(const std::string& name, int& p, int& d) {
  auto l = name.find('('), c = name.find(','), r = name.find(')');
  if (name.rfind("extraspecial", 0) != 0 || l == std::string::npos || c == std::string::npos || r == std::string::npos)
    return false;
  try {
    p = std::stoi(name.substr(l + 1, c - l - 1));
    d = std::stoi(name.substr(c + 1, r - c - 1));
  } catch (...) {
    return false;
  }
  return p > 2 && chernlab::detail::is_prime(p) && d >= 1;
}

inline bool parse_cyclic(const std::string& name, int& m, int& k) {
  if (name.empty() || name[0] != 'C') return false;
  auto x = name.find("xC");
  try {
    if (x == std::string::npos) {
      m = std::stoi(name.substr(1));
      k = 1;
    } else {
      m = std::stoi(name.substr(1, x - 1));
      k = std::stoi(name.substr(x + 2));
    }
  } catch (...) {
    return false;
  }
  return m >= 1 && k >= 1;
}

}  // namespace detail

inline std::string canonical_group_name(const std::string& name) {
  if (name == "S3" || name == "Sigma3") return "sigma3";
  if (name == "S4" || name == "Sigma4") return "sigma4";
  if (name == "S6" || name == "Sigma6") return "sigma6";
  return name;
}

/// Builtin character tables: trivial, Cm, CmxCk, sigma3, sigma4, D8,
/// extraspecial(p,d). sigma6 has a group model but no table.
inline CharacterTable builtin_table(const std::string& raw) {
  std::string name = canonical_group_name(raw);
  int m = 0, k = 0, p = 0, d = 0;
  if (name == "trivial" || name == "C1") return trivial_table();
  if (name == "sigma3") return sigma3_table();
  if (name == "sigma4") return sigma4_table();
  if (name == "D8") return d8_table();
  if (name == "sigma6") throw UnknownGroup("sigma6 is available as a group model only");
  if (detail::parse_cyclic(name, m, k)) return cyclic_product_table(m, k);
  if (detail::parse_extraspecial(name, p, d)) return extraspecial_table(p, d);
  throw UnknownGroup("no builtin group named '" + raw + "'");
}

inline GroupModel builtin_model(const std::string& raw) {
  std::string name = canonical_group_name(raw);
  int m = 0, k = 0, p = 0, d = 0;
  if (name == "trivial" || name == "C1") {
    GroupModel G = cyclic_product_model(1, 1);
    G.name = "trivial";
    return G;
  }
  if (name == "sigma3" || name == "sigma4") {
    GroupModel G = symmetric_model(name == "sigma3" ? 3 : 4);
    // table classes by cycle type
    auto perms = detail::all_perms(name == "sigma3" ? 3 : 4);
    std::map<std::vector<int>, int> by_type;
    if (name == "sigma3") by_type = {{{1, 1, 1}, 0}, {{1, 2}, 1}, {{3}, 2}};
    else by_type = {{{1, 1, 1, 1}, 0}, {{1, 1, 2}, 1}, {{2, 2}, 2}, {{1, 3}, 3}, {{4}, 4}};
    G.table_class.resize(G.order);
    for (int a = 0; a < G.order; ++a) G.table_class[a] = by_type.at(detail::cycle_type(perms[a]));
    return G;
  }
  if (name == "sigma6") return symmetric_model(6);
  if (name == "D8") {
    auto els = detail::generate_perms({{1, 2, 3, 0}, {2, 1, 0, 3}});
    GroupModel G = detail::perm_model("D8", els);
    G.table_class.resize(G.order);
    for (int a = 0; a < G.order; ++a) {
      const auto& q = els[a];
      auto t = detail::cycle_type(q);
      int c;
      if (t == std::vector<int>{1, 1, 1, 1}) c = 0;
      else if (t == std::vector<int>{4}) c = 2;
      else if (t == std::vector<int>{1, 1, 2}) c = 3;
      else if (q == std::vector<int>{2, 3, 0, 1}) c = 1;  // r^2 = (13)(24)
      else c = 4;
      G.table_class[a] = c;
    }
    return G;
  }
  if (detail::parse_cyclic(name, m, k)) return cyclic_product_model(m, k);
  if (detail::parse_extraspecial(name, p, d)) return extraspecial_model(p, d);
  throw UnknownGroup("no builtin group named '" + raw + "'");
}

inline std::vector<std::string> builtin_names() {
  return {"trivial", "C2", "C3", "C4", "C2xC2", "sigma3", "sigma4", "D8", "extraspecial(3,1)"};
}

}  // namespace chernlab
