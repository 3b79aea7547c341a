#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "chernlab/cyclotomic.hpp"
#include "chernlab/errors.hpp"

namespace chernlab {

struct ClassInfo {
  long long size = 1;
  int elt_order = 1;
  std::vector<int> power;  // power[k] = class of g^k, k = 0..exponent-1
};

/// Character table with power maps; values live in Z[zeta_exponent].
class CharacterTable {
 public:
  std::string name;
  long long order = 1;
  int exponent = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<CycVal>> chi;  // chi[irreducible][class]

  CharacterTable() = default;

  const Cyclotomic& Z() const {
    if (!Z_ || Z_->conductor() != exponent) Z_ = Cyclotomic::make(exponent);
    return *Z_;
  }
  CycloPtr Zptr() const {
    (void)Z();
    return Z_;
  }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_irr() const { return static_cast<int>(chi.size()); }
  long long dim(int i) const { return chi[i][0][0]; }
  int power(int cls, long long k) const {
    long long km = ((k % exponent) + exponent) % exponent;
    return classes[cls].power[km];
  }

  /// <f, g> = (1/|G|) sum |C| f(C) conj(g(C)), as an element of Z[zeta] times |G|.
  CycVal inner_times_order(const std::vector<CycVal>& f, const std::vector<CycVal>& g) const {
    const Cyclotomic& Zc = Z();
    CycVal s = Zc.zero();
    for (int c = 0; c < num_classes(); ++c) s = Zc.add(s, Zc.scale(Zc.mul(f[c], Zc.conj(g[c])), classes[c].size));
    return s;
  }

  /// Integer multiplicities of each irreducible in the class function f.
  std::vector<long long> decompose(const std::vector<CycVal>& f) const {
    const Cyclotomic& Zc = Z();
    std::vector<long long> out(num_irr());
    for (int i = 0; i < num_irr(); ++i) {
      CycVal s = inner_times_order(f, chi[i]);
      CycVal q;
      if (!Zc.is_integer(s) || !Zc.div_exact(s, order, q))
        throw NotACharacterTable("class function of " + name + " has a non-integral multiplicity");
      out[i] = q[0];
    }
    return out;
  }

  /// Full consistency check; throws NotACharacterTable.
  void validate() const {
    auto bad = [&](const std::string& why) { throw NotACharacterTable(name + ": " + why); };
    int h = num_classes();
    if (h == 0) bad("no classes");
    if (num_irr() != h) bad("number of irreducibles differs from number of classes");
    long long total = 0;
    for (auto& c : classes) {
      if (c.size < 1) bad("class size must be positive");
      total += c.size;
    }
    if (total != order) bad("class sizes do not sum to the group order");
    if (classes[0].size != 1 || classes[0].elt_order != 1) bad("class 0 must be the identity");
    for (int c = 0; c < h; ++c) {
      const auto& ci = classes[c];
      if (order % ci.size) bad("class size does not divide the order");
      if (ci.elt_order < 1 || exponent % ci.elt_order) bad("element order does not divide the exponent");
      if (static_cast<int>(ci.power.size()) != exponent) bad("power map must list every k mod exponent");
      for (int t : ci.power)
        if (t < 0 || t >= h) bad("power map index out of range");
      if (ci.power[0] != 0) bad("g^0 must be the identity");
      if (ci.power[1 % exponent] != c && exponent > 1) bad("g^1 must be g");
      for (int k = 0; k < exponent; ++k)
        if (classes[ci.power[k]].elt_order != ci.elt_order / std::gcd(ci.elt_order, k == 0 ? ci.elt_order : k))
          bad("element orders inconsistent with the power maps");
      for (int k = 0; k < exponent; ++k)
        for (int l = 0; l < exponent; ++l)
          if (power(ci.power[k], l) != power(c, static_cast<long long>(k) * l)) bad("power maps do not compose");
    }
    long long lcm = 1;
    for (auto& c : classes) lcm = std::lcm(lcm, static_cast<long long>(c.elt_order));
    if (lcm != exponent) bad("exponent is not the lcm of the element orders");
    const Cyclotomic& Zc = Z();
    long long sumsq = 0;
    for (int i = 0; i < h; ++i) {
      if (static_cast<int>(chi[i].size()) != h) bad("character row has the wrong length");
      for (auto& v : chi[i])
        if (static_cast<int>(v.size()) != Zc.phi()) bad("character value has the wrong length");
      if (!Zc.is_integer(chi[i][0]) || chi[i][0][0] < 1) bad("degree must be a positive integer");
      sumsq += chi[i][0][0] * chi[i][0][0];
      for (int c = 0; c < h; ++c)
        for (int k = 1; k < exponent; ++k) {
          if (std::gcd(k, exponent) != 1) continue;
          if (chi[i][power(c, k)] != Zc.galois(chi[i][c], k)) bad("values not compatible with the Galois action");
        }
    }
    if (sumsq != order) bad("sum of squared degrees differs from the order");
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        CycVal s = inner_times_order(chi[i], chi[j]);
        if (s != Zc.from_int(i == j ? order : 0)) bad("row orthogonality fails");
      }
    for (int c = 0; c < h; ++c)
      for (int d = 0; d < h; ++d) {
        CycVal s = Zc.zero();
        for (int i = 0; i < h; ++i) s = Zc.add(s, Zc.mul(chi[i][c], Zc.conj(chi[i][d])));
        CycVal want = Zc.from_int(c == d ? order / classes[c].size : 0);
        if (s != want) bad("column orthogonality fails");
      }
  }

 private:
  mutable CycloPtr Z_;
};

/// Rational-valued table from integer rows and the power maps of the primes
/// dividing the exponent; the other power maps are composed from them.
inline CharacterTable make_table(std::string name, long long order, const std::vector<long long>& sizes,
                                 const std::vector<int>& orders, const std::vector<std::pair<int, std::vector<int>>>& prime_powers,
                                 const std::vector<std::vector<long long>>& rows) {
  CharacterTable t;
  t.name = std::move(name);
  t.order = order;
  long long e = 1;
  for (int o : orders) e = std::lcm(e, static_cast<long long>(o));
  t.exponent = static_cast<int>(e);
  int h = static_cast<int>(sizes.size());
  t.classes.resize(h);
  std::vector<std::vector<int>> pmap(t.exponent + 1);
  for (auto& [q, m] : prime_powers) pmap[q % (t.exponent + 1)] = m;
  for (int c = 0; c < h; ++c) {
    t.classes[c].size = sizes[c];
    t.classes[c].elt_order = orders[c];
  }
  // g^k through the prime factorisation of k
  auto pw = [&](int c, int k) {
    if (k == 0) return 0;
    int cur = c;
    int kk = k;
    for (int q = 2; q <= kk; ++q) {
      while (kk % q == 0) {
        if (pmap[q].empty()) {
          // primes prime to the exponent fix every class of a rational table
          if (t.exponent % q != 0) {
            kk /= q;
            continue;
          }
          throw NotACharacterTable("missing power map for prime " + std::to_string(q));
        }
        cur = pmap[q][cur];
        kk /= q;
      }
    }
    return cur;
  };
  for (int c = 0; c < h; ++c) {
    t.classes[c].power.resize(t.exponent);
    for (int k = 0; k < t.exponent; ++k) t.classes[c].power[k] = pw(c, k);
  }
  const Cyclotomic& Zc = t.Z();
  for (auto& r : rows) {
    std::vector<CycVal> row;
    for (auto v : r) row.push_back(Zc.from_int(v));
    t.chi.push_back(row);
  }
  return t;
}

}  // namespace chernlab
