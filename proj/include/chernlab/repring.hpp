#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "chernlab/character_table.hpp"
#include "chernlab/errors.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/newton.hpp"

namespace chernlab {

/// Integer combination of irreducibles.
struct VirtualRep {
  std::vector<long long> c;

  VirtualRep() = default;
  explicit VirtualRep(int h) : c(h, 0) {}
  static VirtualRep basis(int h, int i, long long k = 1) {
    VirtualRep v(h);
    v.c[i] = k;
    return v;
  }
  int size() const { return static_cast<int>(c.size()); }
  bool is_positive() const {
    for (auto x : c)
      if (x < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  VirtualRep scaled(long long k) const {
    VirtualRep r = *this;
    for (auto& x : r.c) x *= k;
    return r;
  }
  friend bool operator==(const VirtualRep& a, const VirtualRep& b) { return a.c == b.c; }
  friend bool operator!=(const VirtualRep& a, const VirtualRep& b) { return a.c != b.c; }
};

/// Representation ring from a character table.
class RepRing {
 public:
  explicit RepRing(CharacterTable t) : t_(std::move(t)) {
    t_.validate();
    h_ = t_.num_irr();
    for (int i = 0; i < h_; ++i) dims_.push_back(t_.dim(i));
    zero_ = VirtualRep(h_);
    for (int c = 0; c < h_; ++c)
      if (t_.chi[0][c] != t_.Z().one()) throw NotACharacterTable("irreducible 0 must be the trivial character");
    m_.assign(h_, std::vector<VirtualRep>(h_));
    for (int i = 0; i < h_; ++i)
      for (int j = 0; j < h_; ++j) {
        if (j < i) {
          m_[i][j] = m_[j][i];
          continue;
        }
        auto v = decompose_checked(pointwise_mul(t_.chi[i], t_.chi[j]));
        if (!v.is_positive())
          throw NegativeStructureConstant("structure constant of " + t_.name + " is negative");
        m_[i][j] = v;
      }
    // lambda tables through Newton on class functions
    lam_.resize(h_);
    for (int i = 0; i < h_; ++i) {
      int d = static_cast<int>(dims_[i]);
      std::vector<ClassFn> psi(d + 1);
      for (int k = 1; k <= d; ++k) psi[k] = adams_fn(t_.chi[i], k);
      psi[0] = const_fn(0);
      auto lam = psi_to_lambda(fn_ring(), psi);
      for (int r = 0; r <= d; ++r) {
        auto v = decompose_checked(lam[r]);
        if (!v.is_positive())
          throw NegativeStructureConstant("lambda table entry of " + t_.name + " is negative");
        lam_[i].push_back(v);
      }
    }
  }

  using ClassFn = std::vector<CycVal>;

  const CharacterTable& table() const { return t_; }
  int h() const { return h_; }
  long long dim(int i) const { return dims_[i]; }
  const std::vector<long long>& dims() const { return dims_; }
  long long dim(const VirtualRep& v) const {
    long long s = 0;
    for (int i = 0; i < h_; ++i) s += v.c[i] * dims_[i];
    return s;
  }
  /// m_{ijk} as the vector over k.
  const VirtualRep& product(int i, int j) const { return m_[i][j]; }
  long long m(int i, int j, int k) const { return m_[i][j].c[k]; }
  /// lambda^r(V_i) for 0 <= r <= d_i.
  const VirtualRep& lambda_irr(int i, int r) const {
    if (r < 0) throw LambdaOutOfRange("negative lambda index");
    if (r > dims_[i]) return zero_;
    return lam_[i][r];
  }
  long long l(int r, int i, int j) const { return lambda_irr(i, r).c[j]; }

  VirtualRep one() const { return VirtualRep::basis(h_, 0); }
  VirtualRep irr(int i) const { return VirtualRep::basis(h_, i); }
  VirtualRep zero() const { return VirtualRep(h_); }

  VirtualRep mul(const VirtualRep& a, const VirtualRep& b) const {
    VirtualRep r(h_);
    for (int i = 0; i < h_; ++i) {
      if (!a.c[i]) continue;
      for (int j = 0; j < h_; ++j) {
        if (!b.c[j]) continue;
        long long s = a.c[i] * b.c[j];
        for (int k = 0; k < h_; ++k) r.c[k] += s * m_[i][j].c[k];
      }
    }
    return r;
  }

  ClassFn character(const VirtualRep& v) const {
    const Cyclotomic& Z = t_.Z();
    ClassFn f(h_, Z.zero());
    for (int i = 0; i < h_; ++i)
      if (v.c[i])
        for (int c = 0; c < h_; ++c) f[c] = Z.add(f[c], Z.scale(t_.chi[i][c], v.c[i]));
    return f;
  }
  VirtualRep decompose(const ClassFn& f) const { return decompose_checked(f); }

  /// psi^k, with character g -> chi(g^k).
  VirtualRep adams(const VirtualRep& v, long long k) const { return decompose_checked(adams_fn(character(v), k)); }

  /// lambda_0..lambda_K of an arbitrary virtual representation, from the
  /// addition law and the inverse series for negative multiplicities.
  std::vector<VirtualRep> lambda_series(const VirtualRep& v, int K) const {
    std::vector<VirtualRep> acc(K + 1, zero());
    acc[0] = one();
    for (int i = 0; i < h_; ++i) {
      long long n = v.c[i];
      if (!n) continue;
      std::vector<VirtualRep> s(K + 1, zero());
      for (int r = 0; r <= K; ++r) s[r] = lambda_irr(i, r);
      if (n < 0) s = series_inverse(s);
      for (long long t = 0; t < (n < 0 ? -n : n); ++t) acc = series_mul(acc, s);
    }
    return acc;
  }
  VirtualRep lambda(const VirtualRep& v, int r) const {
    if (r < 0) throw LambdaOutOfRange("negative lambda index");
    return lambda_series(v, r)[r];
  }

  /// Newton ring interface on class functions (pointwise).
  struct FnRing {
    using value_type = ClassFn;
    const RepRing* R;
    ClassFn zero() const { return R->const_fn(0); }
    ClassFn one() const { return R->const_fn(1); }
    ClassFn add(const ClassFn& a, const ClassFn& b) const {
      ClassFn r(a.size());
      for (std::size_t c = 0; c < a.size(); ++c) r[c] = R->t_.Z().add(a[c], b[c]);
      return r;
    }
    ClassFn sub(const ClassFn& a, const ClassFn& b) const {
      ClassFn r(a.size());
      for (std::size_t c = 0; c < a.size(); ++c) r[c] = R->t_.Z().sub(a[c], b[c]);
      return r;
    }
    ClassFn mul(const ClassFn& a, const ClassFn& b) const { return R->pointwise_mul(a, b); }
    ClassFn mul_int(const ClassFn& a, long long k) const {
      ClassFn r(a.size());
      for (std::size_t c = 0; c < a.size(); ++c) r[c] = R->t_.Z().scale(a[c], k);
      return r;
    }
    std::optional<ClassFn> div_exact(const ClassFn& a, long long k) const {
      ClassFn r(a.size());
      for (std::size_t c = 0; c < a.size(); ++c)
        if (!R->t_.Z().div_exact(a[c], k, r[c])) return std::nullopt;
      return r;
    }
  };
  FnRing fn_ring() const { return FnRing{this}; }

  /// Newton ring interface on R(G) itself; division by k is coefficientwise.
  struct VRing {
    using value_type = VirtualRep;
    const RepRing* R;
    VirtualRep zero() const { return R->zero(); }
    VirtualRep one() const { return R->one(); }
    VirtualRep add(const VirtualRep& a, const VirtualRep& b) const { return a + b; }
    VirtualRep sub(const VirtualRep& a, const VirtualRep& b) const { return a - b; }
    VirtualRep mul(const VirtualRep& a, const VirtualRep& b) const { return R->mul(a, b); }
    VirtualRep mul_int(const VirtualRep& a, long long k) const { return a.scaled(k); }
    std::optional<VirtualRep> div_exact(const VirtualRep& a, long long k) const {
      VirtualRep r = a;
      for (auto& x : r.c) {
        if (x % k) return std::nullopt;
        x /= k;
      }
      return r;
    }
  };
  VRing vring() const { return VRing{this}; }

  std::string to_string(const VirtualRep& v, const std::vector<std::string>& names = {}) const {
    std::string s;
    for (int i = 0; i < h_; ++i) {
      long long c = v.c[i];
      if (!c) continue;
      std::string nm = i < static_cast<int>(names.size()) ? names[i] : "V" + std::to_string(i);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long a = c < 0 ? -c : c;
      if (i == 0) s += std::to_string(a);
      else s += (a == 1 ? "" : std::to_string(a) + "*") + nm;
    }
    return s.empty() ? "0" : s;
  }

 private:
  ClassFn const_fn(long long v) const { return ClassFn(h_, t_.Z().from_int(v)); }
  ClassFn pointwise_mul(const ClassFn& a, const ClassFn& b) const {
    ClassFn r(h_);
    for (int c = 0; c < h_; ++c) r[c] = t_.Z().mul(a[c], b[c]);
    return r;
  }
  ClassFn adams_fn(const ClassFn& f, long long k) const {
    ClassFn r(h_);
    for (int c = 0; c < h_; ++c) r[c] = f[t_.power(c, k)];
    return r;
  }
  VirtualRep decompose_checked(const ClassFn& f) const {
    VirtualRep v(h_);
    v.c = t_.decompose(f);
    return v;
  }
  std::vector<VirtualRep> series_mul(const std::vector<VirtualRep>& a, const std::vector<VirtualRep>& b) const {
    int K = static_cast<int>(a.size()) - 1;
    std::vector<VirtualRep> r(K + 1, zero());
    for (int i = 0; i <= K; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= K; ++j)
        if (!b[j].is_zero()) r[i + j] = r[i + j] + mul(a[i], b[j]);
    }
    return r;
  }
  // inverse of a series with constant term 1
  std::vector<VirtualRep> series_inverse(const std::vector<VirtualRep>& a) const {
    int K = static_cast<int>(a.size()) - 1;
    std::vector<VirtualRep> r(K + 1, zero());
    r[0] = one();
    for (int k = 1; k <= K; ++k) {
      VirtualRep s = zero();
      for (int i = 1; i <= k; ++i) s = s + mul(a[i], r[k - i]);
      r[k] = zero() - s;
    }
    return r;
  }

  CharacterTable t_;
  int h_ = 0;
  std::vector<long long> dims_;
  std::vector<std::vector<VirtualRep>> m_;
  std::vector<std::vector<VirtualRep>> lam_;
  VirtualRep zero_;
};

using RepRingPtr = std::shared_ptr<const RepRing>;

inline RepRingPtr repring_from_table(CharacterTable t) { return std::make_shared<const RepRing>(std::move(t)); }

inline VirtualRep adams_rep(const RepRing& R, const VirtualRep& V, long long k) { return R.adams(V, k); }

/// Checks a class fusion H -> G against sizes of orders and power maps.
inline void check_fusion(const CharacterTable& G, const CharacterTable& H, const std::vector<int>& fusion) {
  auto bad = [](const std::string& why) { throw InconsistentFusion(why); };
  if (static_cast<int>(fusion.size()) != H.num_classes()) bad("fusion must list one G-class per H-class");
  if (G.order % H.order) bad("|H| does not divide |G|");
  if (G.exponent % H.exponent) bad("exponent of H does not divide that of G");
  for (int c = 0; c < H.num_classes(); ++c) {
    int g = fusion[c];
    if (g < 0 || g >= G.num_classes()) bad("fusion index out of range");
    if (G.classes[g].elt_order != H.classes[c].elt_order) bad("fusion does not preserve element orders");
    for (int k = 0; k < G.exponent; ++k)
      if (fusion[H.power(c, k)] != G.power(g, k)) bad("fusion does not commute with power maps");
  }
  if (fusion[0] != 0) bad("identity must map to the identity");
}

/// Kernel of x -> x M for an integer matrix M (rows = inputs), as a
/// saturated basis in Hermite form (last nonzero entry positive).
inline std::vector<std::vector<long long>> integer_left_kernel(std::vector<std::vector<long long>> M) {
  int r = static_cast<int>(M.size());
  int c = r ? static_cast<int>(M[0].size()) : 0;
  std::vector<std::vector<long long>> U(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) U[i][i] = 1;
  auto rowop = [&](int dst, int src, long long k) {  // row dst -= k row src
    for (int j = 0; j < c; ++j) M[dst][j] -= k * M[src][j];
    for (int j = 0; j < r; ++j) U[dst][j] -= k * U[src][j];
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(M[a], M[b]);
    std::swap(U[a], U[b]);
  };
  int piv = 0;
  for (int col = 0; col < c && piv < r; ++col) {
    for (;;) {
      int best = -1;
      for (int i = piv; i < r; ++i)
        if (M[i][col] && (best < 0 || std::llabs(M[i][col]) < std::llabs(M[best][col]))) best = i;
      if (best < 0) break;
      swap_rows(piv, best);
      bool done = true;
      for (int i = piv + 1; i < r; ++i)
        if (M[i][col]) {
          rowop(i, piv, M[i][col] / M[piv][col]);
          if (M[i][col]) done = false;
        }
      if (done) {
        ++piv;
        break;
      }
    }
  }
  std::vector<std::vector<long long>> K(U.begin() + piv, U.end());
  // Hermite-style cleanup working from the last coordinate
  int kr = static_cast<int>(K.size());
  int row = 0;
  for (int col = r - 1; col >= 0 && row < kr; --col) {
    for (;;) {
      int best = -1;
      for (int i = row; i < kr; ++i)
        if (K[i][col] && (best < 0 || std::llabs(K[i][col]) < std::llabs(K[best][col]))) best = i;
      if (best < 0) break;
      std::swap(K[row], K[best]);
      bool done = true;
      for (int i = row + 1; i < kr; ++i)
        if (K[i][col]) {
          long long q = K[i][col] / K[row][col];
          for (int j = 0; j < r; ++j) K[i][j] -= q * K[row][j];
          if (K[i][col]) done = false;
        }
      if (done) {
        if (K[row][col] < 0)
          for (auto& x : K[row]) x = -x;
        for (int i = 0; i < row; ++i) {
          long long q = K[i][col] >= 0 ? K[i][col] / K[row][col] : -((-K[i][col] + K[row][col] - 1) / K[row][col]);
          for (int j = 0; j < r; ++j) K[i][j] -= q * K[row][j];
        }
        ++row;
        break;
      }
    }
  }
  return K;
}

struct RestrictionKernel {
  std::vector<VirtualRep> generators;  // Z-basis of I
  std::vector<VirtualRep> restricted;  // res(V_i) in R(H)
  int quotient_rank = 0;               // rank of R(G)/I
};

/// Kernel I of R(G) -> R(H) along a class fusion.
inline RestrictionKernel restriction_kernel(const RepRing& G, const RepRing& H, const std::vector<int>& fusion) {
  check_fusion(G.table(), H.table(), fusion);
  RestrictionKernel out;
  const CharacterTable& tg = G.table();
  const CharacterTable& th = H.table();
  auto big = Cyclotomic::make(std::lcm(tg.exponent, th.exponent));
  const Cyclotomic& ZG = tg.Z();
  const Cyclotomic& ZH = th.Z();
  std::vector<std::vector<long long>> M;
  for (int i = 0; i < G.h(); ++i) {
    // <res chi_i, psi_j> computed in the common cyclotomic field
    VirtualRep r(H.h());
    for (int j = 0; j < H.h(); ++j) {
      CycVal s = big->zero();
      for (int c = 0; c < H.h(); ++c) {
        CycVal a = ZG.lift_to(tg.chi[i][fusion[c]], *big);
        CycVal b = big->conj(ZH.lift_to(th.chi[j][c], *big));
        s = big->add(s, big->scale(big->mul(a, b), th.classes[c].size));
      }
      CycVal q;
      if (!big->is_integer(s) || !big->div_exact(s, th.order, q) || q[0] < 0)
        throw InconsistentFusion("restriction of an irreducible is not a character of H");
      r.c[j] = q[0];
    }
    if (H.dim(r) != G.dim(i)) throw InconsistentFusion("restriction changes the dimension");
    out.restricted.push_back(r);
    M.push_back(r.c);
  }
  for (auto& k : integer_left_kernel(M)) {
    VirtualRep v(G.h());
    v.c = k;
    out.generators.push_back(v);
  }
  out.quotient_rank = G.h() - static_cast<int>(out.generators.size());
  return out;
}

/// Coefficients of lambda^k(m * rho_C) for C cyclic of order p, in the basis
/// chi^0..chi^{p-1} of Z[chi]/(chi^p - 1), by expanding prod_j (1 + t chi^j)^m.
inline std::vector<std::vector<long long>> lambda_multiple_regular(int p, long long m) {
  long long K = m * p;
  std::vector<std::vector<long long>> s(K + 1, std::vector<long long>(p, 0));
  s[0][0] = 1;
  long long deg = 0;
  for (long long rep = 0; rep < m; ++rep)
    for (int j = 0; j < p; ++j) {
      // multiply by (1 + t chi^j), i.e. lambda addition with a line
      ++deg;
      for (long long k = deg; k >= 1; --k)
        for (int a = 0; a < p; ++a) s[k][(a + j) % p] += s[k - 1][a];
    }
  return s;
}

/// Closed form for lambda^k(p^{d-1} rho_C) as (trivial coefficient, rho
/// coefficient). Modulo rho_C, lambda_t(rho_C) = 1 - (-t)^p, so for p = 2
/// the trivial part picks up the sign (-1)^{k/2}; `signed_trivial` applies it.
inline std::pair<long long, long long> lambda_regular_closed_form(int p, int d, long long k, bool signed_trivial = false) {
  long long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  long long pd1 = pd / p;
  if (k % p == 0) {
    long long b = binomial(pd1, k / p);
    if (signed_trivial && p == 2 && (k / p) % 2) b = -b;
    return {b, (binomial(pd, k) - b) / p};
  }
  return {0, binomial(pd, k) / p};
}

/// Compares the closed form with the brute-force expansion for all k;
/// `why` receives the first failing k.
inline bool check_lambda_regular(int p, int d, bool signed_trivial = false, std::string* why = nullptr) {
  long long pd1 = 1;
  for (int i = 1; i < d; ++i) pd1 *= p;
  auto s = lambda_multiple_regular(p, pd1);
  for (long long k = 0; k <= pd1 * p; ++k) {
    auto [a, b] = lambda_regular_closed_form(p, d, k, signed_trivial);
    for (int j = 0; j < p; ++j) {
      long long want = b + (j == 0 ? a : 0);
      if (s[k][j] != want) {
        if (why) *why = "k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

}  // namespace chernlab
