#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"

namespace chernlab {

using CycVal = std::vector<long long>;  // coordinates in 1, z, ..., z^{phi-1}

/// Z[zeta_e] = Z[x]/Phi_e(x) in the power basis.
class Cyclotomic {
 public:
  static std::shared_ptr<const Cyclotomic> make(int e) {
    if (e < 1) throw ValidationError("cyclotomic conductor must be positive");
    return std::shared_ptr<const Cyclotomic>(new Cyclotomic(e));
  }

  static std::vector<long long> cyclotomic_poly(int e) {
    // x^e - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (int d = 1; d < e; ++d) {
      if (e % d) continue;
      auto div = cyclotomic_poly(d);
      num = exact_div(num, div);
    }
    return num;
  }

  int conductor() const { return e_; }
  int phi() const { return phi_; }

  CycVal zero() const { return CycVal(phi_, 0); }
  CycVal from_int(long long v) const {
    CycVal r = zero();
    r[0] = v;
    return r;
  }
  CycVal one() const { return from_int(1); }
  const CycVal& zeta(long long k) const { return pow_[static_cast<std::size_t>(((k % e_) + e_) % e_)]; }

  CycVal add(const CycVal& a, const CycVal& b) const {
    CycVal r(phi_);
    for (int i = 0; i < phi_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  CycVal sub(const CycVal& a, const CycVal& b) const {
    CycVal r(phi_);
    for (int i = 0; i < phi_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  CycVal neg(const CycVal& a) const {
    CycVal r(phi_);
    for (int i = 0; i < phi_; ++i) r[i] = -a[i];
    return r;
  }
  CycVal scale(const CycVal& a, long long k) const {
    CycVal r(phi_);
    for (int i = 0; i < phi_; ++i) r[i] = a[i] * k;
    return r;
  }
  CycVal mul(const CycVal& a, const CycVal& b) const {
    if (phi_ == 1) return {a[0] * b[0]};
    std::vector<long long> prod(2 * phi_ - 1, 0);
    for (int i = 0; i < phi_; ++i) {
      if (!a[i]) continue;
      for (int j = 0; j < phi_; ++j) prod[i + j] += a[i] * b[j];
    }
    CycVal r = zero();
    for (int k = 0; k < static_cast<int>(prod.size()); ++k) {
      if (!prod[k]) continue;
      const CycVal& z = zeta(k);
      for (int i = 0; i < phi_; ++i) r[i] += prod[k] * z[i];
    }
    return r;
  }
  /// zeta -> zeta^j (j coprime to e for an automorphism).
  CycVal galois(const CycVal& a, long long j) const {
    CycVal r = zero();
    for (int k = 0; k < phi_; ++k) {
      if (!a[k]) continue;
      const CycVal& z = zeta(static_cast<long long>(k) * j);
      for (int i = 0; i < phi_; ++i) r[i] += a[k] * z[i];
    }
    return r;
  }
  CycVal conj(const CycVal& a) const { return galois(a, -1); }
  bool is_integer(const CycVal& a) const {
    for (int i = 1; i < phi_; ++i)
      if (a[i]) return false;
    return true;
  }
  bool is_zero(const CycVal& a) const {
    for (auto x : a)
      if (x) return false;
    return true;
  }
  /// a / k if every coordinate is divisible.
  bool div_exact(const CycVal& a, long long k, CycVal& out) const {
    out = zero();
    for (int i = 0; i < phi_; ++i) {
      if (a[i] % k) return false;
      out[i] = a[i] / k;
    }
    return true;
  }
  /// Value given in Z[zeta_c] (coordinates b_0..b_{phi(c)-1}), c | e.
  CycVal embed(int c, const std::vector<long long>& b) const {
    if (c < 1 || e_ % c) throw ValidationError("conductor " + std::to_string(c) + " does not divide " + std::to_string(e_));
    CycVal r = zero();
    int step = e_ / c;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
      if (!b[i]) continue;
      const CycVal& z = zeta(static_cast<long long>(i) * step);
      for (int k = 0; k < phi_; ++k) r[k] += b[i] * z[k];
    }
    return r;
  }
  /// Image in Z[zeta_E] for a multiple E of e.
  CycVal lift_to(const CycVal& a, const Cyclotomic& big) const { return big.embed(e_, a); }

  std::string to_string(const CycVal& a) const {
    std::string s;
    for (int i = 0; i < phi_; ++i) {
      if (!a[i]) continue;
      long long c = a[i];
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long ac = c < 0 ? -c : c;
      if (i == 0) s += std::to_string(ac);
      else {
        if (ac != 1) s += std::to_string(ac) + "*";
        s += "z" + std::to_string(e_);
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  explicit Cyclotomic(int e) : e_(e) {
    phi_ = 0;
    for (int k = 1; k <= e; ++k)
      if (std::gcd(k, e) == 1) ++phi_;
    modpoly_ = cyclotomic_poly(e);
    // zeta^k in the power basis by repeated multiplication by x
    pow_.assign(e, CycVal(phi_, 0));
    CycVal cur(phi_, 0);
    cur[0] = 1;
    for (int k = 0; k < e; ++k) {
      pow_[k] = cur;
      CycVal nx(phi_, 0);
      long long top = cur[phi_ - 1];
      for (int i = phi_ - 1; i >= 1; --i) nx[i] = cur[i - 1];
      nx[0] = 0;
      if (phi_ == 1) nx[0] = 0;
      // x^phi = -(Phi_e - x^phi)
      for (int i = 0; i < phi_; ++i) nx[i] -= top * modpoly_[i];
      if (phi_ == 1) nx[0] = -cur[0] * modpoly_[0];
      cur = nx;
    }
  }

  static std::vector<long long> exact_div(std::vector<long long> a, const std::vector<long long>& b) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    std::vector<long long> q(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
      long long c = a[i] / b[db];
      q[i - db] = c;
      for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
  }

  int e_, phi_ = 1;
  std::vector<long long> modpoly_;
  std::vector<CycVal> pow_;
};

using CycloPtr = std::shared_ptr<const Cyclotomic>;

}  // namespace chernlab
