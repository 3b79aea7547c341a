#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/groebner.hpp"

namespace chernlab {

/// Ring operations used by the Newton conversions and by xi_eval.
template <class R>
concept NewtonRing = requires(const R& r, const typename R::value_type& a, long long k) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul_int(a, k) } -> std::convertible_to<typename R::value_type>;
  { r.div_exact(a, k) } -> std::convertible_to<std::optional<typename R::value_type>>;
};

/// psi_1..psi_K from lambda_0..lambda_K (lambda_0 = 1):
/// psi_k = lambda_1 psi_{k-1} - lambda_2 psi_{k-2} + ... + (-1)^{k-1} k lambda_k.
template <NewtonRing R>
std::vector<typename R::value_type> lambda_to_psi(const R& ring, const std::vector<typename R::value_type>& lambda) {
  using T = typename R::value_type;
  int K = static_cast<int>(lambda.size()) - 1;
  std::vector<T> psi(K + 1, ring.zero());
  for (int k = 1; k <= K; ++k) {
    T acc = ring.zero();
    for (int i = 1; i < k; ++i) {
      T t = ring.mul(lambda[i], psi[k - i]);
      acc = (i % 2 == 1) ? ring.add(acc, t) : ring.sub(acc, t);
    }
    T last = ring.mul_int(lambda[k], k);
    acc = (k % 2 == 1) ? ring.add(acc, last) : ring.sub(acc, last);
    psi[k] = acc;
  }
  return psi;
}

/// lambda_0..lambda_K from psi_1..psi_K (index 0 of the input ignored);
/// every division by k must be exact.
template <NewtonRing R>
std::vector<typename R::value_type> psi_to_lambda(const R& ring, const std::vector<typename R::value_type>& psi) {
  using T = typename R::value_type;
  int K = static_cast<int>(psi.size()) - 1;
  std::vector<T> lambda(K + 1, ring.zero());
  lambda[0] = ring.one();
  for (int k = 1; k <= K; ++k) {
    // k lambda_k = sum_{i=1..k} (-1)^{i-1} lambda_{k-i} psi_i
    T acc = ring.zero();
    for (int i = 1; i <= k; ++i) {
      T t = ring.mul(lambda[k - i], psi[i]);
      acc = (i % 2 == 1) ? ring.add(acc, t) : ring.sub(acc, t);
    }
    auto q = ring.div_exact(acc, k);
    if (!q) throw InexactDivision("Newton step " + std::to_string(k) + " is not divisible by " + std::to_string(k));
    lambda[k] = *q;
  }
  return lambda;
}

enum class NewtonDirection { lambda_to_psi, psi_to_lambda };

template <NewtonRing R>
std::vector<typename R::value_type> newton_convert(const R& ring, const std::vector<typename R::value_type>& in,
                                                   NewtonDirection dir) {
  return dir == NewtonDirection::lambda_to_psi ? lambda_to_psi(ring, in) : psi_to_lambda(ring, in);
}

/// Z with exact division.
struct IntRing {
  using value_type = long long;
  long long zero() const { return 0; }
  long long one() const { return 1; }
  long long add(long long a, long long b) const { return a + b; }
  long long sub(long long a, long long b) const { return a - b; }
  long long mul(long long a, long long b) const { return a * b; }
  long long mul_int(long long a, long long k) const { return a * k; }
  std::optional<long long> div_exact(long long a, long long k) const {
    if (k == 0 || a % k != 0) return std::nullopt;
    return a / k;
  }
};

/// Z/m.
struct ZMod {
  using value_type = long long;
  long long m;
  explicit ZMod(long long mod) : m(mod) {
    if (m < 2) throw ValidationError("modulus must be at least 2");
  }
  long long norm(long long a) const { return ((a % m) + m) % m; }
  long long zero() const { return 0; }
  long long one() const { return 1; }
  long long add(long long a, long long b) const { return norm(a + b); }
  long long sub(long long a, long long b) const { return norm(a - b); }
  long long mul(long long a, long long b) const { return norm(norm(a) * norm(b)); }
  long long mul_int(long long a, long long k) const { return norm(norm(a) * norm(k)); }
  std::optional<long long> div_exact(long long a, long long k) const {
    for (long long x = 0; x < m; ++x)
      if (norm(x * k) == norm(a)) return x;
    return std::nullopt;
  }
  bool is_nilpotent(long long a) const {
    long long x = norm(a);
    for (int i = 0; i < 64; ++i) {
      if (x == 0) return true;
      x = mul(x, a);
    }
    return false;
  }
  std::string to_string(long long a) const { return std::to_string(norm(a)); }
};

/// A quotient ring viewed through the NewtonRing interface. Division by k
/// is only possible when k is a unit mod p.
struct QuotientOps {
  using value_type = Poly;
  const QuotientRing* q;
  explicit QuotientOps(const QuotientRing& Q) : q(&Q) {}
  Poly zero() const { return q->zero(); }
  Poly one() const { return q->one(); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return q->mul(a, b); }
  Poly mul_int(const Poly& a, long long k) const { return a.scaled(q->F().from_int(k)); }
  std::optional<Poly> div_exact(const Poly& a, long long k) const {
    Coef c = q->F().from_int(k);
    if (c == 0) {
      if (a.is_zero()) return a;
      return std::nullopt;
    }
    return a.scaled(q->F().inv(c));
  }
  bool is_nilpotent(const Poly& a) const { return q->element_nilpotency(a) > 0; }
  std::string to_string(const Poly& a) const { return a.to_string(); }
};

template <class R>
struct XiResult {
  typename R::value_type xi;                  // xi(D) = sum of the u_i
  std::vector<typename R::value_type> a;      // a_0..a_m, a_j = e_j(u)
  std::vector<typename R::value_type> xi_lambda;  // xi(lambda^j D) from products over j-subsets
};

/// D is a multiset of elements u with 1 - u nilpotent. Returns xi(D) and the
/// coefficients a_j, also recomputed as xi(lambda^j D) by summing the
/// products over j-subsets.
template <class R>
XiResult<R> xi_eval(const R& ring, const std::vector<typename R::value_type>& D) {
  using T = typename R::value_type;
  for (auto& u : D)
    if (!ring.is_nilpotent(ring.sub(ring.one(), u))) throw NotAUnit("1 - u is not nilpotent for u = " + ring.to_string(u));
  XiResult<R> res;
  res.xi = ring.zero();
  for (auto& u : D) res.xi = ring.add(res.xi, u);
  int m = static_cast<int>(D.size());
  // e_j by the product (1 + t u_i)
  std::vector<T> e(m + 1, ring.zero());
  e[0] = ring.one();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j >= 1; --j) e[j] = ring.add(e[j], ring.mul(e[j - 1], D[i]));
  res.a = e;
  res.xi_lambda.assign(m + 1, ring.zero());
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    T prod = ring.one();
    int cnt = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1UL << i)) {
        prod = ring.mul(prod, D[i]);
        ++cnt;
      }
    res.xi_lambda[cnt] = ring.add(res.xi_lambda[cnt], prod);
  }
  return res;
}

}  // namespace chernlab
