#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"

namespace chernlab {

using Coef = std::uint16_t;

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Remainder of a by monic b over F_p; both low-to-high.
inline std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  a.resize(std::max(0, db));
  return a;
}

}  // namespace detail

/// F_q = F_p[g]/(modulus). Element codes are base-p digit strings of the
/// coefficient vector, so code 0 is zero, code 1 is one and code p is g.
class Field {
 public:
  static std::shared_ptr<const Field> make(int p, std::vector<int> modulus = {}) {
    if (!detail::is_prime(p)) throw ValidationError("field characteristic must be prime, got " + std::to_string(p));
    if (modulus.empty()) modulus = {0, 1};
    for (auto& c : modulus) c = ((c % p) + p) % p;
    while (modulus.size() > 1 && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1) throw ValidationError("field modulus must be monic of degree >= 1");
    int k = static_cast<int>(modulus.size()) - 1;
    if (k > 1 && !irreducible(p, modulus)) throw ValidationError("field modulus is reducible over F_p");
    long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 1024) throw ResourceLimit("field order above 1024 is not supported");
    return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
  }

  static std::shared_ptr<const Field> prime(int p) { return make(p); }
  /// F_4 = F_2[g]/(g^2+g+1).
  static std::shared_ptr<const Field> f4() { return make(2, {1, 1, 1}); }
  /// F_9 = F_3[g]/(g^2+1).
  static std::shared_ptr<const Field> f9() { return make(3, {1, 0, 1}); }

  static bool irreducible(int p, const std::vector<int>& modulus) {
    int k = static_cast<int>(modulus.size()) - 1;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
      long count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (long idx = 0; idx < count; ++idx) {
        std::vector<int> f(d + 1, 0);
        long t = idx;
        for (int i = 0; i < d; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[d] = 1;
        auto r = detail::poly_mod_p(modulus, f, p);
        bool zero = true;
        for (int c : r) if (c != 0) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  int p() const { return p_; }
  int degree() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  bool is_prime_field() const { return k_ == 1; }

  bool same_as(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

  Coef add(Coef a, Coef b) const { return add_[a * q_ + b]; }
  Coef sub(Coef a, Coef b) const { return add_[a * q_ + neg_[b]]; }
  Coef neg(Coef a) const { return neg_[a]; }
  Coef mul(Coef a, Coef b) const { return mul_[a * q_ + b]; }
  Coef inv(Coef a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name());
    return inv_[a];
  }
  Coef div(Coef a, Coef b) const { return mul(a, inv(b)); }
  Coef pow(Coef a, unsigned long long e) const {
    Coef r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Coef frobenius(Coef a) const { return pow(a, static_cast<unsigned long long>(p_)); }
  /// Image of an integer under Z -> F_p -> F_q.
  Coef from_int(long long v) const { return static_cast<Coef>(((v % p_) + p_) % p_); }
  /// The generator g (equal to the integer p's code when k > 1).
  Coef generator() const { return k_ == 1 ? Coef(0) : static_cast<Coef>(p_); }
  bool in_prime_field(Coef a) const { return a < p_; }

  std::vector<int> digits(Coef a) const {
    std::vector<int> d(k_, 0);
    for (int i = 0; i < k_; ++i) { d[i] = a % p_; a = static_cast<Coef>(a / p_); }
    return d;
  }
  Coef from_digits(const std::vector<int>& d) const {
    long c = 0, b = 1;
    for (int i = 0; i < k_ && i < static_cast<int>(d.size()); ++i) {
      c += (((d[i] % p_) + p_) % p_) * b;
      b *= p_;
    }
    return static_cast<Coef>(c);
  }

  /// Text of a coefficient: an integer in 0..p-1, or a polynomial in g.
  std::string to_string(Coef a) const {
    if (k_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string s;
    for (int i = k_ - 1; i >= 0; --i) {
      if (d[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(d[i]);
      } else {
        if (d[i] != 1) s += std::to_string(d[i]) + "*";
        s += "g";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

  std::string name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(q_);
  }

 private:
  Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= p_;
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(static_cast<Coef>(a));
      std::vector<int> n(k_);
      for (int i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
      neg_[a] = from_digits(n);
      for (int b = 0; b < q_; ++b) {
        auto db = digits(static_cast<Coef>(b));
        std::vector<int> s(k_);
        for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = from_digits(s);
        std::vector<int> prod(2 * k_, 0);
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        auto r = k_ == 1 ? std::vector<int>{prod[0]} : detail::poly_mod_p(prod, modulus_, p_);
        mul_[a * q_ + b] = from_digits(r);
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<Coef>(b); break; }
  }

  int p_, k_, q_ = 1;
  std::vector<int> modulus_;
  std::vector<Coef> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline void require_same_field(const Field& a, const Field& b) {
  if (&a != &b && !a.same_as(b)) throw IncompatibleField(a.name() + " vs " + b.name());
}

/// A field element carrying its field; used at API boundaries.
class FieldElem {
 public:
  FieldElem(FieldPtr f, Coef c) : f_(std::move(f)), c_(c) {}
  static FieldElem from_int(FieldPtr f, long long v) {
    Coef c = f->from_int(v);
    return FieldElem(std::move(f), c);
  }
  static FieldElem g(FieldPtr f) {
    if (f->degree() == 1) throw ValidationError("prime field has no generator symbol g");
    Coef c = f->generator();
    return FieldElem(std::move(f), c);
  }

  const FieldPtr& field() const { return f_; }
  Coef code() const { return c_; }
  bool is_zero() const { return c_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(*a.f_, *b.f_);
    return {a.f_, a.f_->add(a.c_, b.c_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_field(*a.f_, *b.f_);
    return {a.f_, a.f_->sub(a.c_, b.c_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(*a.f_, *b.f_);
    return {a.f_, a.f_->mul(a.c_, b.c_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same_field(*a.f_, *b.f_);
    return {a.f_, a.f_->div(a.c_, b.c_)};
  }
  FieldElem operator-() const { return {f_, f_->neg(c_)}; }
  FieldElem inverse() const { return {f_, f_->inv(c_)}; }
  FieldElem pow(unsigned long long e) const { return {f_, f_->pow(c_, e)}; }
  FieldElem frobenius() const { return {f_, f_->frobenius(c_)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.f_->same_as(*b.f_) && a.c_ == b.c_;
  }
  std::string to_string() const { return f_->to_string(c_); }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }

 private:
  FieldPtr f_;
  Coef c_;
};

enum class FieldOp { add, sub, mul, div, inv, neg, pow, frobenius };

/// One-shot arithmetic entry point. `b` is ignored for unary ops; `e` is the
/// exponent for pow.
inline FieldElem field_arith(FieldOp op, const FieldElem& a, const FieldElem& b, unsigned long long e = 0) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    case FieldOp::inv: return a.inverse();
    case FieldOp::neg: return -a;
    case FieldOp::pow: return a.pow(e);
    case FieldOp::frobenius: return a.frobenius();
  }
  return a;
}

}  // namespace chernlab
