#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"

namespace chernlab {

/// Theta(v) = (Z/p^v)^n. Points are coded as base p^v digit strings with
/// the first coordinate most significant, so code order is lex order.
struct Lattice {
  int p = 2, v = 1, n = 1;

  Lattice() = default;
  Lattice(int p_, int v_, int n_) : p(p_), v(v_), n(n_) {
    if (p < 2 || v < 0 || n < 0) throw ValidationError("bad lattice parameters");
    long long s = 1;
    for (int i = 0; i < n * v; ++i) {
      s *= p;
      if (s > (1LL << 24)) throw ResourceLimit("lattice too large");
    }
  }
  int modulus() const {
    int m = 1;
    for (int i = 0; i < v; ++i) m *= p;
    return m;
  }
  std::uint32_t size() const {
    std::uint32_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::uint32_t>(modulus());
    return s;
  }
  std::uint32_t encode(const std::vector<int>& r) const {
    if (static_cast<int>(r.size()) != n) throw ValidationError("point has wrong rank");
    int M = modulus();
    std::uint32_t c = 0;
    for (int x : r) c = c * M + static_cast<std::uint32_t>(((x % M) + M) % M);
    return c;
  }
  std::vector<int> decode(std::uint32_t c) const {
    int M = modulus();
    std::vector<int> r(n);
    for (int i = n - 1; i >= 0; --i) {
      r[i] = static_cast<int>(c % M);
      c /= M;
    }
    return r;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (int i = 0; i < n; ++i) x[i] += y[i];
    return encode(x);
  }
  std::uint32_t scale(std::uint32_t a, long long k) const {
    int M = modulus();
    auto x = decode(a);
    long long km = ((k % M) + M) % M;
    for (auto& xi : x) xi = static_cast<int>((xi * km) % M);
    return encode(x);
  }
  std::uint32_t neg(std::uint32_t a) const { return scale(a, -1); }
  /// Order of a point as a power of p (returns the exponent).
  int order_exp(std::uint32_t a) const {
    int e = 0;
    while (a != 0) {
      a = scale(a, p);
      ++e;
    }
    return e;
  }
  int pairing(std::uint32_t a, std::uint32_t x) const {
    auto u = decode(a), w = decode(x);
    long long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long long>(u[i]) * w[i];
    int M = modulus();
    return static_cast<int>(((s % M) + M) % M);
  }
  std::string point_string(std::uint32_t c) const {
    auto r = decode(c);
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(r[i]);
    }
    return s + "]";
  }
  friend bool operator==(const Lattice& a, const Lattice& b) { return a.p == b.p && a.v == b.v && a.n == b.n; }
};

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Element of Z[Theta(v)]; multiplicities may be negative.
class VirtualLattice {
 public:
  VirtualLattice() = default;
  explicit VirtualLattice(Lattice L) : L_(L) {}
  static VirtualLattice point(Lattice L, std::uint32_t c, long long mult = 1) {
    VirtualLattice d(L);
    if (mult) d.m_[c] = mult;
    return d;
  }
  static VirtualLattice unit(Lattice L) { return point(L, 0, 1); }

  const Lattice& lattice() const { return L_; }
  const std::map<std::uint32_t, long long>& terms() const { return m_; }
  long long mult(std::uint32_t c) const {
    auto it = m_.find(c);
    return it == m_.end() ? 0 : it->second;
  }
  long long dim() const {
    long long d = 0;
    for (auto& [c, k] : m_) d += k;
    return d;
  }
  bool is_zero() const { return m_.empty(); }
  bool is_positive() const {
    for (auto& [c, k] : m_)
      if (k < 0) return false;
    return true;
  }
  void add_point(std::uint32_t c, long long k) {
    if (!k) return;
    auto& s = m_[c];
    s += k;
    if (s == 0) m_.erase(c);
  }

  friend VirtualLattice operator+(const VirtualLattice& a, const VirtualLattice& b) {
    VirtualLattice r = a;
    r.L_ = a.m_.empty() ? b.L_ : a.L_;
    for (auto& [c, k] : b.m_) r.add_point(c, k);
    return r;
  }
  friend VirtualLattice operator-(const VirtualLattice& a, const VirtualLattice& b) {
    VirtualLattice r = a;
    r.L_ = a.m_.empty() ? b.L_ : a.L_;
    for (auto& [c, k] : b.m_) r.add_point(c, -k);
    return r;
  }
  friend VirtualLattice operator*(const VirtualLattice& a, const VirtualLattice& b) {
    VirtualLattice r(a.L_);
    for (auto& [c1, k1] : a.m_)
      for (auto& [c2, k2] : b.m_) r.add_point(a.L_.add(c1, c2), k1 * k2);
    return r;
  }
  VirtualLattice scaled(long long k) const {
    VirtualLattice r(L_);
    if (!k) return r;
    for (auto& [c, x] : m_) r.m_[c] = x * k;
    return r;
  }
  VirtualLattice psi(long long k) const {
    VirtualLattice r(L_);
    for (auto& [c, x] : m_) r.add_point(L_.scale(c, k), x);
    return r;
  }
  friend bool operator==(const VirtualLattice& a, const VirtualLattice& b) { return a.m_ == b.m_; }
  friend bool operator!=(const VirtualLattice& a, const VirtualLattice& b) { return !(a == b); }

  /// Coefficients lambda^0..lambda^K of lambda_t, using
  /// lambda_t([a]) = 1 + t[a] and lambda_t(-[a]) = (1 + t[a])^{-1}.
  std::vector<VirtualLattice> lambda_series(int K) const {
    std::vector<VirtualLattice> s(K + 1, VirtualLattice(L_));
    s[0] = unit(L_);
    for (auto& [c, k] : m_) {
      long long reps = k > 0 ? k : -k;
      for (long long r = 0; r < reps; ++r) {
        if (k > 0) {
          for (int j = K; j >= 1; --j) s[j] = s[j] + s[j - 1] * point(L_, c);
        } else {
          // multiply by sum_j (-1)^j [ja] t^j
          for (int j = 1; j <= K; ++j) s[j] = s[j] - s[j - 1] * point(L_, c);
        }
      }
    }
    return s;
  }

  std::string to_string() const {
    if (m_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [c, k] : m_) {
      long long a = k < 0 ? -k : k;
      if (first) s += k < 0 ? "-" : "";
      else s += k < 0 ? " - " : " + ";
      first = false;
      if (a != 1) s += std::to_string(a);
      s += L_.point_string(c);
    }
    return s;
  }

 private:
  Lattice L_;
  std::map<std::uint32_t, long long> m_;
};

/// A divisor D = sum m_a [a] in N[Theta(v)], d = dim D = sum m_a.
class LatticeDivisor {
 public:
  LatticeDivisor() = default;
  explicit LatticeDivisor(Lattice L) : L_(L) {}
  static LatticeDivisor point(Lattice L, const std::vector<int>& r, long long mult = 1) {
    LatticeDivisor d(L);
    if (mult) d.m_[L.encode(r)] = mult;
    return d;
  }
  static LatticeDivisor point_code(Lattice L, std::uint32_t c, long long mult = 1) {
    LatticeDivisor d(L);
    if (mult) d.m_[c] = mult;
    return d;
  }
  static LatticeDivisor zero_point(Lattice L, long long mult = 1) { return point_code(L, 0, mult); }
  static LatticeDivisor from_codes(Lattice L, const std::vector<std::uint32_t>& codes) {
    LatticeDivisor d(L);
    for (auto c : codes) ++d.m_[c];
    return d;
  }

  const Lattice& lattice() const { return L_; }
  const std::map<std::uint32_t, long long>& terms() const { return m_; }
  long long mult(std::uint32_t c) const {
    auto it = m_.find(c);
    return it == m_.end() ? 0 : it->second;
  }
  long long dim() const {
    long long d = 0;
    for (auto& [c, k] : m_) d += k;
    return d;
  }
  bool empty() const { return m_.empty(); }
  std::vector<std::uint32_t> points() const {
    std::vector<std::uint32_t> out;
    for (auto& [c, k] : m_)
      for (long long i = 0; i < k; ++i) out.push_back(c);
    return out;
  }

  friend LatticeDivisor operator+(const LatticeDivisor& a, const LatticeDivisor& b) {
    LatticeDivisor r = a;
    if (a.m_.empty()) r.L_ = b.L_;
    for (auto& [c, k] : b.m_) r.m_[c] += k;
    return r;
  }
  friend LatticeDivisor operator*(const LatticeDivisor& a, const LatticeDivisor& b) {
    LatticeDivisor r(a.L_);
    for (auto& [c1, k1] : a.m_)
      for (auto& [c2, k2] : b.m_) r.m_[a.L_.add(c1, c2)] += k1 * k2;
    return r;
  }
  LatticeDivisor scaled(long long k) const {
    if (k < 0) throw ValidationError("negative multiple of a divisor");
    LatticeDivisor r(L_);
    if (!k) return r;
    for (auto& [c, x] : m_) r.m_[c] = x * k;
    return r;
  }
  friend bool operator==(const LatticeDivisor& a, const LatticeDivisor& b) { return a.m_ == b.m_; }
  friend bool operator!=(const LatticeDivisor& a, const LatticeDivisor& b) { return !(a == b); }
  friend bool operator<(const LatticeDivisor& a, const LatticeDivisor& b) { return a.m_ < b.m_; }

  LatticeDivisor psi(long long k) const {
    LatticeDivisor r(L_);
    for (auto& [c, x] : m_) r.m_[L_.scale(c, k)] += x;
    return r;
  }

  /// lambda^k by summing over k-element sub-multisets.
  LatticeDivisor lambda_enumerate(long long k) const {
    if (k < 0) throw LambdaOutOfRange("lambda^" + std::to_string(k));
    LatticeDivisor r(L_);
    if (k > dim()) return r;
    std::vector<std::pair<std::uint32_t, long long>> pts(m_.begin(), m_.end());
    std::vector<int> take(pts.size(), 0);
    std::function<void(std::size_t, long long, std::uint32_t, long long)> rec =
        [&](std::size_t i, long long left, std::uint32_t acc, long long weight) {
          if (i == pts.size()) {
            if (left == 0) r.m_[acc] += weight;
            return;
          }
          long long rest = 0;
          for (std::size_t j = i + 1; j < pts.size(); ++j) rest += pts[j].second;
          for (long long c = 0; c <= std::min(left, pts[i].second); ++c) {
            if (left - c > rest) continue;
            rec(i + 1, left - c, L_.add(acc, L_.scale(pts[i].first, c)), weight * binomial(pts[i].second, c));
          }
        };
    rec(0, k, 0, 1);
    return r;
  }

  /// lambda^k by iterating lambda_t(D + [a]) = lambda_t(D)(1 + t[a]).
  LatticeDivisor lambda_addition(long long k) const {
    if (k < 0) throw LambdaOutOfRange("lambda^" + std::to_string(k));
    LatticeDivisor r(L_);
    if (k > dim()) return r;
    std::vector<LatticeDivisor> s(k + 1, LatticeDivisor(L_));
    s[0] = zero_point(L_);
    long long used = 0;
    for (auto& [c, mlt] : m_) {
      for (long long t = 0; t < mlt; ++t) {
        ++used;
        for (long long j = std::min(k, used); j >= 1; --j) {
          LatticeDivisor sh(L_);
          for (auto& [c2, x] : s[j - 1].m_) sh.m_[L_.add(c2, c)] += x;
          s[j] = s[j] + sh;
        }
      }
    }
    return s[k];
  }

  LatticeDivisor lambda(long long k) const { return dim() > 8 ? lambda_addition(k) : lambda_enumerate(k); }

  VirtualLattice to_virtual() const {
    VirtualLattice v(L_);
    for (auto& [c, k] : m_) v.add_point(c, k);
    return v;
  }

  /// Text form "2[0,0] + [1,0] + [1,1]"; the empty divisor prints as "0".
  std::string to_string() const {
    if (m_.empty()) return "0";
    std::string s;
    for (auto& [c, k] : m_) {
      if (!s.empty()) s += " + ";
      if (k != 1) s += std::to_string(k);
      s += L_.point_string(c);
    }
    return s;
  }

  static LatticeDivisor parse(Lattice L, const std::string& s) {
    LatticeDivisor d(L);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (s.substr(i) == "0") return d;
    while (i < s.size()) {
      skip();
      long long mult = 1;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        mult = std::stoll(s.substr(st, i - st));
      }
      skip();
      if (i >= s.size() || s[i] != '[') throw ParseError("'[' expected in divisor '" + s + "'");
      ++i;
      std::vector<int> r;
      for (;;) {
        skip();
        std::size_t st = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) throw ParseError("residue expected in divisor '" + s + "'");
        r.push_back(std::stoi(s.substr(st, i - st)));
        skip();
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ']') { ++i; break; }
        throw ParseError("']' expected in divisor '" + s + "'");
      }
      d.m_[L.encode(r)] += mult;
      skip();
      if (i < s.size()) {
        if (s[i] != '+') throw ParseError("'+' expected in divisor '" + s + "'");
        ++i;
      }
    }
    for (auto it = d.m_.begin(); it != d.m_.end();)
      it = it->second == 0 ? d.m_.erase(it) : std::next(it);
    return d;
  }

 private:
  Lattice L_;
  std::map<std::uint32_t, long long> m_;
};

enum class LdOp { add, mul, lambda, psi, dim };

/// Divisor operations by name; `k` is the lambda/psi index and `b` the
/// second operand for add and mul.
inline LatticeDivisor ld_op(LdOp op, const LatticeDivisor& a, const LatticeDivisor* b = nullptr, long long k = 0) {
  switch (op) {
    case LdOp::add:
      if (!b) throw ValidationError("add needs two operands");
      return a + *b;
    case LdOp::mul:
      if (!b) throw ValidationError("mul needs two operands");
      return a * *b;
    case LdOp::lambda: return a.lambda(k);
    case LdOp::psi: return a.psi(k);
    case LdOp::dim: return LatticeDivisor::zero_point(a.lattice(), a.dim());
  }
  return a;
}

/// Every multiset of `d` points of Theta(v), in lex order of sorted codes.
inline std::vector<LatticeDivisor> all_divisors(const Lattice& L, int d) {
  std::vector<LatticeDivisor> out;
  std::uint32_t N = L.size();
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(LatticeDivisor::from_codes(L, cur));
      return;
    }
    for (std::uint32_t c = from; c < N; ++c) {
      cur.push_back(c);
      rec(c);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace chernlab
