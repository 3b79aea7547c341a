#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/limits.hpp"
#include "chernlab/poly.hpp"

namespace chernlab {

namespace detail {

using QSeries = std::vector<mpq_class>;  // coefficients of x^0..x^{prec-1}

inline QSeries qmul(const QSeries& a, const QSeries& b, int prec) {
  QSeries r(prec, 0);
  for (int i = 0; i < prec && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < prec && j < static_cast<int>(b.size()); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline QSeries qpow(QSeries a, unsigned long long e, int prec) {
  QSeries r(prec, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = qmul(r, a, prec);
    e >>= 1;
    if (e) a = qmul(a, a, prec);
  }
  return r;
}

// f(g(x)) with g(0) = 0.
inline QSeries qcompose(const QSeries& f, const QSeries& g, int prec) {
  QSeries r(prec, 0), pw(prec, 0);
  pw[0] = 1;
  for (int k = 0; k < prec && k < static_cast<int>(f.size()); ++k) {
    if (k > 0) pw = qmul(pw, g, prec);
    if (f[k] == 0) continue;
    for (int i = 0; i < prec; ++i)
      if (pw[i] != 0) r[i] += f[k] * pw[i];
  }
  return r;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline Coef reduce_mod_p(const mpq_class& c, int p, const std::string& where) {
  mpz_class den = c.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
    throw NonIntegralCoefficient("coefficient " + c.get_str() + " of " + where + " is not p-integral");
  mpz_class num = c.get_num();
  mpz_class pm = p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
  mpz_class r = (num * inv) % pm;
  if (r < 0) r += pm;
  return static_cast<Coef>(r.get_ui());
}

}  // namespace detail

/// A one-dimensional commutative formal group law over F_p, truncated at
/// total degree `prec`: F(x,y) = sum a_ij x^i y^j with i+j < prec.
class FormalGroupLaw {
 public:
  enum class Kind { honda, multiplicative };

  int p() const { return p_; }
  int height() const { return n_; }
  int prec() const { return prec_; }
  Kind kind() const { return kind_; }
  const FieldPtr& field() const { return field_; }
  Coef coeff(int i, int j) const { return (i + j < prec_) ? a_[i * prec_ + j] : Coef(0); }

  std::string name() const {
    if (kind_ == Kind::multiplicative) return "multiplicative(p=" + std::to_string(p_) + ")";
    return "honda(p=" + std::to_string(p_) + ",n=" + std::to_string(n_) + ")";
  }

  /// Rational coefficient a_ij before reduction (Honda only).
  const mpq_class& lift(int i, int j) const { return lift_.at(i * prec_ + j); }
  bool has_lift() const { return !lift_.empty(); }

  /// [k](x) mod x^prec as coefficients over F_p.
  const std::vector<Coef>& series(long long k) const {
    auto it = kcache_.find(k);
    if (it != kcache_.end()) return it->second;
    std::vector<Coef> s;
    if (kind_ == Kind::multiplicative) {
      s = mult_series(k);
    } else {
      detail::QSeries arg(prec_, 0);
      for (int i = 0; i < prec_; ++i) arg[i] = log_[i] * mpq_class(static_cast<long>(k));
      auto q = detail::qcompose(exp_, arg, prec_);
      s.resize(prec_);
      for (int i = 0; i < prec_; ++i) s[i] = detail::reduce_mod_p(q[i], p_, "[" + std::to_string(k) + "](x)");
    }
    return kcache_.emplace(k, std::move(s)).first->second;
  }

  /// [k](x) by iterating F(-, x) over F_p; an independent route.
  std::vector<Coef> series_by_addition(long long k) const {
    std::vector<Coef> cur(prec_, 0);
    if (k == 0) return cur;
    std::vector<Coef> x(prec_, 0);
    if (prec_ > 1) x[1] = 1;
    std::vector<Coef> step = x;
    if (k < 0) step = inverse_by_solving();
    long long m = k < 0 ? -k : k;
    for (long long i = 0; i < m; ++i) cur = add_series(cur, step);
    return cur;
  }

  /// F(a(x), b(x)) mod x^prec for series with zero constant term.
  std::vector<Coef> add_series(const std::vector<Coef>& a, const std::vector<Coef>& b) const {
    const Field& F = *field_;
    auto mul = [&](const std::vector<Coef>& u, const std::vector<Coef>& v) {
      std::vector<Coef> r(prec_, 0);
      for (int i = 0; i < prec_; ++i) {
        if (!u[i]) continue;
        for (int j = 0; i + j < prec_; ++j)
          if (v[j]) r[i + j] = F.add(r[i + j], F.mul(u[i], v[j]));
      }
      return r;
    };
    std::vector<std::vector<Coef>> pa(prec_), pb(prec_);
    pa[0].assign(prec_, 0);
    pa[0][0] = 1;
    pb[0] = pa[0];
    for (int i = 1; i < prec_; ++i) {
      pa[i] = mul(pa[i - 1], a);
      pb[i] = mul(pb[i - 1], b);
    }
    std::vector<Coef> r(prec_, 0);
    for (int i = 0; i < prec_; ++i)
      for (int j = 0; i + j < prec_; ++j) {
        Coef c = coeff(i, j);
        if (!c) continue;
        auto t = mul(pa[i], pb[j]);
        for (int k = 0; k < prec_; ++k)
          if (t[k]) r[k] = F.add(r[k], F.mul(c, t[k]));
      }
    return r;
  }

  /// Composition u(v(x)) of truncated series, v(0) = 0.
  std::vector<Coef> compose(const std::vector<Coef>& u, const std::vector<Coef>& v) const {
    const Field& F = *field_;
    std::vector<Coef> r(prec_, 0), pw(prec_, 0);
    pw[0] = 1;
    for (int k = 0; k < prec_; ++k) {
      if (k > 0) {
        std::vector<Coef> nx(prec_, 0);
        for (int i = 0; i < prec_; ++i) {
          if (!pw[i]) continue;
          for (int j = 0; i + j < prec_; ++j)
            if (v[j]) nx[i + j] = F.add(nx[i + j], F.mul(pw[i], v[j]));
        }
        pw.swap(nx);
      }
      if (!u[k]) continue;
      for (int i = 0; i < prec_; ++i)
        if (pw[i]) r[i] = F.add(r[i], F.mul(u[k], pw[i]));
    }
    return r;
  }

  /// The inverse series solved coefficient by coefficient from F(x, i(x)) = 0.
  std::vector<Coef> inverse_by_solving() const {
    const Field& F = *field_;
    std::vector<Coef> x(prec_, 0), inv(prec_, 0);
    if (prec_ > 1) x[1] = 1;
    for (int d = 1; d < prec_; ++d) {
      // coefficient of x^d in F(x, inv) is inv[d] + (terms from lower inv)
      inv[d] = 0;
      auto s = add_series(x, inv);
      inv[d] = F.neg(s[d]);
    }
    return inv;
  }

  /// F(x,y) as a polynomial in a two-variable ring over F_p.
  Poly as_poly(const RingPtr& r, int xi = 0, int yi = 1) const {
    std::vector<Term> ts;
    for (int i = 0; i < prec_; ++i)
      for (int j = 0; i + j < prec_; ++j)
        if (coeff(i, j)) {
          Monomial m;
          m.e[xi] = static_cast<std::uint16_t>(i);
          m.e[yi] = static_cast<std::uint16_t>(j);
          ts.push_back({m, coeff(i, j)});
        }
    return Poly::from_terms(r, std::move(ts));
  }

  /// [k](x) as a polynomial in variable `xi` of r.
  Poly series_poly(long long k, const RingPtr& r, int xi = 0) const {
    const auto& s = series(k);
    std::vector<Term> ts;
    for (int i = 0; i < prec_; ++i)
      if (s[i]) ts.push_back({Monomial::var(xi, i), s[i]});
    return Poly::from_terms(r, std::move(ts));
  }

  static std::shared_ptr<const FormalGroupLaw> honda(int p, int n, int prec = 32) {
    check_params(p, n, prec);
    auto f = std::shared_ptr<FormalGroupLaw>(new FormalGroupLaw());
    f->p_ = p;
    f->n_ = n;
    f->prec_ = prec;
    f->kind_ = Kind::honda;
    f->field_ = Field::prime(p);
    f->log_.assign(prec, 0);
    long long q = detail::ipow(p, n);
    {
      long long deg = 1;
      mpz_class den = 1;
      while (deg < prec) {
        f->log_[deg] = mpq_class(1) / mpq_class(den);
        f->log_[deg].canonicalize();
        deg *= q;
        den *= p;
      }
    }
    // exp = l^{-1} by the fixed point b = s - sum_{i>=1} b^{q^i}/p^i
    detail::QSeries b(prec, 0);
    if (prec > 1) b[1] = 1;
    for (int iter = 0; iter < prec + 2; ++iter) {
      detail::QSeries nb(prec, 0);
      if (prec > 1) nb[1] = 1;
      long long e = q;
      mpz_class den = p;
      while (e < prec) {
        auto pw = detail::qpow(b, static_cast<unsigned long long>(e), prec);
        for (int i = 0; i < prec; ++i)
          if (pw[i] != 0) nb[i] -= pw[i] / mpq_class(den);
        e *= q;
        den *= p;
      }
      if (nb == b) break;
      b = nb;
    }
    f->exp_ = b;
    f->build_from_log();
    return f;
  }

  static std::shared_ptr<const FormalGroupLaw> multiplicative(int p, int prec = 32) {
    check_params(p, 1, prec);
    auto f = std::shared_ptr<FormalGroupLaw>(new FormalGroupLaw());
    f->p_ = p;
    f->n_ = 1;
    f->prec_ = prec;
    f->kind_ = Kind::multiplicative;
    f->field_ = Field::prime(p);
    f->a_.assign(static_cast<std::size_t>(prec) * prec, 0);
    const Field& F = *f->field_;
    if (prec > 1) {
      f->a_[1 * prec + 0] = 1;
      f->a_[0 * prec + 1] = 1;
    }
    if (prec > 2) f->a_[1 * prec + 1] = F.neg(1);
    return f;
  }

 private:
  FormalGroupLaw() = default;

  static void check_params(int p, int n, int prec) {
    if (!detail::is_prime(p)) throw ValidationError("p must be prime");
    if (n < 1) throw ValidationError("height must be positive");
    if (prec < 2) throw ValidationError("precision must be at least 2");
    if (prec > limits().fgl_prec) throw ResourceLimit("precision " + std::to_string(prec) + " above ceiling " + std::to_string(limits().fgl_prec));
  }

  void build_from_log() {
    const int P = prec_;
    // s = l(x) + l(y), sparse two-variable
    struct T2 {
      int i, j;
      mpq_class c;
    };
    std::vector<T2> s;
    for (int d = 1; d < P; ++d)
      if (log_[d] != 0) {
        s.push_back({d, 0, log_[d]});
        s.push_back({0, d, log_[d]});
      }
    std::vector<mpq_class> acc(static_cast<std::size_t>(P) * P, 0);
    std::vector<mpq_class> pw(static_cast<std::size_t>(P) * P, 0);
    pw[0] = 1;
    for (int k = 1; k < P; ++k) {
      std::vector<mpq_class> nx(static_cast<std::size_t>(P) * P, 0);
      for (int i = 0; i < P; ++i)
        for (int j = 0; i + j < P; ++j) {
          const mpq_class& c = pw[i * P + j];
          if (c == 0) continue;
          for (auto& t : s)
            if (i + t.i + j + t.j < P) nx[(i + t.i) * P + (j + t.j)] += c * t.c;
        }
      pw.swap(nx);
      if (exp_[k] == 0) continue;
      for (int i = 0; i < P; ++i)
        for (int j = 0; i + j < P; ++j)
          if (pw[i * P + j] != 0) acc[i * P + j] += exp_[k] * pw[i * P + j];
    }
    lift_ = acc;
    a_.assign(static_cast<std::size_t>(P) * P, 0);
    for (int i = 0; i < P; ++i)
      for (int j = 0; i + j < P; ++j)
        if (acc[i * P + j] != 0)
          a_[i * P + j] = detail::reduce_mod_p(acc[i * P + j], p_, "F(x,y) at x^" + std::to_string(i) + "y^" + std::to_string(j));
  }

  std::vector<Coef> mult_series(long long k) const {
    // [k](x) = 1 - (1-x)^k; negative k through the geometric series
    const Field& F = *field_;
    std::vector<Coef> base(prec_, 0);
    base[0] = 1;
    if (k >= 0) {
      std::vector<Coef> one_minus_x(prec_, 0);
      one_minus_x[0] = 1;
      if (prec_ > 1) one_minus_x[1] = F.neg(1);
      std::vector<Coef> r = base;
      for (long long i = 0; i < k; ++i) {
        std::vector<Coef> nx(prec_, 0);
        for (int a = 0; a < prec_; ++a) {
          if (!r[a]) continue;
          for (int b = 0; a + b < prec_ && b < 2; ++b)
            if (one_minus_x[b]) nx[a + b] = F.add(nx[a + b], F.mul(r[a], one_minus_x[b]));
        }
        r.swap(nx);
      }
      std::vector<Coef> out(prec_, 0);
      for (int i = 0; i < prec_; ++i) out[i] = F.neg(r[i]);
      out[0] = F.add(out[0], 1);
      return out;
    }
    std::vector<Coef> r = base;
    for (long long i = 0; i < -k; ++i) {
      std::vector<Coef> nx(prec_, 0);
      for (int a = 0; a < prec_; ++a) {
        if (!r[a]) continue;
        for (int b = 0; a + b < prec_; ++b) nx[a + b] = F.add(nx[a + b], r[a]);
      }
      r.swap(nx);
    }
    std::vector<Coef> out(prec_, 0);
    for (int i = 0; i < prec_; ++i) out[i] = F.neg(r[i]);
    out[0] = F.add(out[0], 1);
    return out;
  }

  int p_ = 2, n_ = 1, prec_ = 32;
  Kind kind_ = Kind::honda;
  FieldPtr field_;
  std::vector<Coef> a_;
  std::vector<mpq_class> lift_;
  detail::QSeries log_, exp_;
  mutable std::map<long long, std::vector<Coef>> kcache_;
};

using FglPtr = std::shared_ptr<const FormalGroupLaw>;

inline FglPtr honda_fgl(int p, int n, int prec = 32) { return FormalGroupLaw::honda(p, n, prec); }
inline FglPtr multiplicative_fgl(int p, int prec = 32) { return FormalGroupLaw::multiplicative(p, prec); }

/// [k](x) mod x^prec over F_p.
inline const std::vector<Coef>& fgl_int_mul(const FormalGroupLaw& f, long long k) { return f.series(k); }

/// Evaluate a one-variable series at a nilpotent element of Q.
inline Poly eval_series(const std::vector<Coef>& s, const Poly& a, const QuotientRing& Q) {
  int na = Q.element_nilpotency(a);
  if (na < 0 || na > static_cast<int>(s.size()))
    throw PrecisionExceeded("series precision " + std::to_string(s.size()) + " does not cover the nilpotency of the argument");
  Poly r = Q.zero(), pw = Q.one();
  Poly ar = Q.reduce(a);
  for (int i = 0; i < static_cast<int>(s.size()) && i < na; ++i) {
    if (i > 0) pw = Q.mul(pw, ar);
    if (pw.is_zero()) break;
    if (s[i]) r += pw.scaled(s[i]);
  }
  return Q.reduce(r);
}

/// F(a, b) for nilpotent a, b of Q. Every dropped term a^i b^j (i+j >= prec)
/// must vanish in Q.
inline Poly fgl_add_in_ring(const FormalGroupLaw& f, const Poly& a, const Poly& b, const QuotientRing& Q) {
  int na = Q.element_nilpotency(a), nb = Q.element_nilpotency(b);
  if (na < 0 || nb < 0) throw PrecisionExceeded("arguments of the formal sum must be nilpotent");
  bool ok = na + nb - 1 <= f.prec();
  if (!ok) {
    try {
      ok = Q.nilpotency_index() <= f.prec();
    } catch (const Error&) {
      ok = false;
    }
  }
  if (!ok) throw PrecisionExceeded("formal group law precision " + std::to_string(f.prec()) + " is too small for these arguments");
  Poly ar = Q.reduce(a), br = Q.reduce(b);
  std::vector<Poly> pb{Q.one()};
  for (int j = 1; j < nb; ++j) pb.push_back(Q.mul(pb.back(), br));
  Poly res = Q.zero(), pa = Q.one();
  for (int i = 0; i < na; ++i) {
    if (i > 0) pa = Q.mul(pa, ar);
    Poly inner = Q.zero();
    for (int j = 0; j < nb && i + j < f.prec(); ++j) {
      Coef c = f.coeff(i, j);
      if (c) inner += pb[j].scaled(c);
    }
    if (!inner.is_zero()) res += Q.mul(pa, inner);
  }
  return Q.reduce(res);
}

/// [k](a) in Q.
inline Poly fgl_mul_in_ring(const FormalGroupLaw& f, long long k, const Poly& a, const QuotientRing& Q) {
  return eval_series(f.series(k), a, Q);
}

}  // namespace chernlab
