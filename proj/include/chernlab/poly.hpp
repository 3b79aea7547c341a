#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chernlab/errors.hpp"
#include "chernlab/field.hpp"

namespace chernlab {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  /// True if `this` divides `b`.
  bool divides(const Monomial& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  /// b / this, assuming divisibility.
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - e[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  static Monomial var(int i, int exp = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(exp);
    return m;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Lexicographic or graded-lexicographic order; `precedence` lists variable
/// indices from most to least significant.
struct MonomialOrder {
  enum class Kind { lex, grlex };
  Kind kind = Kind::lex;
  std::vector<int> precedence;

  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::grlex) {
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
    }
    for (int v : precedence) {
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.precedence == b.precedence;
  }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_q[x_1..x_m] with a variable list and a monomial order.
class PolyRing {
 public:
  static RingPtr make(FieldPtr f, std::vector<std::string> names, MonomialOrder order = {}) {
    if (names.size() > static_cast<std::size_t>(kMaxVars))
      throw ResourceLimit("at most " + std::to_string(kMaxVars) + " variables are supported");
    if (order.precedence.empty())
      for (std::size_t i = 0; i < names.size(); ++i) order.precedence.push_back(static_cast<int>(i));
    if (order.precedence.size() != names.size()) throw ValidationError("monomial order must rank every variable");
    std::vector<int> seen(names.size(), 0);
    for (int v : order.precedence) {
      if (v < 0 || v >= static_cast<int>(names.size()) || seen[v]++) throw ValidationError("bad variable precedence");
    }
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(f), std::move(names), std::move(order)));
  }

  /// Order spec "lex", "grlex", "lex:c2>c3>w" or "grlex:x>y".
  static MonomialOrder parse_order(const std::string& spec, const std::vector<std::string>& names) {
    MonomialOrder o;
    std::string kind = spec, rest;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
      kind = spec.substr(0, colon);
      rest = spec.substr(colon + 1);
    }
    if (kind == "lex") o.kind = MonomialOrder::Kind::lex;
    else if (kind == "grlex") o.kind = MonomialOrder::Kind::grlex;
    else throw UsageError("unknown monomial order: " + kind);
    if (!rest.empty()) {
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        auto end = rest.find_first_of(">,", pos);
        if (end == std::string::npos) end = rest.size();
        std::string nm = rest.substr(pos, end - pos);
        auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) throw UsageError("order names unknown variable: " + nm);
        o.precedence.push_back(static_cast<int>(it - names.begin()));
        pos = end + 1;
      }
    }
    return o;
  }

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  int var_index(const std::string& n) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == n) return i;
    return -1;
  }
  bool same_as(const PolyRing& o) const {
    return field_->same_as(*o.field_) && names_ == o.names_ && order_ == o.order_;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  PolyRing(FieldPtr f, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(f)), names_(std::move(names)), order_(std::move(order)) {}
  FieldPtr field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Monomial m;
  Coef c;
};

/// Sparse polynomial; terms are kept strictly descending in the ring order
/// with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  Poly(RingPtr r, Coef c) : ring_(std::move(r)) {
    if (c) terms_.push_back({Monomial{}, c});
  }
  static Poly constant(RingPtr r, long long v) {
    Coef c = r->F().from_int(v);
    return Poly(std::move(r), c);
  }
  static Poly var(RingPtr r, int i, int exp = 1) {
    Poly p(std::move(r));
    p.terms_.push_back({Monomial::var(i, exp), 1});
    return p;
  }
  static Poly var(RingPtr r, const std::string& name, int exp = 1) {
    int i = r->var_index(name);
    if (i < 0) throw UnassignedVariable("no variable named " + name);
    return var(std::move(r), i, exp);
  }
  static Poly monomial(RingPtr r, const Monomial& m, Coef c = 1) {
    Poly p(std::move(r));
    if (c) p.terms_.push_back({m, c});
    return p;
  }
  /// Build from unsorted terms, summing duplicates.
  static Poly from_terms(RingPtr r, std::vector<Term> ts) {
    Poly p(std::move(r));
    const auto& ord = p.ring_->order();
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    const Field& F = p.ring_->F();
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c = F.add(p.terms_.back().c, t.c);
        if (!p.terms_.back().c) p.terms_.pop_back();
      } else if (t.c) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().m; }
  Coef lc() const { return terms_.front().c; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Coef constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return 0;
  }
  /// Largest total degree of a term (-1 for zero).
  int total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  Coef coeff(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.m == m) return t.c;
    return 0;
  }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = ring_->F().neg(t.c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly scaled(Coef c) const {
    Poly r(ring_);
    if (!c) return r;
    r.terms_.reserve(terms_.size());
    const Field& F = ring_->F();
    for (auto& t : terms_) r.terms_.push_back({t.m, F.mul(t.c, c)});
    return r;
  }
  Poly times_monomial(const Monomial& m, Coef c = 1) const {
    Poly r(ring_);
    if (!c) return r;
    r.terms_.reserve(terms_.size());
    const Field& F = ring_->F();
    for (auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
    return r;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->F().inv(lc()));
  }

  /// Product keeping only terms whose monomial passes `keep`.
  template <class Keep>
  static Poly mul_filtered(const Poly& a, const Poly& b, Keep&& keep) {
    check_ring(a, b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    const Field& F = a.ring_->F();
    if (a.size() == 1 || b.size() == 1) {
      const Poly& big = a.size() == 1 ? b : a;
      const Term& t = a.size() == 1 ? a.terms_[0] : b.terms_[0];
      for (auto& s : big.terms_) {
        Monomial m = s.m * t.m;
        if (!keep(m)) continue;
        Coef c = F.mul(s.c, t.c);
        if (c) r.terms_.push_back({m, c});
      }
      return r;
    }
    std::unordered_map<Monomial, Coef, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    for (auto& s : a.terms_) {
      for (auto& t : b.terms_) {
        Monomial m = s.m * t.m;
        if (!keep(m)) continue;
        Coef& slot = acc[m];
        slot = F.add(slot, F.mul(s.c, t.c));
      }
    }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c) ts.push_back({m, c});
    const auto& ord = a.ring_->order();
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
    r.terms_ = std::move(ts);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    return mul_filtered(a, b, [](const Monomial&) { return true; });
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Drop terms failing `keep`.
  template <class Keep>
  Poly filtered(Keep&& keep) const {
    Poly r(ring_);
    for (auto& t : terms_)
      if (keep(t.m)) r.terms_.push_back(t);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical text: descending terms joined by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = ring_->F();
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      const Term& t = terms_[i];
      std::string cs = F.to_string(t.c);
      bool compound = cs.find('+') != std::string::npos;
      if (compound && terms_.size() > 1) cs = "(" + cs + ")";
      if (t.m.is_one()) {
        s += cs;
      } else if (t.c == 1) {
        s += ring_->monomial_string(t.m);
      } else {
        s += cs + "*" + ring_->monomial_string(t.m);
      }
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  /// Same polynomial viewed in another ring with the same field; variables
  /// are matched by name.
  Poly in_ring(const RingPtr& target) const {
    require_same_field(ring_->F(), target->F());
    std::vector<int> map(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) map[i] = target->var_index(ring_->names()[i]);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (!t.m.e[i]) continue;
        if (map[i] < 0) throw UnassignedVariable("variable " + ring_->names()[i] + " missing in target ring");
        m.e[map[i]] = t.m.e[i];
      }
      ts.push_back({m, t.c});
    }
    return from_terms(target, std::move(ts));
  }

  static void check_ring(const Poly& a, const Poly& b) {
    if (a.ring_.get() != b.ring_.get() && !a.ring_->same_as(*b.ring_))
      throw IncompatibleField("polynomials from different rings");
  }

 private:
  static Poly combine(const Poly& a, const Poly& b, bool subtract) {
    if (!a.ring_) return subtract ? -b : b;
    if (!b.ring_) return a;
    check_ring(a, b);
    const Field& F = a.ring_->F();
    const auto& ord = a.ring_->order();
    Poly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = ord.cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Coef bc = subtract ? F.neg(b.terms_[j].c) : b.terms_[j].c;
        r.terms_.push_back({b.terms_[j].m, bc});
        ++j;
      } else {
        Coef s = subtract ? F.sub(a.terms_[i].c, b.terms_[j].c) : F.add(a.terms_[i].c, b.terms_[j].c);
        if (s) r.terms_.push_back({a.terms_[i].m, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.ring(), 1);
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(RingPtr r, const std::string& s) : r_(std::move(r)), s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc(r_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }
  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("exponent expected");
      b = pow(b, static_cast<unsigned>(std::stoul(s_.substr(st, pos_ - st))));
    }
    return b;
  }
  Poly base() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(r_, std::stoll(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string nm = s_.substr(st, pos_ - st);
      int i = r_->var_index(nm);
      if (i >= 0) return Poly::var(r_, i);
      if (nm == "g" && r_->F().degree() > 1) return Poly(r_, r_->F().generator());
      throw UnassignedVariable("unknown symbol '" + nm + "' in '" + s_ + "'");
    }
    fail("unexpected character");
  }

  RingPtr r_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression with + - * ^ and parentheses over the ring's
/// variables; `g` names the field generator of an extension field.
inline Poly parse_poly(const RingPtr& r, const std::string& s) { return detail::PolyParser(r, s).run(); }

}  // namespace chernlab
