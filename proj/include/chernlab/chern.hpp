#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chernlab/certificate.hpp"
#include "chernlab/divisor.hpp"
#include "chernlab/groups.hpp"
#include "chernlab/lattice.hpp"
#include "chernlab/omega.hpp"
#include "chernlab/presentation.hpp"
#include "chernlab/repring.hpp"

namespace chernlab {

namespace detail {

inline QuotientPtr quotient_of(const FieldPtr& F, std::vector<std::string> names, const std::vector<std::string>& rels) {
  return QuotientRing::make(PolyRing::make(F, std::move(names)), rels);
}

inline std::vector<std::string> monomials_of_degree(const std::string& a, const std::string& b, int d) {
  std::vector<std::string> out;
  for (int i = 0; i <= d; ++i) {
    std::string s;
    if (i) s += a + "^" + std::to_string(i);
    if (d - i) s += (s.empty() ? "" : "*") + b + "^" + std::to_string(d - i);
    out.push_back(s);
  }
  return out;
}

inline Poly eval_in(const Poly& p, const std::map<std::string, Poly>& images, const QuotientRing& Q) {
  return poly_eval_subst(p, images, Target(Q));
}

inline json poly_list(const std::vector<Poly>& ps) {
  json j = json::array();
  for (auto& p : ps) j.push_back(p.to_string());
  return j;
}

}  // namespace detail

/// Presentation of the Sigma_3 ring at (3,2), its single-generator form,
/// the psi^2 value on [b] + [-b], and the generalized character counts.
inline Certificate sigma3_pipeline() {
  Certificate cert;
  cert.pipeline = "sigma3";
  cert.params = {{"p", 3}, {"n", 2}};
  auto R = repring_from_table(sigma3_table());
  auto f = honda_fgl(3, 2, 32);
  auto P = build_presentation(R, f, 1);
  cert.add("presentation dimension", P.dim() == 5,
           {{"dimension", P.dim()}, {"B", P.B}, {"certified", P.certified}, {"basis", detail::poly_list(P.Q->basis())}});
  cert.add("truncation certified", P.certified, {{"B", P.B}, {"rounds", P.rounds}});
  int N = single_generator_exponent(*P.Q);
  std::string y = P.Q->ring()->nvars() ? P.Q->ring()->names()[P.Q->ring()->order().precedence.back()] : "";
  json elim = json::object();
  for (std::size_t i = 0; i < P.eliminated_names.size(); ++i) elim[P.eliminated_names[i]] = P.eliminated_values[i].to_string();
  cert.add("quotient is F3[y]/y^5", N == 5, {{"y", y}, {"exponent", N}, {"eliminated", elim}});
  auto P2 = build_presentation(R, f, 2);
  cert.add("dimension unchanged at v=2", P2.dim() == P.dim(), {{"dimension", P2.dim()}});

  // psi^2 on [b] + [-b] with y = -x^2
  auto Q = detail::quotient_of(Field::prime(3), {"x"}, {"x^12"});
  Poly x = Q->var("x");
  auto D = DivisorPoly::from_roots(Q, f, {x, fgl_mul_in_ring(*f, -1, x, *Q)});
  auto Dpsi = divisor_psi(D, 2);
  Poly yD = D.c[1];
  expect_poly(cert, "y(D) = -x^2", *Q, yD, "-x^2");
  expect_poly(cert, "y(psi^2 D) = -x^2 - x^10", *Q, Dpsi.c[1], "-x^2 - x^10");
  Poly plus = Q->reduce(yD + Q->pow(yD, 5)), minus = Q->reduce(yD - Q->pow(yD, 5));
  cert.add("y(psi^2 D) = y + y^5 mod y^6", Dpsi.c[1] == plus,
           {{"y+y^5", plus.to_string()}, {"y-y^5", minus.to_string()}, {"differs from y-y^5", Dpsi.c[1] != minus}});

  auto G = symmetric_model(3);
  auto om = enumerate_omega(G, 3, 2);
  auto ch = enumerate_omega_ch(*R, 3, 2, 1);
  cert.add("|Omega| = 5", om.reps.size() == 5, {{"count", om.reps.size()}});
  cert.add("|Omega_Ch| = 5", ch.size() == 5, {{"count", ch.size()}});
  return cert;
}

/// The Sigma_4 computation at p = 2, n = 2 over F_4.
inline Certificate sigma4_pipeline() {
  Certificate cert;
  cert.pipeline = "sigma4";
  cert.params = {{"p", 2}, {"n", 2}, {"field", "F4"}};
  auto F4 = Field::f4();
  auto f = honda_fgl(2, 2, 64);

  // (a) alpha: a -> [a] + [-a] + [0] and beta: (a,b) -> [a] + [b] + [a+b]
  auto U = detail::quotient_of(F4, {"x"}, {"x^32"});
  Poly ux = U->var("x"), uxb = fgl_mul_in_ring(*f, -1, ux, *U);
  expect_poly(cert, "(a) [-1](x)", *U, uxb, "x + x^4 + x^10 + x^16 + x^22");
  auto Da = DivisorPoly::from_roots(U, f, {ux, uxb, U->zero()});
  expect_poly(cert, "(a) alpha*(c1)", *U, Da.c[0], "x^4 + x^10 + x^16 + x^22");
  expect_poly(cert, "(a) alpha*(c2)", *U, Da.c[1], "x^2 + x^5 + x^11 + x^17 + x^23");
  expect_poly(cert, "(a) alpha*(c3)", *U, Da.c[2], "0");
  auto V = detail::quotient_of(F4, {"x", "y"}, {"x^4", "y^4"});
  Poly vx = V->var("x"), vy = V->var("y"), vz = fgl_add_in_ring(*f, vx, vy, *V);
  expect_poly(cert, "(a) x +_F y", *V, vz, "x + y + x^2*y^2");
  auto Db = DivisorPoly::from_roots(V, f, {vx, vy, vz});
  expect_poly(cert, "(a) beta*(c1)", *V, Db.c[0], "x^2*y^2");
  expect_poly(cert, "(a) beta*(c2)", *V, Db.c[1], "x^2 + x*y + y^2 + x^2*y^2*(x + y)");
  expect_poly(cert, "(a) beta*(c3)", *V, Db.c[2], "x*y*(x + y) + x^3*y^3");

  // (b)
  auto c1_of = [](const QuotientRing& Q, const Poly& c2) { return Q.reduce(Q.pow(c2, 2) + Q.pow(c2, 8)); };
  cert.add("(b) alpha*(c1) = alpha*(c2^2 + c2^8)", Da.c[0] == c1_of(*U, Da.c[1]));
  cert.add("(b) beta*(c1) = beta*(c2^2 + c2^8)", Db.c[0] == c1_of(*V, Db.c[1]));

  // (c) basis c2^i (i < 16) and c3 of O_Y
  {
    std::vector<std::vector<Coef>> rows;
    json beta_pows = json::array();
    for (int i = 0; i <= 16; ++i) {
      Poly a = i < 16 ? U->pow(Da.c[1], i) : Da.c[2];
      Poly b = i < 16 ? V->pow(Db.c[1], i) : Db.c[2];
      if (i < 5) beta_pows.push_back(b.to_string());
      auto ca = U->coords(a), cb = V->coords(b);
      ca.insert(ca.end(), cb.begin(), cb.end());
      rows.push_back(ca);
    }
    FMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) M.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    int rk = rank(*F4, M);
    cert.add("(c) alpha*, beta* jointly injective", rk == 17, {{"rank", rk}, {"beta*(c2^i), i<5", beta_pows}});
  }

  // (d) c_k([d]D) in O_{G(1)} (x) O_Y
  auto A = detail::quotient_of(F4, {"c2", "c3", "w"}, {"w^4", "c2^16", "c3^2", "c2*c3"});
  Poly c2 = A->var("c2"), c3 = A->var("c3"), w = A->var("w");
  Poly c1 = c1_of(*A, c2);
  auto D = DivisorPoly(A, f, 3, {c1, c2, c3});
  const std::vector<std::string> cdD = {"c2^2 + c2^8 + w + c2^4*w^2", "c2 + (1 + c2^3 + c2^9 + c3)*w^2",
                                        "c3 + c2*w + (c2^2 + c2^8)*w^2 + (1 + c3 + c2^3 + c2^9)*w^3"};
  auto dD = divisor_mul(DivisorPoly::point(A, f, w), D);
  for (int k = 0; k < 3; ++k) expect_poly(cert, "(d) c" + std::to_string(k + 1) + "([d]D) by the engine", *A, dD.c[k], cdD[k]);
  {
    auto Aa = detail::quotient_of(F4, {"w", "x"}, {"w^4", "x^32"});
    Poly aw = Aa->var("w"), ax = Aa->var("x"), axb = fgl_mul_in_ring(*f, -1, ax, *Aa);
    auto roots = DivisorPoly::from_roots(
        Aa, f, {fgl_add_in_ring(*f, aw, ax, *Aa), fgl_add_in_ring(*f, aw, axb, *Aa), aw});
    std::map<std::string, Poly> img{{"c2", Aa->reduce(ax * axb)}, {"c3", Aa->zero()}, {"w", aw}};
    auto Ab = detail::quotient_of(F4, {"w", "x", "y"}, {"w^4", "x^4", "y^4"});
    Poly bw = Ab->var("w"), bx = Ab->var("x"), by = Ab->var("y"), bz = fgl_add_in_ring(*f, bx, by, *Ab);
    auto broots = DivisorPoly::from_roots(
        Ab, f, {fgl_add_in_ring(*f, bw, bx, *Ab), fgl_add_in_ring(*f, bw, by, *Ab), fgl_add_in_ring(*f, bw, bz, *Ab)});
    auto bimg_div = DivisorPoly::from_roots(Ab, f, {bx, by, bz});
    std::map<std::string, Poly> bimg{{"c2", bimg_div.c[1]}, {"c3", bimg_div.c[2]}, {"w", bw}};
    for (int k = 0; k < 3; ++k) {
      Poly formula = A->parse(cdD[k]);
      Poly ea = detail::eval_in(formula, img, *Aa), eb = detail::eval_in(formula, bimg, *Ab);
      cert.add("(d) c" + std::to_string(k + 1) + "([d]D) under alpha*", ea == roots.c[k],
               {{"roots", roots.c[k].to_string()}, {"formula", ea.to_string()}});
      cert.add("(d) c" + std::to_string(k + 1) + "([d]D) under beta*", eb == broots.c[k],
               {{"roots", broots.c[k].to_string()}, {"formula", eb.to_string()}});
    }
  }

  // (e) g(t) = f_D f_{psi^2 D} - t^2 (t + w) f_{[d]D}
  auto Dpsi = divisor_psi(D, 2);
  std::vector<Poly> g(7, A->zero());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) g[i + j] = g[i + j] + A->mul(D.coeff(i), Dpsi.coeff(j));
  std::vector<Poly> tw{A->one(), w};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j <= 3; ++j) g[i + j] = g[i + j] - A->mul(tw[i], dD.coeff(j));
  const std::vector<std::string> rs = {"c2^8 + c2^4*w^2",
                                       "c2^4*w^3 + (c2^9 + c2^3 + c3)*w^2 + (c2^8 + c2^2)*w + (c2^10 + c2^4)",
                                       "(c2^8 + c2^2)*w^2 + (c2^12 + c2^9 + c2^6)",
                                       "(c2^8 + c2^2)*w^3 + c2*w^2 + c3*w + c2^5"};
  cert.add("(e) psi^2 via c_k^4", Dpsi.c[0] == A->pow(c1, 4) && Dpsi.c[1] == A->pow(c2, 4) && Dpsi.c[2].is_zero());
  cert.add("(e) t^6 coefficient vanishes", g[0].is_zero());
  for (int k = 1; k <= 4; ++k) expect_poly(cert, "(e) r" + std::to_string(k), *A, g[k], rs[k - 1]);
  cert.add("(e) t^1 and t^0 coefficients vanish", g[5].is_zero() && g[6].is_zero(),
           {{"t^1", g[5].to_string()}, {"t^0", g[6].to_string()}});

  // (f) rescalings and redundancy
  std::vector<Poly> r;
  for (auto& s : rs) r.push_back(A->parse(s));
  const std::string r2p_s = "c2^4 + w^2*c2^3 + w*c2^2 + w^2*c3", r4p_s = "w*c2^3 + w^2*c2 + w*c3";
  Poly r2p = A->parse(r2p_s), r4p = A->parse(r4p_s);
  expect_poly(cert, "(f) r2' = (1 + c2^6 + c2^12 + w^3) r2", *A, A->mul(A->parse("1 + c2^6 + c2^12 + w^3"), r[1]), r2p_s);
  expect_poly(cert, "(f) r4' = r4 + (c2 + w^2 + c2^4 w^3) r2'", *A, r[3] + A->mul(A->parse("c2 + w^2 + c2^4*w^3"), r2p), r4p_s);
  {
    auto A0 = detail::quotient_of(F4, {"c2", "c3", "w"}, {"w^4", "c3^2", "c2*c3"});
    Poly q = A0->parse(r2p_s);
    expect_poly(cert, "(f) (r2')^2 = r1", *A0, A0->pow(q, 2), rs[0]);
    expect_poly(cert, "(f) (r2')^4 = c2^16", *A0, A0->pow(q, 4), "c2^16");
  }
  Poly r3f = A->mul(A->parse("1 + c2^3 + c2^6"),
                    A->mul(A->parse("c2^2*(1 + (1 + c2^6)*(w^3 + c2^2*w^2))"), r2p) + A->mul(c2, r4p));
  // the displayed factorization may only hold modulo J
  bool r3_literal = r3f == r[2];
  auto J = std::make_shared<const QuotientRing>(
      A->ring(), std::vector<Poly>{parse_poly(A->ring(), "w^4"), parse_poly(A->ring(), "c3^2"), parse_poly(A->ring(), "c2*c3"), r2p, r4p});
  bool r3_mod_J = J->reduce(r3f - r[2]).is_zero() && J->reduce(r[2]).is_zero();
  cert.add("(f) r3 factorization", r3_literal || r3_mod_J,
           {{"literal", r3_literal}, {"modulo J", r3_mod_J}, {"difference", A->reduce(r3f - r[2]).to_string()}});

  // (g) Groebner basis for c2 > c3 > w lex
  {
    auto ring = A->ring();
    std::vector<Poly> gens{Poly::var(ring, "w", 4), Poly::var(ring, "c3", 2), parse_poly(ring, "c2*c3"),
                           parse_poly(ring, r2p_s), parse_poly(ring, r4p_s)};
    json lts = json::array();
    std::vector<std::string> lt_s;
    for (auto& p : gens) lt_s.push_back(Poly::monomial(ring, p.lm()).to_string());
    for (auto& s : lt_s) lts.push_back(s);
    std::vector<std::string> want_lt{"w^4", "c3^2", "c2*c3", "c2^3*w", "c2^4"};
    std::sort(lt_s.begin(), lt_s.end());
    std::sort(want_lt.begin(), want_lt.end());
    cert.add("(g) leading terms", lt_s == want_lt, {{"leading terms", lts}});
    bool gb = is_groebner_basis(gens);
    Poly syz = parse_poly(ring, "c2") * gens[4] - parse_poly(ring, "w") * gens[3];
    cert.add("(g) all syzygies reduce to zero", gb,
             {{"c2 r4' - w r2'", syz.to_string()}, {"normal form", normal_form(syz, gens).to_string()}});
    QuotientRing QJ(ring, gens, true);
    std::vector<std::string> std_s, want_std{"1", "c2", "c2^2", "c2^3", "c3", "w", "c2*w", "c2^2*w", "c3*w",
                                             "w^2", "c2*w^2", "c2^2*w^2", "c3*w^2", "w^3", "c2*w^3", "c2^2*w^3", "c3*w^3"};
    for (auto& m : QJ.standard()) std_s.push_back(Poly::monomial(ring, m).to_string());
    auto sorted_std = std_s, sorted_want = want_std;
    std::sort(sorted_std.begin(), sorted_std.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    cert.add("(g) 17 standard monomials", sorted_std == sorted_want, {{"dimension", QJ.dim()}, {"standard", std_s}});
    auto soc = socle(QJ);
    bool soc_ok = soc.size() == 1 && soc[0].monic() == parse_poly(ring, "c3*w^3");
    cert.add("(g) socle = w^3 c3", soc_ok, {{"socle", detail::poly_list(soc)}});
    cert.add("(g) Gorenstein", is_gorenstein(QJ));
    std::vector<Poly> full{Poly::var(ring, "w", 4), Poly::var(ring, "c2", 16), Poly::var(ring, "c3", 2), parse_poly(ring, "c2*c3")};
    for (auto& s : rs) full.push_back(parse_poly(ring, s));
    bool same = same_ideal_basis(buchberger(full), reduce_basis(gens));
    cert.add("(g) J = (w^4, c2^16, c3^2, c2 c3, r1, r2, r3, r4)", same);
  }

  // (h) restriction to V = C2 x C2 inside A4
  {
    auto RG = repring_from_table(sigma4_table());
    auto RV = repring_from_table(cyclic_product_table(2, 2));
    std::vector<int> fusion{0, 2, 2, 2};
    check_fusion(RG->table(), RV->table(), fusion);
    const int rho = 3;
    RepRing::ClassFn res;
    for (int c = 0; c < RV->h(); ++c) res.push_back(RG->table().chi[rho][fusion[c]]);
    auto dec = RV->decompose(res);
    bool sum3 = dec.c == std::vector<long long>{0, 1, 1, 1};
    cert.add("(h) res_V(rho) = sum of the nontrivial characters", sum3, {{"multiplicities", json(dec.c)}});
    // Euler classes: x, y for two characters and x +_F y for their product
    int third = -1;
    auto prod = RV->product(1, 2);
    for (int k = 0; k < RV->h(); ++k)
      if (prod.c[k] == 1) third = k;
    std::map<int, Poly> euler{{1, vx}, {2, vy}};
    if (third > 0) euler[third] = vz;
    std::vector<Poly> roots;
    for (int k = 1; k < RV->h(); ++k)
      for (long long m = 0; m < dec.c[k]; ++m) roots.push_back(euler.count(k) ? euler.at(k) : V->zero());
    auto Dv = DivisorPoly::from_roots(V, f, roots);
    expect_poly(cert, "(h) res_V(c3) = x y (x +_F y)", *V, Dv.coeff(3), "x^2*y + x*y^2 + x^3*y^3");
  }
  return cert;
}

/// Special divisors at p = 2, n = 2 over F_4.
inline Certificate sdiv_checks() {
  Certificate cert;
  cert.pipeline = "sdiv";
  cert.params = {{"p", 2}, {"n", 2}, {"field", "F4"}};
  auto F4 = Field::f4();
  auto f = honda_fgl(2, 2, 32);
  auto Q = detail::quotient_of(F4, {"x", "y"}, detail::monomials_of_degree("x", "y", 7));
  Poly x = Q->var("x"), y = Q->var("y");
  auto bar = [&](const Poly& u) { return fgl_mul_in_ring(*f, -1, u, *Q); };
  Poly xb = bar(x), yb = bar(y), z = fgl_add_in_ring(*f, xb, yb, *Q), zb = bar(z);
  expect_poly(cert, "z = xb +_F yb", *Q, z, "x + y + x^4 + x^2*y^2 + y^4");
  expect_poly(cert, "xb", *Q, xb, "x + x^4");
  expect_poly(cert, "yb", *Q, yb, "y + y^4");
  expect_poly(cert, "zb", *Q, zb, "x + y + x^2*y^2");
  Poly c2 = Q->reduce(x * y + y * z + z * x), c3 = Q->mul(Q->mul(x, y), z);
  Poly cb2 = Q->reduce(xb * yb + yb * zb + zb * xb), cb3 = Q->mul(Q->mul(xb, yb), zb);
  expect_poly(cert, "c2", *Q, c2, "x^2 + x*y + y^2 + x^5 + x^4*y + x^3*y^2 + x^2*y^3 + x*y^4 + y^5");
  expect_poly(cert, "c3", *Q, c3, "x^2*y + x*y^2 + x^5*y + x^3*y^3 + x*y^5");
  expect_poly(cert, "cb2 - c2", *Q, cb2 - c2, "x^4*y + x*y^4");
  expect_poly(cert, "c2 c3", *Q, Q->mul(c2, c3), "x^4*y + x*y^4");
  expect_poly(cert, "cb3 - c3", *Q, cb3 - c3, "x^4*y^2 + x^2*y^4");
  expect_poly(cert, "c3^2", *Q, Q->mul(c3, c3), "x^4*y^2 + x^2*y^4");
  bool vanish = Q->mul(c3, Q->mul(c2, c2)).is_zero() && Q->mul(c3, Q->mul(c2, c3)).is_zero() &&
                Q->mul(c3, Q->mul(c3, c3)).is_zero();
  cert.add("c3 (c2, c3)^2 = 0", vanish);
  auto D = DivisorPoly::from_roots(Q, f, {x, y, z});
  cert.add("lambda^3 of [x] + [y] + [z] is [0]", divisor_lambda(D, 3) == DivisorPoly::zero_point(Q, f, 1));

  // c'_1 = c_1 mod (c_1^2, c_2, ..., c_d)
  for (int d : {2, 3}) {
    const int T = 12;
    detail::Universal U(F4, {d}, detail::total_degree_below(T));
    auto ff = detail::fgl_at_least(f, T + 1);
    Poly s = U.x(0, 0);
    for (int a = 1; a < d; ++a) s = U.add(*ff, s, U.x(0, a));
    Poly c1p = U.to_c(-s);
    int c1v = U.cvars(0)[0];
    bool ok = c1p.constant_term() == 0;
    bool linear = false;
    for (auto& t : c1p.terms()) {
      bool pure = true;
      for (int k = 1; k < d; ++k)
        if (t.m.e[U.cvars(0)[k]]) pure = false;
      if (!pure) continue;
      if (t.m.e[c1v] == 1 && t.c == 1) linear = true;
      else if (t.m.e[c1v] < 2) ok = false;
    }
    cert.add("c'1 = c1 mod (c1^2, c2, ..., cd) for d = " + std::to_string(d), ok && linear,
             {{"c'1 truncated below weight " + std::to_string(T), c1p.to_string()}});
    auto Z = divisor_lambda(DivisorPoly::zero_point(Q, f, d), d);
    cert.add("c'1 of d[0] is 0 for d = " + std::to_string(d), Z.c[0].is_zero());
  }

  // the quotient by (cb2 - c2, cb3 - c3), exact modulo monomials of weight >= T
  for (int T : {10, 16}) {
    detail::Universal U(F4, {3}, detail::total_degree_below(T));
    auto ff = detail::fgl_at_least(f, T + 1);
    Poly s = U.add(*ff, U.add(*ff, U.x(0, 0), U.x(0, 1)), U.x(0, 2));
    Poly c1p = U.to_c(-s);
    std::vector<Poly> roots;
    for (int a = 0; a < 3; ++a) roots.push_back(U.series(ff->series(-1), U.x(0, a)));
    auto cbar = detail::chern_coefficients(U, roots);
    auto Rc = PolyRing::make(F4, {"c2", "c3"});
    auto low = [T](const Poly& p) {
      return p.filtered([T](const Monomial& m) { return 2 * m.e[0] + 3 * m.e[1] < T; });
    };
    auto at = [&](const Poly& p, const Poly& phi) {
      std::vector<Poly> im(U.ring()->nvars(), Poly(Rc));
      im[U.cvars(0)[0]] = phi;
      im[U.cvars(0)[1]] = Poly::var(Rc, 0);
      im[U.cvars(0)[2]] = Poly::var(Rc, 1);
      return low(substitute(p, im, Target(Rc)));
    };
    // c1 = phi(c2, c3) on the special divisors
    Poly phi(Rc);
    for (int it = 0; it < T; ++it) phi = low(phi - at(c1p, phi));
    bool solved = at(c1p, phi).is_zero();
    std::vector<Poly> I1{at(cbar[1], phi) - Poly::var(Rc, 0), at(cbar[2], phi) - Poly::var(Rc, 1)};
    std::vector<Poly> I2{parse_poly(Rc, "c2*c3"), parse_poly(Rc, "c3^2")};
    for (int a = 0; 2 * a < T + 3; ++a)
      for (int b = 0; 2 * a + 3 * b < T + 3; ++b)
        if (2 * a + 3 * b >= T) {
          Poly m = Poly::var(Rc, 0, a) * Poly::var(Rc, 1, b);
          I1.push_back(m);
          I2.push_back(m);
        }
    auto G1 = buchberger(I1), G2 = buchberger(I2);
    QuotientRing Q2(Rc, G2, true);
    std::vector<std::string> stds;
    for (auto& m : Q2.standard()) stds.push_back(Poly::monomial(Rc, m).to_string());
    bool shape = true;
    for (auto& m : Q2.standard())
      if (m.e[1] && (m.e[1] > 1 || m.e[0])) shape = false;
    cert.add("(cb2 - c2, cb3 - c3) = (c2 c3, c3^2) below weight " + std::to_string(T), solved && same_ideal_basis(G1, G2),
             {{"c1 on special divisors", phi.to_string()}, {"cb2 - c2", (at(cbar[1], phi) - Poly::var(Rc, 0)).to_string()},
              {"cb3 - c3", (at(cbar[2], phi) - Poly::var(Rc, 1)).to_string()}});
    cert.add("quotient is F4[[c2]] + F4.c3 below weight " + std::to_string(T), shape, {{"standard", stds}});
  }
  return cert;
}

/// E = [a] + [b] + [a+b] over F_2[y,z]/(y^{2^n}, z^{2^n}) where D = E - [0]
/// has lambda_t(D) = 1 + tD + t^2 but E does not contain [0].
inline Certificate nonpositive_divisor_witness(int n) {
  if (n < 2) throw ValidationError("the witness needs height at least 2");
  Certificate cert;
  cert.pipeline = "witness";
  cert.params = {{"p", 2}, {"n", n}};
  int q = 1 << n;
  if (2 * q > limits().fgl_prec) throw ResourceLimit("height too large for the witness ring");
  auto F2 = Field::prime(2);
  auto f = honda_fgl(2, n, std::max(2 * q, 8));
  auto A = detail::quotient_of(F2, {"y", "z"}, {"y^" + std::to_string(q), "z^" + std::to_string(q)});
  Poly y = A->var("y"), z = A->var("z");

  Lattice L(2, 1, n);
  std::vector<int> ea(n, 0), eb(n, 0);
  ea[0] = 1;
  eb[1] = 1;
  auto a = LatticeDivisor::point(L, ea), b = LatticeDivisor::point(L, eb);
  std::vector<int> ec(n, 0);
  ec[0] = ec[1] = 1;
  auto E = a + b + LatticeDivisor::point(L, ec);
  auto Dv = E.to_virtual() - VirtualLattice::unit(L);
  auto lam = Dv.lambda_series(4);
  bool series_ok = lam.size() >= 4 && lam[0] == VirtualLattice::unit(L) && lam[1] == Dv && lam[2] == VirtualLattice::unit(L) &&
                   lam[3].is_zero() && (lam.size() < 5 || lam[4].is_zero());
  json ls = json::array();
  for (auto& t : lam) ls.push_back(t.to_string());
  cert.add("lattice: lambda_t(E - [0]) = 1 + tD + t^2", series_ok, {{"coefficients", ls}});
  cert.add("lattice: lambda^2 E = E", E.lambda(2) == E);
  cert.add("lattice: lambda^3 E = [0]", E.lambda(3) == LatticeDivisor::zero_point(L));

  std::vector<Poly> basis{y, z};
  for (int i = 2; i < n; ++i) basis.push_back(A->zero());
  auto Es = divisor_from_lattice(A, f, basis, E);
  cert.add("series: lambda^2 E = E", divisor_lambda(Es, 2) == Es);
  cert.add("series: lambda^3 E = [0]", divisor_lambda(Es, 3) == DivisorPoly::zero_point(A, f, 1));
  cert.add("series: lambda^2 agrees with the lattice", divisor_lambda(Es, 2) == divisor_from_lattice(A, f, basis, E.lambda(2)));
  Poly c3 = Es.coeff(3), expect = A->mul(A->mul(y, z), fgl_add_in_ring(*f, y, z, *A));
  cert.add("c3(E) = y z (y +_F z)", c3 == expect, {{"c3", c3.to_string()}});
  if (n == 2) expect_poly(cert, "c3(E) at n = 2", *A, c3, "y^2*z + y*z^2 + y^3*z^3");
  Poly diff = A->reduce(A->mul(y, A->mul(y, z)) - A->mul(y, A->mul(z, z)));
  cert.add("c3(E) != 0, so E is not [0] + a degree two divisor", !c3.is_zero() && !diff.is_zero(),
           {{"y^2 z - y z^2", diff.to_string()}});
  return cert;
}

}  // namespace chernlab
