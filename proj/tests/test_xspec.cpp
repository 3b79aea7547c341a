#include <gtest/gtest.h>

#include "chernlab/pipelines.hpp"
#include "chernlab/xspec.hpp"

using namespace chernlab;

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

// Hyperbolic form on F_p^{2d} with pairs (2i, 2i+1).
int form(const std::vector<int>& u, const std::vector<int>& w, int p) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * w[i + 1] - u[i + 1] * w[i];
  return mod(s, p);
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int r = 0, cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (mod(m[i][c], p)) piv = i;
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    int inv = 1;
    while (mod(inv * m[r][c], p) != 1) ++inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r) continue;
      int f = mod(m[i][c] * inv, p);
      for (int j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

struct Counts {
  long long U = 0, isotropic = 0;
};

// Every n x 2d matrix alpha of rank e <= d contributes p^{n-e} pairs, one per
// coset of its image; the pair is hit by kappa iff the row space is isotropic.
Counts oracle(int p, int d, int n) {
  int len = 2 * d * n;
  long long total = 1;
  for (int i = 0; i < len; ++i) total *= p;
  Counts c;
  for (long long code = 0; code < total; ++code) {
    std::vector<std::vector<int>> a(n, std::vector<int>(2 * d));
    long long x = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2 * d; ++j) {
        a[i][j] = static_cast<int>(x % p);
        x /= p;
      }
    int e = rank_mod_p(a, p);
    if (e > d) continue;
    long long cosets = 1;
    for (int i = e; i < n; ++i) cosets *= p;
    c.U += cosets;
    bool iso = true;
    for (auto& r : a)
      for (auto& s : a) iso = iso && form(r, s, p) == 0;
    if (iso) c.isotropic += cosets;
  }
  return c;
}

}  // namespace

TEST(Symplectic, StandardForm) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) EXPECT_TRUE(SymplecticSpace(p, d).check());
  EXPECT_THROW(SymplecticSpace(2, 1), ValidationError);
}

TEST(GroupModel, ExtraspecialSanity) {
  auto G = builtin_model("extraspecial(3,1)");
  EXPECT_EQ(G.order, 27);
  EXPECT_EQ(G.exponent(), 3);
  int central = 0;
  for (int g = 0; g < G.order; ++g) {
    bool c = true;
    for (int h = 0; h < G.order; ++h) c = c && G.commute(g, h);
    central += c;
  }
  EXPECT_EQ(central, 3);
}

TEST(EnumerateU, SmallCounts) {
  EXPECT_EQ(enumerate_U(3, 1, 1).size(), 11u);
  EXPECT_EQ(enumerate_U(3, 1, 2).size(), 105u);
  for (auto [p, d, n] : std::vector<std::array<int, 3>>{{3, 1, 1}, {3, 1, 2}, {5, 1, 1}, {3, 2, 1}}) {
    auto U = enumerate_U(p, d, n);
    EXPECT_EQ(static_cast<long long>(U.size()), oracle(p, d, n).U) << p << "," << d << "," << n;
    SymplecticSpace S(p, d);
    for (auto& x : U) {
      EXPECT_TRUE(upair_equation(S, x));
      EXPECT_LE(x.e, d);
    }
  }
}

TEST(EnumerateU, ZeroAlphaIsIsotropic) {
  SymplecticSpace S(3, 1);
  for (auto& x : enumerate_U(3, 1, 2))
    if (x.e == 0) EXPECT_TRUE(upair_isotropic(S, x));
}

TEST(Census, SmallIsBijective) {
  auto c = xspec_census(3, 1, 1);
  EXPECT_EQ(c.U, 11);
  EXPECT_EQ(c.omega, 11);
  EXPECT_TRUE(c.kappa_injective);
  EXPECT_TRUE(c.surjective);
  EXPECT_EQ(c.deficit, 0);
  auto c2 = xspec_census(3, 1, 2);
  auto o = oracle(3, 1, 2);
  EXPECT_EQ(c2.U, o.U);
  EXPECT_EQ(c2.omega, o.isotropic);
  EXPECT_TRUE(c2.image_is_isotropic_part);
}

TEST(Census, DimensionTwoIsNotSurjective) {
  auto o = oracle(3, 2, 2);
  auto cert = xspec_certificate(3, 2, 2);
  EXPECT_TRUE(cert.pass()) << cert.text();
  auto j = cert.to_json();
  json w;
  for (auto& c : j["clauses"])
    if (c["name"] == "kappa injective") w = c["witness"];
  EXPECT_EQ(w["U"].get<long long>(), o.U);
  EXPECT_EQ(w["omega"].get<long long>(), o.isotropic);
  EXPECT_EQ(w["deficit"].get<long long>(), o.U - o.isotropic);
  EXPECT_GT(w["deficit"].get<long long>(), 0);
}

TEST(TableChecks, AllSupported) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
    auto t = extraspecial_table_checks(p, d);
    EXPECT_TRUE(t.linear_times_phi && t.phi_products && t.psi_linear && t.psi_phi) << p << "," << d;
    EXPECT_TRUE(t.lambda_phi_table && t.lambda_phi_center && t.lambda_phi_noncentral) << p << "," << d;
  }
}

TEST(TableChecks, ClassCount) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
    int V = 1;
    for (int i = 0; i < 2 * d; ++i) V *= p;
    EXPECT_EQ(extraspecial_table(p, d).num_classes(), V + p - 1);
  }
}
