// One line per acceptance criterion. Exit status is nonzero iff a line reads FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "chernlab/chern.hpp"
#include "chernlab/pipelines.hpp"

using namespace chernlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  std::string label;
  std::function<Outcome()> run;
  // printed instead of PASS; the check asserts the corrected statement
  std::string deviation;
};

const json* clause(const Certificate& c, const std::string& name) {
  static thread_local json j;
  j = c.to_json();
  for (auto& cl : j["clauses"])
    if (cl["name"] == name) return &cl;
  return nullptr;
}

Outcome from(const std::vector<Certificate>& certs) {
  Outcome o{true, {}, 0};
  for (auto& c : certs)
    if (auto* f = c.first_failure()) {
      o.pass = false;
      o.detail = c.pipeline + ": " + f->name;
      return o;
    }
  return o;
}

Outcome sigma3() {
  auto c = sigma3_pipeline();
  auto o = from({c});
  auto* w = clause(c, "y(psi^2 D) = y + y^5 mod y^6");
  if (o.pass && !(w && (*w)["witness"]["differs from y-y^5"].get<bool>())) o = {false, "y + y^5 coincides with y - y^5", 0};
  return o;
}

Outcome sigma4() {
  auto c = sigma4_pipeline();
  auto o = from({c});
  auto* w = clause(c, "(g) 17 standard monomials");
  if (o.pass && !(w && (*w)["witness"]["dimension"] == 17)) o = {false, "dimension is not 17", 0};
  return o;
}

Outcome xspec() {
  auto c = xspec_certificate(3, 2, 2);
  auto o = from({c});
  auto* w = clause(c, "kappa injective");
  if (o.pass && w) {
    auto& x = (*w)["witness"];
    o.detail = "|U| = " + x["U"].dump() + ", |Omega| = " + x["omega"].dump() + ", deficit " + x["deficit"].dump();
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> crit = {
      {"Honda law p=2 n=2: [p] series, periodicity, torsion", [] { return from({fgl_certificate(2, 2)}); }, ""},
      {"Honda law p=3 n=2: [p] series, periodicity, torsion", [] { return from({fgl_certificate(3, 2)}); }, ""},
      {"Sigma_3 at p=3: F3[y]/y^5 and psi^2 on [b]+[-b]", sigma3,
       "c2(psi^2 D) computes to y + y^5, not y - y^5; equal in F3[y]/y^5"},
      {"Sigma_4 at p=2 over F4: relations and 17 standard monomials", sigma4, ""},
      {"Sigma_4 census: |Omega| = |Omega'| = |Omega_Ch| = 17 and strata", [] { return from({sigma4_census(2)}); }, ""},
      {"special divisors: structure of SDiv", [] { return from({sdiv_checks()}); }, ""},
      {"lambda^k of multiples of the regular rep", [] { return from({lambda_rho_certificate()}); },
       "at p=2 the closed form needs the sign (-1)^{k/2}; asserted corrected form and literal failure"},
      {"extraspecial p=3 d=2 n=2: U census, kappa injective, not onto", xspec, ""},
      {"non-positive divisor with positive lambda's", [] { return from({nonpositive_divisor_witness(2)}); }, ""},
      {"Sigma_6 p=2 n=2: kappa not injective", [] { return from({sigma6_collision()}); }, ""},
      {"property sweep (seed 20261014)", [] { return from({property_sweep(20261014)}); }, ""},
      {"abelian oracle: C2, C4, C2xC2",
       [] { return from({abelian_oracle("C2"), abelian_oracle("C4"), abelian_oracle("C2xC2")}); }, ""},
  };

  std::vector<std::future<Outcome>> fut;
  for (auto& c : crit)
    fut.push_back(std::async(std::launch::async, [&c] {
      auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = c.run();
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what(), 0};
      }
      o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return o;
    }));

  int failed = 0;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    auto o = fut[i].get();
    const char* tag = !o.pass ? "FAIL" : crit[i].deviation.empty() ? "PASS" : "DEVIATION";
    failed += !o.pass;
    std::printf("%-9s %2zu  %s  (%.2fs)", tag, i + 1, crit[i].label.c_str(), o.seconds);
    if (!o.pass || !o.detail.empty()) std::printf("  [%s]", o.detail.c_str());
    if (o.pass && !crit[i].deviation.empty()) std::printf("  [%s]", crit[i].deviation.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, crit.size());
  return failed ? 1 : 0;
}
