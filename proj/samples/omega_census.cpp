// Omega, Omega', Omega'' and Omega_Ch for the builtin groups at p = 2.
#include <iostream>
#include <set>

#include "chernlab/omega.hpp"

int main() {
  using namespace chernlab;
  for (auto name : {"C2", "C4", "C2xC2", "sigma3", "sigma4", "D8"}) {
    auto G = builtin_model(name);
    auto t = builtin_table(name);
    RepRing R(t);
    auto V = enumerate_omega_variants(G, 2, 2);
    int v = std::max(1, V.omega.w);
    auto ch = enumerate_omega_ch(R, 2, 2, v);
    std::cout << name << ": |Omega| = " << V.omega.reps.size() << ", |Omega'| = " << V.prime.size()
              << ", |Omega''| = " << V.dprime_count << ", |Omega_Ch| = " << ch.size() << "\n";
  }
}
