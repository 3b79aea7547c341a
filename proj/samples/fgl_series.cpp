// [k]-series of a Honda law: fgl_series p n prec k
#include <cstdlib>
#include <iostream>

#include "chernlab/fgl.hpp"

int main(int argc, char** argv) {
  using namespace chernlab;
  int p = argc > 1 ? std::atoi(argv[1]) : 2;
  int n = argc > 2 ? std::atoi(argv[2]) : 2;
  int prec = argc > 3 ? std::atoi(argv[3]) : 32;
  long long k = argc > 4 ? std::atoll(argv[4]) : -1;
  auto f = honda_fgl(p, n, prec);
  auto R = PolyRing::make(f->field(), {"x", "y"});
  std::cout << "[" << k << "](x) = " << f->series_poly(k, R) << "\n";
  Poly F = f->as_poly(R).filtered([](const Monomial& m) { return m.degree() < 8; });
  std::cout << "F(x,y) = " << F << " + O(8)\n";
}
