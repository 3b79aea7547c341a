// Products, exterior powers and Adams operations of divisors over
// F4[x,y]/(x^4,y^4) with the Honda law of height 2.
#include <iostream>

#include "chernlab/divisor.hpp"

int main() {
  using namespace chernlab;
  auto f = honda_fgl(2, 2, 32);
  auto Q = QuotientRing::make(PolyRing::make(Field::f4(), {"x", "y"}), std::vector<std::string>{"x^4", "y^4"});
  auto show = [](const char* name, const DivisorPoly& D) { std::cout << name << ": " << D.to_string() << "\n"; };
  auto D = DivisorPoly::from_roots(Q, f, {Q->var("x"), Q->var("y")});
  auto E = DivisorPoly::point(Q, f, Q->var("x") + Q->var("y"));
  show("D = [x] + [y]", D);
  show("E = [x + y]", E);
  show("D E", divisor_mul(D, E));
  show("lambda^2 D", divisor_lambda(D, 2));
  show("psi^2 D", divisor_psi(D, 2));
  show("psi^3 D", divisor_psi(D, 3));
  show("D + E", divisor_add(D, E));
}
