// The Chern approximation ring of Sigma_3 at p = 3, height 2.
#include <iostream>

#include "chernlab/groups.hpp"
#include "chernlab/presentation.hpp"

int main() {
  using namespace chernlab;
  auto R = repring_from_table(sigma3_table());
  auto P = build_presentation(R, honda_fgl(3, 2, 32), 1);
  std::cout << "generators:";
  for (auto& g : P.names) std::cout << " " << g;
  std::cout << "\nweight bound " << P.B << (P.certified ? " (certified)" : "") << "\n";
  for (std::size_t i = 0; i < P.eliminated_names.size(); ++i)
    std::cout << P.eliminated_names[i] << " = " << P.eliminated_values[i] << "\n";
  std::cout << "basis:";
  for (auto& g : P.Q->basis()) std::cout << " " << g;
  std::cout << "\ndimension " << P.dim() << ", standard monomials:";
  for (auto& s : P.standard_names()) std::cout << " " << s;
  std::cout << "\n";
}
