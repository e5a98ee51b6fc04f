// Runs the move word on the A4*A2*A1 lattice and prints the resulting G,
// the identities it satisfies and the 60 root images.

#include <iostream>

#include "cartan/gabrielov.hpp"

int main() {
  using namespace cartan;
  const auto f = gabrielov::e8_factorization();
  std::cout << "word: " << gabrielov::to_string(gabrielov::e8_word()) << '\n'
            << "convention: " << gabrielov::MoveConvention{}.describe() << "\n\nG' (moved basis, columns):\n"
            << f.g_prime << "\nG = G'P (Bourbaki labels):\n"
            << f.g << '\n';
  for (const auto& c : f.checks) std::cout << (c.passed ? "ok   " : "FAIL ") << c.identity << '\n';
  const auto r = gabrielov::root_image_count(f);
  std::cout << r.domain_size << " root triples map onto " << r.image_size << " roots of E8\n";
  return f.passed() ? 0 : 1;
}
