// Perron-Frobenius vector of A(E8), sorted and normalized, next to the
// E8 mass ratios.

#include <iomanip>
#include <iostream>

#include "cartan/spectral.hpp"

int main() {
  using namespace cartan;
  const auto pf = spectral::perron_frobenius(cartan_matrix(E(8)));
  const auto s = spectral::sorted(pf.vector);
  const auto z = spectral::zamolodchikov_vector(1.0);
  std::cout << "lambda_PF = " << std::setprecision(15) << pf.lambda << "  (4 sin^2(pi/60) = "
            << spectral::cartan_eigenvalue(1, 30) << ")\n\n  i   PF component     mass ratio       diff\n"
            << std::fixed;
  for (std::size_t i = 0; i < s.size(); ++i)
    std::cout << std::setw(3) << i + 1 << std::setprecision(12) << std::setw(17) << s[i] << std::setw(17) << z[i]
              << std::scientific << std::setprecision(1) << std::setw(11) << s[i] - z[i] << std::fixed << '\n';
  std::cout << "m2/m1 = " << std::setprecision(15) << s[1] / s[0] << '\n';
}
