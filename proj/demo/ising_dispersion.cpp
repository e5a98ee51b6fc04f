// Exploratory: lowest bands of the periodic Ising chain near the E8 point
// (transverse field at criticality plus a small longitudinal field) and
// their relativistic fits. Small N, so no threshold is implied.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "cartan/ising.hpp"

int main(int argc, char** argv) {
  using namespace cartan::ising;
  IsingParams p{argc > 1 ? std::atoi(argv[1]) : 12, 1.0, argc > 2 ? std::atof(argv[2]) : 0.05, 1.0};
  p.hx = critical_field(p.J);
  const auto spec = momentum_spectrum(p);
  const auto fits = dispersion_probe(spec, 3);
  std::cout << "N = " << p.n << ", J = " << p.J << ", hx = " << p.hx << ", hz = " << p.hz << "\nE0 = " << std::setprecision(12)
            << spec.ground_energy << "\n\n";
  for (const auto& f : fits) {
    std::cout << "band " << f.band << ": mass " << std::setprecision(6) << f.mass << ", stiffness " << f.stiffness
              << ", rms " << f.rms << '\n';
    for (auto [k, e] : f.points) std::cout << "    p = " << std::setw(10) << k << "  eps = " << e << '\n';
  }
  if (fits.size() >= 2 && fits[0].mass > 0)
    std::cout << "\nm2/m1 = " << fits[1].mass / fits[0].mass << "  (golden ratio 1.618034)\n";
}
