#include <gtest/gtest.h>

#include <random>

#include "cartan/ising.hpp"
#include "cartan/spectral.hpp"

using namespace cartan;
using namespace cartan::ising;

namespace {

// Classical energy of a bitstring from the spin picture directly.
double classical_energy(const IsingParams& p, State s) {
  auto spin = [&](int site) { return ((s >> (p.n - 1 - site)) & 1u) ? -1 : 1; };  // site 0 = MSB
  int bonds = 0, mag = 0;
  for (int i = 0; i < p.n; ++i) {
    bonds += spin(i) * spin((i + 1) % p.n);
    mag += spin(i);
  }
  return -p.J * bonds - p.hz * mag;
}

// Oracle: momentum sectors via the dense projector P_k = (1/N) Σ e^{-2πikn/N} Tⁿ
// followed by orthonormalization and dense diagonalization.
std::vector<std::vector<double>> projector_sectors(const IsingParams& p) {
  const Chain c(p);
  const std::size_t d = c.dimension();
  Eigen::MatrixXcd h(d, d), t = Eigen::MatrixXcd::Zero(d, d);
  const RealMatrix hd = c.to_dense();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h(i, j) = hd(i, j);
  for (State s = 0; s < d; ++s) t(c.translate(s), s) = 1.0;
  std::vector<std::vector<double>> out;
  for (int k = 0; k < p.n; ++k) {
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d), tn = Eigen::MatrixXcd::Identity(d, d);
    for (int n = 0; n < p.n; ++n) {
      proj += std::polar(1.0 / p.n, -2.0 * std::numbers::pi * k * n / p.n) * tn;
      tn = t * tn;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(proj);
    const auto rank = qr.rank();
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, rank);
    Eigen::MatrixXcd hk = q.adjoint() * h * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hk);
    std::vector<double> e(es.eigenvalues().data(), es.eigenvalues().data() + rank);
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(Chain({1, 1.0, 0, 0}), std::domain_error);
  EXPECT_THROW(Chain({15, 1.0, 0, 0}), std::domain_error);
  EXPECT_THROW(Chain({4, 0.0, 0, 0}), std::domain_error);
  EXPECT_THROW(Chain({4, 1.0, -0.1, 0}), std::domain_error);
  EXPECT_THROW(Chain({4, 1.0, 0, -0.1}), std::domain_error);
  EXPECT_NO_THROW(Chain({14, 1.0, 0, 0}));
}

TEST(Hamiltonian, TwoSites) {
  const Chain c({2, 1.0, 0.0, 0.0});
  const auto h = c.to_dense();
  EXPECT_EQ(h, (RealMatrix{{-2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, -2}}));
}

TEST(Hamiltonian, RealSymmetricAndCommutesWithT) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0, 2);
  for (int n = 2; n <= 10; ++n) {
    const IsingParams p{n, 0.5 + u(rng), u(rng), u(rng)};
    const Chain c(p);
    const auto h = c.to_dense();
    EXPECT_EQ(h, h.transpose());
    for (State i = 0; i < c.dimension(); ++i)
      for (State j = 0; j < c.dimension(); ++j) ASSERT_EQ(h(c.translate(i), c.translate(j)), h(i, j));
    if (n <= 7) {
      const auto t = c.translation_matrix().cast<double>();
      EXPECT_EQ(t * h, h * t);
    }
  }
}

TEST(Hamiltonian, ImplicitMatchesDense) {
  const Chain c({6, 1.1, 0.3, 0.8});
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  RealVector v(c.dimension());
  for (auto& x : v) x = g(rng);
  const auto dense = c.to_dense() * v;
  const auto implicit = c.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(dense[i], implicit[i], 1e-13);
}

TEST(Translation, SwapAndPeriod) {
  const Chain c2({2, 1.0, 0, 0});
  EXPECT_EQ(c2.translation_matrix(), (IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  for (int n = 2; n <= 10; ++n) {
    const Chain c({n, 1.0, 0, 0});
    for (State s = 0; s < c.dimension(); ++s) {
      State t = s;
      for (int k = 0; k < n; ++k) t = c.translate(t);
      ASSERT_EQ(t, s);
    }
  }
  // T(v1⊗v2⊗v3) = v2⊗v3⊗v1: site 1 (MSB) takes the old site 2
  const Chain c3({3, 1.0, 0, 0});
  EXPECT_EQ(c3.translate(0b100), 0b001u);
  EXPECT_EQ(c3.translate(0b010), 0b100u);
}

TEST(Momentum, ClassicalLimitMatchesBitstrings) {
  for (int n = 2; n <= 10; ++n)
    for (double hz : {0.0, 0.7}) {
      const IsingParams p{n, 1.0, hz, 0.0};
      const auto spec = momentum_spectrum(p);
      ASSERT_EQ(spec.levels.size(), std::size_t{1} << n);
      std::vector<double> e, b;
      for (const auto& l : spec.levels) e.push_back(l.energy);
      for (State s = 0; s < (State{1} << n); ++s) b.push_back(classical_energy(p, s));
      std::sort(e.begin(), e.end());
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i < e.size(); ++i) ASSERT_EQ(e[i], b[i]) << "n=" << n;
    }
}

TEST(Momentum, SectorsMatchProjectorOracle) {
  for (const IsingParams p : {IsingParams{4, 1.0, 0.2, 0.6}, IsingParams{5, 0.7, 0.0, 1.3}, IsingParams{6, 1.0, 0.1, 0.5}}) {
    const auto oracle = projector_sectors(p);
    const auto spec = momentum_spectrum(p);
    for (int k = 0; k < p.n; ++k) {
      std::vector<double> ours;
      for (const auto& l : spec.levels)
        if (l.k == k) ours.push_back(l.energy);
      std::sort(ours.begin(), ours.end());
      ASSERT_EQ(ours.size(), oracle[k].size()) << "k=" << k;
      for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], oracle[k][i], 1e-10);
    }
  }
}

TEST(Momentum, ResidualContractAndFullSpectrum) {
  const IsingParams p{8, 1.0, 0.15, 0.55};
  const auto spec = momentum_spectrum(p, true);
  std::vector<double> e;
  for (const auto& l : spec.levels) {
    EXPECT_LT(l.residual_h, 1e-8);
    EXPECT_LT(l.residual_t, 1e-8);
    EXPECT_GE(l.epsilon, 0.0);
    EXPECT_GT(l.p, -std::numbers::pi);
    EXPECT_LE(l.p, std::numbers::pi);
    e.push_back(l.energy);
  }
  std::sort(e.begin(), e.end());
  const auto dense = spectral::eig_sym(Chain(p).to_dense()).values;
  for (std::size_t i = 0; i < e.size(); ++i) EXPECT_NEAR(e[i], dense[i], 1e-9);
  EXPECT_EQ(spec.ground_momentum, 0.0);
}

TEST(Momentum, EigenvaluesOfTAreRootsOfUnity) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k < n; ++k) {
      const double p = momentum(k, n);
      EXPECT_NEAR(std::abs(std::polar(1.0, p * n) - 1.0), 0.0, 1e-12);
    }
  EXPECT_DOUBLE_EQ(momentum(2, 4), std::numbers::pi);
  EXPECT_DOUBLE_EQ(momentum(3, 4), -std::numbers::pi / 2);
}

TEST(Momentum, GroundEnergyNonIncreasingInField) {
  for (double hz : {0.0, 0.3}) {
    double prev = 1e300;
    for (double hx = 0.0; hx <= 3.0; hx += 0.25) {
      const double e0 = momentum_spectrum({8, 1.0, hz, hx}).ground_energy;
      EXPECT_LE(e0, prev + 1e-12);
      prev = e0;
    }
  }
}

TEST(Momentum, StrongTransverseFieldGapsCluster) {
  const double hx = 100.0;
  const auto spec = momentum_spectrum({6, 1.0, 0.0, hx});
  for (const auto& l : spec.levels) {
    const double units = l.epsilon / (2 * hx);
    // hopping shifts each level by O(J) per flipped spin, i.e. J/hx = 1% per unit
    EXPECT_NEAR(units, std::round(units), 0.02 * std::max(1.0, std::round(units)));
  }
}

// Paramagnetic side of the free-fermion line: the lowest excitation in each
// momentum sector is one fermion with ε(p) = 2√(J² + h² - 2Jh cos p).
TEST(Dispersion, FreeFermionLine) {
  const double J = 1.0, h = 3.0;
  const auto spec = momentum_spectrum({10, J, 0.0, h});
  const auto fits = dispersion_probe(spec, 1);
  ASSERT_EQ(fits.size(), 1u);
  ASSERT_EQ(fits[0].points.size(), 10u);
  for (auto [p, e] : fits[0].points) EXPECT_NEAR(e, free_fermion_energy(J, h, p), 1e-3);
  // ε² = 4(J-h)² + 4Jh·(2 sin(p/2))² exactly, so the hyperbola fit is tight
  EXPECT_NEAR(fits[0].mass, 2 * std::abs(J - h), 1e-3);
  EXPECT_NEAR(fits[0].stiffness, 4 * J * h, 1e-2);
  EXPECT_LT(fits[0].rms, 1e-2);
  EXPECT_EQ(critical_field(J), J);
}

TEST(Dispersion, GapClosesAtCriticalField) {
  EXPECT_NEAR(free_fermion_energy(1.0, 1.0, 0.0), 0.0, 1e-15);
  double prev = 1e9;
  for (double h : {2.0, 1.5, 1.2, 1.05}) {
    const double gap = dispersion_probe(momentum_spectrum({10, 1.0, 0.0, h}), 1)[0].mass;
    EXPECT_LT(gap, prev);
    prev = gap;
  }
}

TEST(Dispersion, EdgeCases) {
  const auto spec = momentum_spectrum({4, 1.0, 0.0, 1.0});
  EXPECT_TRUE(dispersion_probe(spec, 0).empty());
  EXPECT_THROW(dispersion_probe(spec, -1), std::invalid_argument);
  // N = 2 has only p ∈ {0, π}; asking for many bands leaves empty bands
  EXPECT_THROW(dispersion_probe(momentum_spectrum({2, 1.0, 0.0, 1.0}), 3), std::domain_error);
}
