#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "cartan/rootsys.hpp"

using namespace cartan;

namespace {

Eigen::VectorXd sym_eigenvalues(const IntMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = double(a(i, j));
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace

TEST(Catalog, StructuralInvariants) {
  for (const auto& id : standard_catalog()) {
    const auto d = catalog(id);
    SCOPED_TRACE(id.name());
    EXPECT_TRUE(d.cartan.symmetric());
    for (int i = 0; i < d.rank; ++i) EXPECT_EQ(d.cartan(i, i), 2);
    EXPECT_TRUE(is_tree(d.rank, d.edges));
    EXPECT_EQ(dynkin_edges(d.cartan), d.edges);
    EXPECT_TRUE(is_proper_coloring(d.edges, d.coloring));
    EXPECT_EQ(d.coloring[0], Color::white);
    EXPECT_EQ(static_cast<int>(d.exponents.size()), d.rank);
  }
}

TEST(Catalog, Determinants) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(determinant(cartan_matrix(A(n))), n + 1);
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(determinant(cartan_matrix(D(n))), 4);
  EXPECT_EQ(determinant(cartan_matrix(E(6))), 3);
  EXPECT_EQ(determinant(cartan_matrix(E(7))), 2);
  EXPECT_EQ(determinant(cartan_matrix(E(8))), 1);
}

TEST(Catalog, E8Matrix) {
  const IntMatrix expected{{2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},  {-1, 0, 2, -1, 0, 0, 0, 0},
                           {0, -1, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
                           {0, 0, 0, 0, 0, -1, 2, -1},  {0, 0, 0, 0, 0, 0, -1, 2}};
  EXPECT_EQ(cartan_matrix(E(8)), expected);
}

TEST(Catalog, D4Shape) {
  const auto a = cartan_matrix(D(4));
  EXPECT_EQ(a(1, 2), -1);
  EXPECT_EQ(a(1, 3), -1);
  EXPECT_EQ(a(0, 1), -1);
  EXPECT_EQ(a(2, 3), 0);
}

// Exponents: numeric spectrum is {2 - 2cos(kπ/h)}; also Σk = rank·h/2 and k <-> h-k.
TEST(Catalog, ExponentsMatchNumericSpectrum) {
  for (const auto& id : standard_catalog()) {
    SCOPED_TRACE(id.name());
    const auto ex = exponents(id);
    const auto ev = sym_eigenvalues(cartan_matrix(id));
    for (std::size_t i = 0; i < ex.exponents.size(); ++i)
      EXPECT_NEAR(ev(i), 2 - 2 * std::cos(ex.exponents[i] * std::numbers::pi / ex.h), 1e-9);
    int sum = 0;
    for (int k : ex.exponents) sum += k;
    EXPECT_EQ(2 * sum, id.rank * ex.h);
    for (std::size_t i = 0; i < ex.exponents.size(); ++i)
      EXPECT_EQ(ex.exponents[i] + ex.exponents[ex.exponents.size() - 1 - i], ex.h);
  }
}

TEST(Catalog, E8Coloring) {
  const auto c = bipartition(E(8));
  const std::vector<int> whites{0, 3, 5, 7};
  for (int v = 0; v < 8; ++v)
    EXPECT_EQ(c[v] == Color::white, std::find(whites.begin(), whites.end(), v) != whites.end()) << v;
}

TEST(RootSystemId, Parse) {
  EXPECT_EQ(RootSystemId::parse("E8"), E(8));
  EXPECT_EQ(RootSystemId::parse("a3"), A(3));
  EXPECT_EQ(RootSystemId::parse("D12"), D(12));
  EXPECT_THROW(RootSystemId::parse("Z9"), std::invalid_argument);
  EXPECT_THROW(RootSystemId::parse("E9"), std::domain_error);
  EXPECT_THROW(RootSystemId::parse("D3"), std::domain_error);
  EXPECT_THROW(RootSystemId::parse("A0"), std::domain_error);
  EXPECT_THROW(RootSystemId::parse("A"), std::invalid_argument);
  EXPECT_THROW(RootSystemId::parse("A2x"), std::invalid_argument);
}

TEST(Graph, AsymmetricPatternRejected) {
  EXPECT_THROW(dynkin_edges(IntMatrix{{2, -1}, {0, 2}}), std::domain_error);
}

TEST(Graph, OddCycleIsNotBipartite) {
  EXPECT_THROW(two_coloring(3, {{0, 1}, {1, 2}, {0, 2}}), std::domain_error);
  EXPECT_FALSE(is_tree(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_FALSE(is_connected(3, {{0, 1}}));
}

TEST(JoinExponents, E8FromA4A2A1) {
  const auto d = join_exponent_arithmetic({A(4), A(2), A(1)});
  EXPECT_EQ(d.h, 30);
  EXPECT_EQ(d.exponents, exponents(E(8)).exponents);
}

TEST(JoinExponents, E6FromA3A2A1) {
  const auto d = join_exponent_arithmetic({A(3), A(2), A(1)});
  EXPECT_EQ(d.h, 12);
  EXPECT_EQ(d.exponents, exponents(E(6)).exponents);
}

TEST(JoinExponents, SingleFactorIsIdentity) {
  for (const auto& id : standard_catalog()) {
    const auto d = join_exponent_arithmetic({id});
    EXPECT_EQ(d.h, exponents(id).h);
    EXPECT_EQ(d.exponents, exponents(id).exponents);
  }
}
