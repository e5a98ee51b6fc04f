#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cartan/gabrielov.hpp"

using namespace cartan;
using namespace cartan::gabrielov;

namespace {

BasedLattice e8_start() { return BasedLattice::standard(join_of({A(4), A(2), A(1)}).cartan()); }

// All elements of the Weyl group generated by the simple reflections of A,
// each with one shortest word (breadth-first closure, independent of the
// library's search).
std::map<std::vector<Int>, std::vector<int>> weyl_group(const IntMatrix& a) {
  std::map<std::vector<Int>, std::vector<int>> seen;
  std::vector<std::pair<IntMatrix, std::vector<int>>> frontier{{IntMatrix::identity(a.rows()), {}}};
  seen[frontier[0].first.data()] = {};
  while (!frontier.empty()) {
    std::vector<std::pair<IntMatrix, std::vector<int>>> next;
    for (const auto& [m, w] : frontier)
      for (int i = 1; i <= static_cast<int>(a.rows()); ++i) {
        IntMatrix nm = m * reflection(a, i);
        if (seen.count(nm.data())) continue;
        auto nw = w;
        nw.push_back(i);
        seen[nm.data()] = nw;
        next.emplace_back(std::move(nm), std::move(nw));
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(MoveWord, Parse) {
  const auto w = parse_move_word("g2 g1 b4 a12");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], (Move{MoveKind::gamma, 2}));
  EXPECT_EQ(w[2], (Move{MoveKind::beta, 4}));
  EXPECT_EQ(w[3], (Move{MoveKind::alpha, 12}));
  EXPECT_EQ(parse_move_word("γ2γ1"), parse_move_word("g2 g1"));
  EXPECT_EQ(to_string(parse_move_word("a1  b3")), "a1 b3");
  EXPECT_THROW(parse_move_word("x1"), std::invalid_argument);
  EXPECT_THROW(parse_move_word("a"), std::invalid_argument);
  EXPECT_EQ(e8_word().size(), 17u);
  EXPECT_EQ(e6_word().size(), 9u);
}

TEST(Moves, GammaIsInvolution) {
  const auto s = e8_start();
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(gamma(gamma(s, m), m), s);
}

TEST(Moves, BetaInvertsAlpha) {
  auto s = apply_word(e8_start(), parse_move_word("a3 b5 a1"));
  for (int m = 1; m <= 8; ++m) {
    const int next = m % 8 + 1;
    EXPECT_EQ(beta(alpha(s, m), next), s) << m;
    EXPECT_EQ(alpha(beta(s, next), m), s) << m;
  }
}

TEST(Moves, PreserveLatticeAndGramDiagonal) {
  auto s = e8_start();
  for (const auto& mv : e8_word()) {
    s = apply_move(s, mv);
    EXPECT_EQ(std::abs(determinant(s.basis())), 1);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s.gram()(i, i), 2);
  }
}

TEST(Moves, GammaPairEqualsAlphaSixth) {
  const auto s = e8_start();
  EXPECT_EQ(apply_word(s, parse_move_word("g2 g1")), apply_word(s, parse_move_word("a1 a1 a1 a1 a1 a1")));
}

TEST(Moves, IndexOutOfRange) {
  EXPECT_THROW(alpha(e8_start(), 0), std::out_of_range);
  EXPECT_THROW(beta(e8_start(), 9), std::out_of_range);
}

TEST(Factorization, E8MatchesTable) {
  const auto f = e8_factorization();
  ASSERT_TRUE(f.passed());
  EXPECT_EQ(f.g, e8_tabulated_g());
  EXPECT_EQ(f.g.transpose() * f.ambient_cartan * f.g, cartan_matrix(E(8)));
  EXPECT_EQ(integer_inverse(f.g) * f.ambient_coxeter * f.g, reflection_product(cartan_matrix(E(8)), {1, 3, 4, 2, 5, 6, 7, 8}));
  EXPECT_EQ(f.relabel, (std::vector<int>{0, 2, 3, 1, 4, 5, 6, 7}));
}

TEST(Factorization, E6MatchesTable) {
  const auto f = e6_factorization();
  ASSERT_TRUE(f.passed());
  EXPECT_EQ(f.g, e6_tabulated_g());
  EXPECT_EQ(f.g.transpose() * f.ambient_cartan * f.g, cartan_matrix(E(6)));
  EXPECT_EQ(integer_inverse(f.g) * f.ambient_coxeter * f.g, reflection_product(cartan_matrix(E(6)), {1, 3, 4, 2, 5, 6}));
  // E6 has the diagram flip, so two relabelings exist; the one with fewer moved points wins.
  EXPECT_EQ(relabelings(f.gabrielov_cartan, cartan_matrix(E(6))).size(), 2u);
}

TEST(Factorization, AlternativeConventionsFail) {
  for (auto conv : {MoveConvention{+1, CompositionOrder::rightmost_first}, MoveConvention{+1, CompositionOrder::leftmost_first},
                    MoveConvention{-1, CompositionOrder::leftmost_first}}) {
    EXPECT_FALSE(e8_factorization(conv).passed()) << conv.describe();
  }
}

TEST(Factorization, AmbientCoxeterIsTensorProduct) {
  const auto f = e8_factorization();
  // Two join signs cancel for three factors.
  EXPECT_EQ(f.ambient_coxeter, coxeter(join_of({A(4), A(2), A(1)})).matrix());
}

TEST(RootImage, SixtyRoots) {
  const auto r = root_image_count(e8_factorization());
  EXPECT_EQ(r.domain_size, 240u);
  EXPECT_EQ(r.image_size, 60u);
  EXPECT_TRUE(r.all_norm_2);
}

TEST(RootImage, AnRoots) {
  for (int n = 1; n <= 5; ++n) {
    const auto roots = an_roots(n);
    EXPECT_EQ(static_cast<int>(roots.size()), n * (n + 1));
    const auto a = cartan_matrix(A(n));
    for (const auto& r : roots) {
      const auto ar = a * r;
      Int norm = 0;
      for (int i = 0; i < n; ++i) norm += r[i] * ar[i];
      EXPECT_EQ(norm, 2);
    }
  }
}

TEST(Conjugator, E8TabulatedWordWorks) {
  const auto r = e8_conjugator_report();
  EXPECT_TRUE(r.tabulated_ok);
  EXPECT_EQ(r.tabulated.size(), 16u);
}

TEST(Conjugator, E6TabulatedWordFailsAndIsRepaired) {
  const auto r = e6_conjugator_report();
  EXPECT_FALSE(r.tabulated_ok);
  ASSERT_TRUE(r.repaired.has_value());
  EXPECT_LE(r.repaired->size(), 12u);
  const auto a = cartan_matrix(E(6));
  EXPECT_TRUE(conjugates(a, *r.repaired, reflection_product(a, bipartite_word(E(6))),
                         reflection_product(a, gabrielov_coxeter_word(6))));
}

// Compare the breadth-first search with a full enumeration of W(A2) and W(A3).
TEST(Conjugator, SearchMatchesBruteForce) {
  for (int n : {2, 3}) {
    const auto a = cartan_matrix(A(n));
    const auto group = weyl_group(a);
    EXPECT_EQ(group.size(), n == 2 ? 6u : 24u);
    std::vector<int> fwd(n), rev(n);
    std::iota(fwd.begin(), fwd.end(), 1);
    std::iota(rev.rbegin(), rev.rend(), 1);
    const auto c1 = reflection_product(a, fwd), c2 = reflection_product(a, rev);
    std::size_t best = 100;
    for (const auto& [data, word] : group) {
      IntMatrix m(a.rows(), a.cols());
      for (std::size_t i = 0; i < data.size(); ++i) m(i / a.cols(), i % a.cols()) = data[i];
      if (c1 * m == m * c2) best = std::min(best, word.size());
    }
    const auto found = find_conjugator(a, c1, c2);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->size(), best);
    EXPECT_TRUE(conjugates(a, *found, c1, c2));
  }
  const auto a2 = cartan_matrix(A(2));
  EXPECT_EQ(*find_conjugator(a2, reflection_product(a2, {1, 2}), reflection_product(a2, {2, 1})), (WeylWord{1}));
}

TEST(Conjugator, NonConjugateReturnsNothing) {
  const auto a = cartan_matrix(A(2));
  EXPECT_FALSE(find_conjugator(a, IntMatrix::identity(2), reflection(a, 1)).has_value());
}

TEST(Weyl, BipartiteWordE8) {
  EXPECT_EQ(bipartite_word(E(8)), (WeylWord{1, 4, 6, 8, 2, 3, 5, 7}));
  EXPECT_EQ(bipartite_word(E(6)), (WeylWord{1, 4, 6, 2, 3, 5}));
  EXPECT_EQ(weyl_apply(E(8), bipartite_word(E(8))), bipartite_coxeter(cartan_matrix(E(8)), bipartition(E(8))));
}
