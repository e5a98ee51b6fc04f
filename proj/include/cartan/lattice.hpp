#pragma once

// Polarized lattices (Q, A, L) with A = L + Lᵗ, their Coxeter automorphisms
// C = -L⁻¹Lᵗ, gauge transformations, the Sebastiani–Thom join, and the
// black/white (Steinberg) splitting of a Cartan matrix. Everything here is
// exact integer (or exact rational) arithmetic.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartan/matrix.hpp"
#include "cartan/rootsys.hpp"

namespace cartan {

class PolarizedLattice {
 public:
  /// Validates A = L + Lᵗ and det L != 0.
  PolarizedLattice(IntMatrix cartan, IntMatrix seifert) : cartan_(std::move(cartan)), seifert_(std::move(seifert)) {
    if (!cartan_.square() || !seifert_.square() || cartan_.rows() != seifert_.rows())
      throw std::domain_error("polarized lattice needs square matrices of equal size");
    if (cartan_ != seifert_ + seifert_.transpose()) throw std::domain_error("A != L + L^t");
    if (determinant(seifert_) == 0) throw std::domain_error("Seifert form L is singular");
  }

  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& seifert() const { return seifert_; }

  friend bool operator==(const PolarizedLattice&, const PolarizedLattice&) = default;

 private:
  IntMatrix cartan_;
  IntMatrix seifert_;
};

/// Coxeter automorphism C = numerator / denominator. The denominator is 1
/// whenever det L = ±1 (all catalog cases).
struct CoxeterElement {
  IntMatrix numerator;
  Int denominator = 1;
  std::optional<int> order;

  bool integral() const { return denominator == 1; }

  const IntMatrix& matrix() const {
    if (!integral()) throw std::domain_error("Coxeter element is not integral (det L != +-1)");
    return numerator;
  }
};

/// Unique upper-triangular L with A = L + Lᵗ (ℓ_ii = a_ii / 2).
inline PolarizedLattice standard_polarization(const IntMatrix& a) {
  if (!a.square()) throw std::domain_error("Cartan form must be square");
  if (!a.symmetric()) throw std::domain_error("Cartan form must be symmetric");
  const std::size_t n = a.rows();
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) % 2 != 0) throw std::domain_error("diagonal entries of the Cartan form must be even");
    l(i, i) = a(i, i) / 2;
    for (std::size_t j = i + 1; j < n; ++j) l(i, j) = a(i, j);
  }
  return {a, l};
}

inline PolarizedLattice standard_polarization(const RootSystemId& id) { return standard_polarization(cartan_matrix(id)); }

/// C = -L⁻¹ Lᵗ.
inline CoxeterElement coxeter(const PolarizedLattice& p) {
  const RationalMatrix inv = rational_inverse(p.seifert());
  CoxeterElement c;
  c.numerator = -(inv.numerator * p.seifert().transpose());
  c.denominator = inv.denominator;
  // Reduce numerator/denominator to lowest terms.
  Int g = c.denominator;
  for (Int x : c.numerator.data()) g = std::gcd(g, x);
  if (g > 1) {
    for (std::size_t i = 0; i < c.numerator.rows(); ++i)
      for (std::size_t j = 0; j < c.numerator.cols(); ++j) c.numerator(i, j) /= g;
    c.denominator /= g;
  }
  return c;
}

/// True iff Cᵗ A C = A exactly.
inline bool orthogonality_check(const IntMatrix& a, const IntMatrix& c) {
  if (!a.square() || !c.square() || a.rows() != c.rows()) throw std::invalid_argument("dimension mismatch");
  return c.transpose() * a * c == a;
}

/// (A, L) -> (Mᵗ A M, Mᵗ L M). The resulting Coxeter element is M⁻¹ C M.
inline PolarizedLattice gauge_transform(const PolarizedLattice& p, const IntMatrix& m) {
  if (!m.square() || m.rows() != p.rank()) throw std::invalid_argument("gauge matrix has wrong size");
  if (determinant(m) == 0) throw std::domain_error("gauge matrix is singular");
  const IntMatrix mt = m.transpose();
  return {mt * p.cartan() * m, mt * p.seifert() * m};
}

/// Sebastiani–Thom join: L = L1 ⊗ L2 in lexicographic basis order (first
/// factor major), A = L + Lᵗ. Its Coxeter element is -C1 ⊗ C2.
inline PolarizedLattice join(const PolarizedLattice& p1, const PolarizedLattice& p2) {
  IntMatrix l = kron(p1.seifert(), p2.seifert());
  IntMatrix a = l + l.transpose();
  return {std::move(a), std::move(l)};
}

inline PolarizedLattice join(const std::vector<PolarizedLattice>& factors) {
  if (factors.empty()) throw std::invalid_argument("join needs at least one factor");
  PolarizedLattice acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = join(acc, factors[i]);
  return acc;
}

/// Join of the standard polarizations of the given root systems, e.g.
/// A4 * A2 * A1.
inline PolarizedLattice join_of(const std::vector<RootSystemId>& ids) {
  std::vector<PolarizedLattice> f;
  for (const auto& id : ids) f.push_back(standard_polarization(id));
  return join(f);
}

/// Smallest h >= 1 with Cʰ = I.
inline int coxeter_order(const IntMatrix& c, int cap = 1000) {
  if (!c.square()) throw std::invalid_argument("Coxeter matrix must be square");
  const IntMatrix id = IntMatrix::identity(c.rows());
  IntMatrix p = c;
  for (int h = 1; h <= cap; ++h) {
    if (p == id) return h;
    p = p * c;
  }
  throw std::runtime_error("order not found <= " + std::to_string(cap));
}

inline int coxeter_order(CoxeterElement& c, int cap = 1000) {
  c.order = coxeter_order(c.matrix(), cap);
  return *c.order;
}

/// Simple reflection s_i (1-based i) in the simple-root basis:
/// s_i(α_j) = α_j - a_ij α_i, i.e. row i of the identity replaced by e_i - A_i.
inline IntMatrix reflection(const IntMatrix& a, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > a.rows()) throw std::out_of_range("reflection index out of range");
  IntMatrix s = IntMatrix::identity(a.rows());
  const std::size_t r = static_cast<std::size_t>(i - 1);
  for (std::size_t j = 0; j < a.cols(); ++j) s(r, j) = detail::sub(s(r, j), a(r, j));
  return s;
}

/// Ordered product s_{w_1} s_{w_2} ... s_{w_m} (rightmost acts first).
inline IntMatrix reflection_product(const IntMatrix& a, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(a.rows());
  for (int i : word) m = m * reflection(a, i);
  return m;
}

struct SteinbergSplit {
  IntMatrix black;  // C_B: product of the reflections at black vertices
  IntMatrix white;  // C_W: product of the reflections at white vertices
};

/// C_B, C_W in the original vertex order. In black-first block form
/// C_B = [[-I, -X], [0, I]], C_W = [[I, 0], [-Y, -I]], and C_B + C_W = 2I - A.
/// An empty colour class yields the identity for that factor.
inline SteinbergSplit steinberg_decomposition(const IntMatrix& a, const Coloring& coloring) {
  const auto edges = dynkin_edges(a);
  if (coloring.size() != a.rows()) throw std::invalid_argument("coloring has wrong size");
  if (!is_proper_coloring(edges, coloring)) throw std::domain_error("coloring is not proper");
  SteinbergSplit s{IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows())};
  for (std::size_t v = 0; v < a.rows(); ++v) {
    IntMatrix& target = coloring[v] == Color::black ? s.black : s.white;
    target = target * reflection(a, static_cast<int>(v + 1));
  }
  return s;
}

/// Bipartite Coxeter element C_W · C_B (white reflections leftmost). With the
/// catalog coloring of E8 this is s1 s4 s6 s8 s2 s3 s5 s7, and its
/// eigenvectors are the Cartan eigenvectors with phases e^{±iθ/2}.
inline IntMatrix bipartite_coxeter(const IntMatrix& a, const Coloring& coloring) {
  const auto s = steinberg_decomposition(a, coloring);
  return s.white * s.black;
}

}  // namespace cartan
