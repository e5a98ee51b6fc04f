#pragma once

// q-deformed Cartan matrices A(q) = qL + U for generalized Cartan matrices
// whose graph is a tree. For positive q the deformation is diagonally
// conjugate to the symmetric-shaped A'(q) = √q A + (1 - √q)² I, which gives
// both the eigenvalue law λ -> 1 + (λ - 2)√q + q and the eigenvectors.

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cartan/general_eigen.hpp"
#include "cartan/matrix.hpp"
#include "cartan/rootsys.hpp"
#include "cartan/spectral.hpp"

namespace cartan::qdeform {

struct QDeformedCartan {
  std::size_t rank = 0;
  IntMatrix cartan;
  IntMatrix lower;  // unit diagonal, strictly-lower part of A
  IntMatrix upper;  // unit diagonal, strictly-upper part of A
  std::vector<int> exponent_vector;  // k_i; the eigenvector scaling is q^{k_i/2}
};

/// Checks a_ii = 2 and the symmetric zero pattern; returns the edge list.
inline std::vector<Edge> validate_generalized_cartan(const IntMatrix& a) {
  if (!a.square() || a.rows() == 0) throw std::domain_error("generalized Cartan matrix must be square and nonempty");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, i) != 2) throw std::domain_error("diagonal entries must equal 2");
  return dynkin_edges(a);
}

/// Integers k with A(q) = D⁻¹ A'(q) D, D = diag(q^{-k_i/2}). Walking an
/// edge from i to j adds +1 if i < j and -1 otherwise. Normalized so that
/// min k = 0, which makes the result independent of `root`.
inline std::vector<int> exponent_vector(const IntMatrix& a, int root = 0) {
  const auto edges = validate_generalized_cartan(a);
  const int n = static_cast<int>(a.rows());
  if (!is_connected(n, edges)) throw std::domain_error("graph of A is disconnected; a tree is required");
  if (!is_tree(n, edges)) throw std::domain_error("graph of A has a cycle; a tree is required");
  if (root < 0 || root >= n) throw std::out_of_range("root vertex out of range");
  const auto adj = adjacency(n, edges);
  std::vector<int> k(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      k[w] = k[v] + (v < w ? 1 : -1);
      q.push(w);
    }
  }
  const int lo = *std::min_element(k.begin(), k.end());
  for (int& x : k) x -= lo;
  return k;
}

inline QDeformedCartan deform(const IntMatrix& a) {
  QDeformedCartan d;
  d.exponent_vector = exponent_vector(a);
  d.rank = a.rows();
  d.cartan = a;
  d.lower = IntMatrix::identity(d.rank);
  d.upper = IntMatrix::identity(d.rank);
  for (std::size_t i = 0; i < d.rank; ++i)
    for (std::size_t j = 0; j < d.rank; ++j) {
      if (i > j) d.lower(i, j) = a(i, j);
      if (i < j) d.upper(i, j) = a(i, j);
    }
  return d;
}

inline QDeformedCartan deform(const RootSystemId& id) { return deform(cartan_matrix(id)); }

inline void require_positive(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("q must be a positive real number");
}

/// qL + U.
inline RealMatrix evaluate(const QDeformedCartan& d, double q) {
  require_positive(q);
  return q * d.lower.cast<double>() + d.upper.cast<double>();
}

/// √q A + (1 - √q)² I.
inline RealMatrix symmetric_form(const QDeformedCartan& d, double q) {
  require_positive(q);
  const double s = std::sqrt(q);
  return s * d.cartan.cast<double>() + (1 - s) * (1 - s) * RealMatrix::identity(d.rank);
}

inline double q_eigenvalue(double lambda, double q) {
  require_positive(q);
  return 1.0 + (lambda - 2.0) * std::sqrt(q) + q;
}

inline RealVector scaling(const QDeformedCartan& d, double q) {
  RealVector s(d.rank);
  for (std::size_t i = 0; i < d.rank; ++i) s[i] = std::pow(q, d.exponent_vector[i] / 2.0);
  return s;
}

/// ‖D⁻¹ A'(q) D - A(q)‖∞ with D = diag(q^{-k_i/2}).
inline double conjugation_certificate(const QDeformedCartan& d, double q) {
  const RealMatrix aq = evaluate(d, q);
  const RealMatrix ap = symmetric_form(d, q);
  const RealVector s = scaling(d, q);
  double dev = 0.0;
  for (std::size_t i = 0; i < d.rank; ++i)
    for (std::size_t j = 0; j < d.rank; ++j) dev = std::max(dev, std::abs(s[i] * ap(i, j) / s[j] - aq(i, j)));
  return dev;
}

/// x -> (q^{k_i/2} x_i), checked against A(q) with eigenvalue λ(q).
inline ComplexVector q_eigenvector(const ComplexVector& x, double lambda, const QDeformedCartan& d, double q) {
  if (x.size() != d.rank) throw std::invalid_argument("vector has wrong size");
  const double scale = std::max(1.0, max_abs(d.cartan) * max_abs(x));
  if (spectral::residual(d.cartan, x, lambda) > 1e-9 * scale) throw std::domain_error("input is not an eigenvector of A");
  const RealVector s = scaling(d, q);
  ComplexVector y(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] *= s[i];
  const double r = spectral::residual(evaluate(d, q), y, q_eigenvalue(lambda, q));
  if (r > 1e-8 * std::max(1.0, max_abs(evaluate(d, q)) * max_abs(y)))
    throw std::runtime_error("deformed eigenvector residual too large");
  return y;
}

/// Spectrum of A(q) through the symmetric path: eigenvalues of A'(q)
/// (which is symmetric when A is), ascending. Falls back to the general
/// solver when A itself is not symmetric.
inline RealVector q_spectrum(const QDeformedCartan& d, double q) {
  require_positive(q);
  if (d.cartan.symmetric()) return spectral::eig_sym(symmetric_form(d, q)).values;
  RealVector out;
  for (auto z : eigenvalues_general(evaluate(d, q))) {
    if (std::abs(z.imag()) > 1e-9) throw std::runtime_error("complex eigenvalue of A(q); use eigenvalues_general");
    out.push_back(z.real());
  }
  return out;
}

struct SpectrumLawCheck {
  double q = 1.0;
  double eigenvalue_deviation = 0.0;
  double certificate_deviation = 0.0;
};

/// Compares the eigenvalues of A(q) from the general solver with the
/// image of Spec(A) under the eigenvalue law.
inline SpectrumLawCheck spectrum_law(const QDeformedCartan& d, double q) {
  SpectrumLawCheck c{q, 0.0, conjugation_certificate(d, q)};
  ComplexVector predicted;
  for (auto z : eigenvalues_general(d.cartan.cast<double>()))
    predicted.push_back(1.0 + (z - 2.0) * std::sqrt(q) + q);
  c.eigenvalue_deviation = multiset_distance(eigenvalues_general(evaluate(d, q)), predicted);
  return c;
}

}  // namespace cartan::qdeform
