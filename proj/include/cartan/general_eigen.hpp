#pragma once

// Thin adapter over Eigen for nonsymmetric real matrices. Used as an
// independent oracle for deformed (nonsymmetric) Cartan matrices and for
// Coxeter elements.

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "cartan/matrix.hpp"

namespace cartan {

struct GeneralEigen {
  ComplexVector values;
  ComplexMatrix vectors;  // column j belongs to values[j]
};

inline Eigen::MatrixXd to_eigen(const RealMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline GeneralEigen eig_general(const RealMatrix& a) {
  if (!a.square()) throw std::invalid_argument("eigen decomposition needs a square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), true);
  if (es.info() != Eigen::Success) throw std::runtime_error("nonsymmetric eigensolver did not converge");
  GeneralEigen out;
  const auto n = a.rows();
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = es.eigenvalues()(j);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = es.eigenvectors()(i, j);
  }
  return out;
}

/// Eigenvalues sorted by (real, imaginary) part.
inline ComplexVector eigenvalues_general(const RealMatrix& a) {
  ComplexVector v = eig_general(a).values;
  std::sort(v.begin(), v.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return v;
}

/// Largest |x_i - y_i| after sorting both multisets by (real, imaginary).
/// Real parts closer than `tie` are treated as equal when ordering so that
/// conjugate pairs line up.
inline double multiset_distance(ComplexVector x, ComplexVector y, double tie = 1e-9) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  auto less = [tie](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > tie) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(x.begin(), x.end(), less);
  std::sort(y.begin(), y.end(), less);
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace cartan
