#pragma once

// Floating-point spectral side: Jacobi diagonalization of symmetric
// matrices, the Cartan <-> Coxeter eigenvector transfer for block-triangular
// splittings, closed-form eigenvectors for A_n, E6 and E8, eigenvectors
// obtained through the A4*A2*A1 factorization, and the Perron–Frobenius
// vector of E8 with its mass-ratio form.
//
// Cartan eigenvalues are λ_k = 4 sin²(kπ/2h) = 2 - 2cos(kπ/h), k ∈ Exp(R).

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/gabrielov.hpp"
#include "cartan/lattice.hpp"
#include "cartan/matrix.hpp"
#include "cartan/rootsys.hpp"

namespace cartan::spectral {

inline constexpr double pi = std::numbers::pi;
inline const Complex I{0.0, 1.0};

struct SymmetricEigen {
  RealVector values;    // ascending
  RealMatrix vectors;   // orthonormal columns
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops
/// below tol·max(1, ‖A‖_F). Each eigenvector is signed so that its
/// largest-modulus entry is positive.
inline SymmetricEigen eig_sym(const RealMatrix& input, double tol = 1e-13, int max_sweeps = 100) {
  if (!input.square()) throw std::invalid_argument("eig_sym needs a square matrix");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12) throw std::domain_error("eig_sym: matrix is not symmetric");

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  double fro = 0.0;
  for (double x : a.data()) fro += x * x;
  const double threshold = tol * std::max(1.0, std::sqrt(fro));

  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  SymmetricEigen out;
  while (off() >= threshold) {
    if (out.sweeps == max_sweeps) throw std::runtime_error("eig_sym: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    ++out.sweeps;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = a(src, src);
    std::size_t big = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v(i, src)) > std::abs(v(big, src)) + 1e-12) big = i;
    const double sign = v(big, src) < 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector helpers.

inline ComplexVector complexify(const RealVector& x) { return {x.begin(), x.end()}; }

inline ComplexVector act(const IntMatrix& m, const ComplexVector& x) { return m.cast<double>() * x; }

/// ‖Ax - λx‖∞.
inline double residual(const RealMatrix& a, const ComplexVector& x, Complex lambda) {
  const ComplexVector y = a * x;
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - lambda * x[i]));
  return r;
}

inline double residual(const IntMatrix& a, const ComplexVector& x, Complex lambda) {
  return residual(a.cast<double>(), x, lambda);
}

/// Scales x so that its largest-modulus coordinate becomes +1. Ties are
/// broken towards the lowest index.
inline ComplexVector normalize_largest(ComplexVector x) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[big]) * (1 + 1e-12)) big = i;
  if (x.empty() || std::abs(x[big]) == 0.0) throw std::domain_error("cannot normalize the zero vector");
  const Complex s = 1.0 / x[big];
  for (auto& c : x) c *= s;
  return x;
}

/// min_c ‖u - c v‖₂ / ‖u‖₂: zero iff u and v are collinear over ℂ.
inline double projective_distance(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("projective_distance: size mismatch");
  Complex uv = 0.0;
  double vv = 0.0, uu = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uv += std::conj(v[i]) * u[i];
    vv += std::norm(v[i]);
    uu += std::norm(u[i]);
  }
  if (uu == 0.0 || vv == 0.0) throw std::domain_error("projective_distance: zero vector");
  const Complex c = uv / vv;
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d += std::norm(u[i] - c * v[i]);
  return std::sqrt(d / uu);
}

// ---------------------------------------------------------------------------
// Catalog spectra.

struct Eigenpair {
  int k = 0;  // exponent
  int h = 0;  // Coxeter number
  double lambda = 0.0;
  ComplexVector vector;
  double residual = 0.0;
};

using Spectrum = std::vector<Eigenpair>;

inline double cartan_eigenvalue(int k, int h) {
  const double s = std::sin(k * pi / (2.0 * h));
  return 4.0 * s * s;
}

/// Numeric spectrum of A(R), each eigenvalue tagged with its exponent.
/// Eigenvalues increase with k, so sorting pairs them up.
inline Spectrum catalog_spectrum(const RootSystemId& id) {
  const IntMatrix a = cartan_matrix(id);
  const auto ex = exponents(id);
  const auto es = eig_sym(a.cast<double>());
  Spectrum s;
  for (std::size_t j = 0; j < es.values.size(); ++j) {
    Eigenpair p;
    p.k = ex.exponents[j];
    p.h = ex.h;
    p.lambda = es.values[j];
    p.vector = normalize_largest(complexify(es.vectors.column(j)));
    p.residual = residual(a, p.vector, p.lambda);
    s.push_back(std::move(p));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cartan <-> Coxeter transfer for A = L + U, C = -U⁻¹L with
// L = [[I, 0], [Y, I]], U = [[I, X], [0, I]].

/// Both square roots of μ, principal branch first.
inline std::pair<Complex, Complex> square_roots(Complex mu) {
  if (mu == Complex{0.0, 0.0}) throw std::domain_error("mu must be nonzero");
  const Complex r = std::sqrt(mu);
  return {r, -r};
}

inline Complex transfer_lambda(Complex root) { return 2.0 - root - 1.0 / root; }

/// (v1; v2) with C v = μ v  ->  (v1; root·v2) with A w = (2 - root - 1/root) w,
/// root a square root of μ (principal when omitted).
inline ComplexVector cartan_coxeter_transfer(const ComplexVector& v1, const ComplexVector& v2, Complex mu,
                                             std::optional<Complex> root = std::nullopt) {
  const Complex s = root.value_or(square_roots(mu).first);
  if (std::abs(s * s - mu) > 1e-12 * std::max(1.0, std::abs(mu))) throw std::invalid_argument("root is not a square root of mu");
  ComplexVector w(v1);
  for (const auto& x : v2) w.push_back(s * x);
  return w;
}

/// Inverse direction: A-eigenvector (w1; w2) for λ -> C-eigenvector
/// (w1; w2/root), where root solves root + 1/root = 2 - λ. Returns the
/// vector and μ = root².
struct CoxeterFromCartan {
  ComplexVector vector;
  Complex mu;
};

inline CoxeterFromCartan coxeter_cartan_transfer(const ComplexVector& w1, const ComplexVector& w2, Complex lambda,
                                                 bool principal = true) {
  // root² - (2 - λ) root + 1 = 0
  const Complex b = 2.0 - lambda;
  const Complex disc = std::sqrt(b * b - 4.0);
  const Complex root = principal ? (b + disc) / 2.0 : (b - disc) / 2.0;
  CoxeterFromCartan out{w1, root * root};
  for (const auto& x : w2) out.vector.push_back(x / root);
  return out;
}

/// Block matrices (L, U, A, C) for given X (p×q) and Y (q×p).
struct BlockSplit {
  RealMatrix lower, upper, cartan, coxeter;
  std::size_t p = 0;
};

inline BlockSplit block_split(const RealMatrix& x, const RealMatrix& y) {
  const std::size_t p = x.rows(), q = x.cols();
  if (y.rows() != q || y.cols() != p) throw std::invalid_argument("block shapes do not match");
  const std::size_t n = p + q;
  BlockSplit b{RealMatrix::identity(n), RealMatrix::identity(n), {}, {}, p};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) b.upper(i, p + j) = x(i, j);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) b.lower(p + i, j) = y(i, j);
  b.cartan = b.lower + b.upper;
  // U⁻¹ = [[I, -X], [0, I]]
  RealMatrix uinv = RealMatrix::identity(n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) uinv(i, p + j) = -x(i, j);
  b.coxeter = -(uinv * b.lower);
  return b;
}

// ---------------------------------------------------------------------------
// Bipartite phases.

/// Cartan eigenvector x for 2 - 2cos θ -> eigenvector of C_W·C_B for e^{2iθ}:
/// white coordinates times e^{iθ/2}, black ones times e^{-iθ/2}.
inline ComplexVector coxeter_phases(const ComplexVector& x, double theta, const Coloring& coloring) {
  if (x.size() != coloring.size()) throw std::invalid_argument("coloring has wrong size");
  ComplexVector y(x);
  for (std::size_t j = 0; j < y.size(); ++j)
    y[j] *= std::exp(I * (coloring[j] == Color::white ? theta / 2 : -theta / 2));
  return y;
}

inline ComplexVector cartan_phases(const ComplexVector& xc, double theta, const Coloring& coloring) {
  return coxeter_phases(xc, -theta, coloring);
}

/// Checked version of coxeter_phases against the Cartan matrix `a`.
inline ComplexVector coxeter_eigvec_from_cartan(const ComplexVector& x, double theta, const Coloring& coloring,
                                                const IntMatrix& a, double tol = 1e-9) {
  const double lambda = 2.0 - 2.0 * std::cos(theta);
  const double scale = std::max(1.0, max_abs(a) * max_abs(x));
  if (residual(a, x, lambda) > tol * scale) throw std::domain_error("input is not a Cartan eigenvector for 2 - 2cos(theta)");
  ComplexVector xc = coxeter_phases(x, theta, coloring);
  const IntMatrix c = bipartite_coxeter(a, coloring);
  if (residual(c, xc, std::exp(2.0 * I * theta)) > 1e-8 * scale)
    throw std::runtime_error("phase-shifted vector is not a Coxeter eigenvector");
  return xc;
}

// ---------------------------------------------------------------------------
// A_n.

/// x(θ)_j = Σ_{m=0}^{n-j} e^{i(n-j-2m)θ} at θ = kπ/(n+1); eigenvalue 2 - 2cos θ.
inline ComplexVector an_eigenvector(int n, int k) {
  if (n < 1) throw std::domain_error("A_n requires n >= 1");
  if (k < 1 || k > n) throw std::out_of_range("exponent out of range for A_n");
  const double theta = k * pi / (n + 1);
  ComplexVector x(n);
  for (int j = 1; j <= n; ++j)
    for (int m = 0; m <= n - j; ++m) x[j - 1] += std::exp(I * double(n - j - 2 * m) * theta);
  return x;
}

/// X_{C(A_n)}(θ)_j = Σ_{m=0}^{n-j} e^{2imθ}: eigenvector of s1 s2 ... s_n
/// for e^{2iθ} when θ = kπ/(n+1).
inline ComplexVector an_coxeter_eigenvector(int n, double theta) {
  ComplexVector x(n);
  for (int j = 1; j <= n; ++j)
    for (int m = 0; m <= n - j; ++m) x[j - 1] += std::exp(2.0 * I * double(m) * theta);
  return x;
}

// ---------------------------------------------------------------------------
// E8 and E6 closed forms.

struct ClosedFormAngles {
  double theta, gamma, delta, alpha, lambda;
  int exponent;  // m with λ = 4 sin²(mπ/2h)
};

/// θ = aπ/5, γ = bπ/3, δ = π/2, α = θ+γ+δ = π + jπ/30, exponent 30 - j.
inline ClosedFormAngles e8_angles(int a, int b) {
  if (a < 1 || a > 4 || b < 1 || b > 2) throw std::out_of_range("E8 closed form needs a in 1..4, b in 1..2");
  ClosedFormAngles g{a * pi / 5, b * pi / 3, pi / 2, 0, 0, 0};
  g.alpha = g.theta + g.gamma + g.delta;
  g.lambda = 2.0 - 2.0 * std::cos(g.alpha);
  g.exponent = 30 - (6 * a + 10 * b - 15);
  return g;
}

/// θ = aπ/4, γ = bπ/3, δ = π/2, α = π + jπ/12, exponent 12 - j.
inline ClosedFormAngles e6_angles(int a, int b) {
  if (a < 1 || a > 3 || b < 1 || b > 2) throw std::out_of_range("E6 closed form needs a in 1..3, b in 1..2");
  ClosedFormAngles g{a * pi / 4, b * pi / 3, pi / 2, 0, 0, 0};
  g.alpha = g.theta + g.gamma + g.delta;
  g.lambda = 2.0 - 2.0 * std::cos(g.alpha);
  g.exponent = 12 - (3 * a + 4 * b - 6);
  return g;
}

/// The eight-term cosine form of the E8 eigenvector, before simplification.
inline RealVector e8_eigenvector(int a, int b) {
  const auto [t, g, d, alpha, lambda, ex] = e8_angles(a, b);
  using std::cos;
  return {cos(g + t - d) + cos(g - 3 * t - d) + cos(g - t - d),
          cos(2 * g + 2 * t),
          cos(2 * g) + cos(2 * g + 2 * t) + cos(2 * g - 2 * t) + cos(4 * t) + cos(2 * t),
          cos(g + 3 * t - d) + cos(g + t - d) + cos(-g + 3 * t - d),
          2 * cos(2 * g) + 2 * cos(2 * g + 2 * t) + cos(2 * g - 2 * t) + cos(2 * g + 4 * t) + cos(4 * t) + 2 * cos(2 * t) + 1,
          cos(g + 3 * t - d) + cos(g + t - d),
          cos(2 * g) + cos(2 * t - 2 * d),
          cos(g - t - d)};
}

/// The product-form simplification exactly as it is usually quoted. Its
/// fifth entry is off by +1 from the unsimplified vector, so this is not an
/// eigenvector; kept so the discrepancy stays testable.
inline RealVector e8_eigenvector_simplified_tabulated(int a, int b) {
  const auto [t, g, d, alpha, lambda, ex] = e8_angles(a, b);
  using std::cos;
  RealVector x{2 * cos(4 * t) * cos(g - t - d),
               -cos(2 * g + 2 * t),
               2 * cos(t) * cos(t),
               -2 * cos(g) * cos(3 * t - d) - cos(g + t - d),
               -2 * cos(2 * g + 3 * t) * cos(t) + cos(2 * g),
               -2 * cos(t) * cos(g + 2 * t - d),
               -2 * cos(g + t - d) * cos(g - t + d),
               -cos(g - t - d)};
  for (auto& c : x) c = -c;
  return x;
}

/// Product form with the fifth entry repaired: -(-2cos(2γ+3θ)cosθ + cos2γ + 1).
inline RealVector e8_eigenvector_simplified(int a, int b) {
  RealVector x = e8_eigenvector_simplified_tabulated(a, b);
  x[4] -= 1.0;
  return x;
}

inline RealVector e6_eigenvector(int a, int b) {
  const auto [t, g, d, alpha, lambda, ex] = e6_angles(a, b);
  using std::cos;
  return {cos(3 * g + 3 * t - d),
          2 * cos(t) * cos(t),
          -2 * cos(3 * g + 3 * t - d) * cos(g + t - d),
          -4 * cos(t) * cos(t) * cos(g + t - d),
          1 - 2 * cos(2 * g + 3 * t) * cos(t),
          -2 * cos(g) * cos(t - d)};
}

// ---------------------------------------------------------------------------
// Eigenvectors through the factorization.

struct FactorizedEigenvector {
  Complex mu;              // eigenvalue of C_*, C_G and C_BW
  ComplexVector x_star;    // C_* eigenvector in the join basis
  ComplexVector x_g;       // G⁻¹ x_*: C_G eigenvector
  ComplexVector x_bw;      // W x_g: C_W·C_B eigenvector
  ComplexVector x_cartan;  // Cartan eigenvector after removing the bipartite phases
  double alpha = 0.0;      // μ = e^{2iα}
  double coxeter_residual = 0.0;
  double cartan_residual = 0.0;
};

/// Tensor product of A_n Coxeter eigenvectors, one angle per factor
/// (θ_i = k_i π/(n_i+1)), pushed through G⁻¹ and the conjugator w.
inline FactorizedEigenvector factorized_coxeter_eigenvector(const gabrielov::Factorization& f,
                                                            const gabrielov::WeylWord& conjugator,
                                                            const std::vector<int>& ks) {
  if (!f.passed()) throw std::runtime_error("factorization unavailable");
  if (ks.size() != f.factors.size()) throw std::invalid_argument("one exponent per factor required");
  FactorizedEigenvector out;
  out.x_star = {Complex{1.0, 0.0}};
  double angle_sum = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const int n = f.factors[i].rank;
    if (f.factors[i].family != Family::A) throw std::invalid_argument("factors must be of type A");
    if (ks[i] < 1 || ks[i] > n) throw std::out_of_range("factor exponent out of range");
    const double theta = ks[i] * pi / (n + 1);
    angle_sum += theta;
    out.x_star = kron(out.x_star, an_coxeter_eigenvector(n, theta));
  }
  // C_* = ⊗ C_i has eigenvalue Π e^{2iθ_i}; the sign of the join is already
  // inside the factor C(A_1) = (-1), whose θ = π/2 is part of angle_sum.
  out.alpha = angle_sum;
  out.mu = std::exp(2.0 * I * angle_sum);

  const IntMatrix ginv = integer_inverse(f.g);
  out.x_g = act(ginv, out.x_star);
  const IntMatrix a = cartan_matrix(f.target);
  const IntMatrix w = reflection_product(a, conjugator);
  out.x_bw = act(w, out.x_g);
  const Coloring col = bipartition(f.target);
  out.coxeter_residual = residual(bipartite_coxeter(a, col), out.x_bw, out.mu) / max_abs(out.x_bw);
  out.x_cartan = cartan_phases(out.x_bw, out.alpha, col);
  out.cartan_residual = residual(a, out.x_cartan, 2.0 - 2.0 * std::cos(out.alpha)) / max_abs(out.x_cartan);
  return out;
}

/// E8 case: k4 ∈ 1..4 and k2 ∈ 1..2 select θ = k4 π/5 and γ = k2 π/3.
inline FactorizedEigenvector factorized_coxeter_eigenvector(int k4, int k2) {
  static const gabrielov::Factorization f = gabrielov::e8_factorization();
  return factorized_coxeter_eigenvector(f, gabrielov::e8_tabulated_conjugator(), {k4, k2, 1});
}

// ---------------------------------------------------------------------------
// Perron–Frobenius.

struct PerronFrobenius {
  RealVector vector;  // positive, smallest entry 1
  double lambda = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

/// Power iteration on sI - A (s = 5 for the catalog), stopped when
/// successive unit iterates differ by < 1e-13, followed by two steps of
/// Rayleigh-quotient inverse iteration. Normalized to min entry 1.
inline PerronFrobenius perron_frobenius(const IntMatrix& a_int, int max_iterations = 100000) {
  if (!a_int.square() || a_int.rows() == 0) throw std::invalid_argument("perron_frobenius needs a square matrix");
  const std::size_t n = a_int.rows();
  if (!is_connected(static_cast<int>(n), dynkin_edges(a_int))) throw std::domain_error("Cartan matrix is reducible");
  const RealMatrix a = a_int.cast<double>();
  double s = 5.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    s = std::max(s, row);
  }
  RealMatrix m = s * RealMatrix::identity(n) - a;

  auto unit = [](RealVector& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  };

  PerronFrobenius out;
  RealVector v(n, 1.0);
  unit(v);
  for (;;) {
    if (out.iterations == max_iterations) throw std::runtime_error("perron_frobenius: power iteration did not converge");
    ++out.iterations;
    RealVector w = m * v;
    unit(w);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(w[i] - v[i]));
    v = std::move(w);
    if (diff < 1e-13) break;
  }

  auto rayleigh = [&](const RealVector& x) {
    const RealVector ax = a * x;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) num += x[i] * ax[i], den += x[i] * x[i];
    return num / den;
  };
  Eigen::MatrixXd ae(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ae(i, j) = a(i, j);
  for (int step = 0; step < 2; ++step) {
    const double rho = rayleigh(v);
    Eigen::VectorXd rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs(i) = v[i];
    // Shift slightly off ρ so the solve stays well defined.
    Eigen::MatrixXd shifted = ae - (rho - 1e-10) * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd x = shifted.fullPivLu().solve(rhs);
    if (!x.allFinite()) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = x(i);
    unit(v);
  }

  const double lo = *std::min_element(v.begin(), v.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  for (double& x : v) x /= lo;
  if (*std::min_element(v.begin(), v.end()) <= 0.0) throw std::runtime_error("perron_frobenius: vector is not positive");
  out.lambda = rayleigh(v);
  out.vector = std::move(v);
  out.residual = residual(a, complexify(out.vector), out.lambda);
  return out;
}

/// Mass-ratio vector of the E8 scattering theory at scale m.
inline RealVector zamolodchikov_vector(double m) {
  const double c5 = std::cos(pi / 5), c30 = std::cos(pi / 30), c7 = std::cos(7 * pi / 30), c2 = std::cos(2 * pi / 15);
  return {m, 2 * m * c5, 2 * m * c30, 4 * m * c5 * c7, 4 * m * c5 * c2, 4 * m * c5 * c30, 8 * m * c5 * c5 * c7,
          8 * m * c5 * c5 * c2};
}

/// The closed-form E8 Perron–Frobenius vector in Bourbaki order.
inline RealVector e8_pf_closed_form() {
  using std::cos;
  return {2 * cos(pi / 5) * cos(11 * pi / 30),
          cos(pi / 15),
          2 * cos(pi / 5) * cos(pi / 5),
          2 * cos(2 * pi / 30) * cos(pi / 30),
          2 * cos(4 * pi / 15) * cos(pi / 5) + 0.5,
          2 * cos(pi / 5) * cos(7 * pi / 30),
          2 * cos(pi / 30) * cos(11 * pi / 30),
          cos(11 * pi / 30)};
}

inline RealVector sorted(RealVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace cartan::spectral
