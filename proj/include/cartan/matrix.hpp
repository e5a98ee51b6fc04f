#pragma once

// Dense row-major matrices. Integer instantiations use checked arithmetic:
// any int64 overflow throws std::overflow_error instead of wrapping.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace cartan {

using Int = std::int64_t;
using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

namespace detail {

template <class T>
inline T add(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r{};
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <class T>
inline T sub(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r{};
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <class T>
inline T mul(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r{};
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

template <class T>
inline double magnitude(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) {
    return std::abs(static_cast<double>(x));
  } else {
    return std::abs(x);
  }
}

}  // namespace detail

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<U>((*this)(i, j));
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in +");
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = detail::add(a(i, j), b(i, j));
  return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in -");
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = detail::sub(a(i, j), b(i, j));
  return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
  return Matrix<T>(a.rows(), a.cols()) - a;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in *");
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = detail::add(r(i, j), detail::mul(aik, b(k, j)));
    }
  return r;
}

template <class T>
Matrix<T> operator*(const std::type_identity_t<T>& s, const Matrix<T>& a) {
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = detail::mul(s, a(i, j));
  return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<T> y(a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = detail::add(y[i], detail::mul(a(i, j), x[j]));
  return y;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  return a * std::span<const T>(x);
}

/// Real matrix acting on a complex vector.
inline ComplexVector operator*(const RealMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// Kronecker product, first factor major: (a⊗b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = detail::mul(a(i, j), b(k, l));
  return r;
}

template <class T>
std::vector<T> kron(std::span<const T> a, std::span<const T> b) {
  std::vector<T> r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(detail::mul(x, y));
  return r;
}

template <class T>
std::vector<T> kron(const std::vector<T>& a, const std::vector<T>& b) {
  return kron(std::span<const T>(a), std::span<const T>(b));
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, detail::magnitude(x));
  return m;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if constexpr (std::is_integral_v<T>) {
      m = std::max(m, detail::magnitude(detail::sub(a.data()[i], b.data()[i])));
    } else {
      m = std::max(m, detail::magnitude(a.data()[i] - b.data()[i]));
    }
  }
  return m;
}

template <class T>
double max_abs(std::span<const T> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, detail::magnitude(x));
  return m;
}

template <class T>
double max_abs(const std::vector<T>& v) {
  return max_abs(std::span<const T>(v));
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra on integer matrices.

/// Exact rational number over checked int64; always normalized (den > 0, gcd 1).
class Rational {
 public:
  Rational(Int n = 0, Int d = 1) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }
  Int num() const { return num_; }
  Int den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = std::gcd(a.den_, b.den_);
    const Int lhs = detail::mul(a.num_, b.den_ / g);
    const Int rhs = detail::mul(b.num_, a.den_ / g);
    return {detail::add(lhs, rhs), detail::mul(a.den_ / g, b.den_)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = std::gcd(a.num_, b.den_);
    const Int g2 = std::gcd(b.num_, a.den_);
    const Int n = detail::mul(g1 ? a.num_ / g1 : 0, g2 ? b.num_ / g2 : 0);
    const Int d = detail::mul(g2 ? a.den_ / g2 : a.den_, g1 ? b.den_ / g1 : b.den_);
    return {n, d};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = detail::sub(Int{0}, num_);
      den_ = detail::sub(Int{0}, den_);
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  Int num_;
  Int den_;
};

/// A rational matrix written as numerator / common denominator (den > 0).
struct RationalMatrix {
  IntMatrix numerator;
  Int denominator = 1;

  bool integral() const { return denominator == 1; }
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int t = detail::sub(detail::mul(a(i, j), a(k, k)), detail::mul(a(i, k), a(k, j)));
        a(i, j) = t / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return detail::mul(sign, a(n - 1, n - 1));
}

/// Exact inverse over the rationals. Throws std::domain_error if singular.
inline RationalMatrix rational_inverse(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(m(i, j));
    at(i, n + i) = Rational(1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k).num() == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(k, j), at(p, j));
    const Rational piv = at(k, k);
    for (std::size_t j = 0; j < 2 * n; ++j) at(k, j) = at(k, j) / piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || at(i, k).num() == 0) continue;
      const Rational f = at(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) = at(i, j) - f * at(k, j);
    }
  }
  Int den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) den = std::lcm(den, at(i, n + j).den());
  RationalMatrix r{IntMatrix(n, n), den};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = at(i, n + j);
      r.numerator(i, j) = detail::mul(q.num(), den / q.den());
    }
  return r;
}

/// Inverse of a unimodular matrix (det = ±1). Throws if not unimodular.
inline IntMatrix integer_inverse(const IntMatrix& m) {
  auto r = rational_inverse(m);
  if (!r.integral()) throw std::domain_error("matrix is not unimodular over the integers");
  return std::move(r.numerator);
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  Matrix<T> b = m;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace cartan
