#pragma once

/// \file
/// Fixed-size dense matrices for the small symmetric systems (3x3, 6x6) that
/// show up in elasticity; eigen-decomposition is delegated to Eigen.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace ela {

template <std::size_t N>
using Vector = std::array<double, N>;

using Vec3 = Vector<3>;
using Vec6 = Vector<6>;

template <std::size_t N>
constexpr double dot(const Vector<N>& a, const Vector<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& a) {
  return std::sqrt(dot(a, a));
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <std::size_t N>
Vector<N> operator+(const Vector<N>& a, const Vector<N>& b) {
  Vector<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
Vector<N> operator-(const Vector<N>& a, const Vector<N>& b) {
  Vector<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
Vector<N> operator*(double s, const Vector<N>& a) {
  Vector<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

/// Row-major square matrix of fixed size.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t size = N;

  constexpr SquareMatrix() = default;

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix outer(const Vector<N>& a, const Vector<N>& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i] * b[j];
    return m;
  }

  constexpr double& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

  const std::array<double, N * N>& data() const { return a_; }
  std::array<double, N * N>& data() { return a_; }

  Vector<N> column(std::size_t j) const {
    Vector<N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, const Vector<N>& c) {
    for (std::size_t i = 0; i < N; ++i) (*this)(i, j) = c[i];
  }

  SquareMatrix transpose() const {
    SquareMatrix t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  double frobenius_norm() const { return std::sqrt(inner(*this, *this)); }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest |a_ij - a_ji|.
  double asymmetry() const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
  }

  SquareMatrix symmetrized() const {
    SquareMatrix s;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  SquareMatrix& operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(SquareMatrix a, double s) { return a *= s; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= -1.0; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<N> operator*(const SquareMatrix& a, const Vector<N>& v) {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  /// Frobenius inner product.
  friend double inner(const SquareMatrix& a, const SquareMatrix& b) {
    return std::inner_product(a.a_.begin(), a.a_.end(), b.a_.begin(), 0.0);
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<double, N * N> a_{};
};

using Mat3 = SquareMatrix<3>;
using Mat6 = SquareMatrix<6>;

/// Eigen-decomposition of a symmetric matrix. `values` ascend and
/// `vectors.column(k)` is the unit eigenvector of `values[k]`.
template <std::size_t N>
struct SymmetricEigen {
  Vector<N> values{};
  SquareMatrix<N> vectors = SquareMatrix<N>::identity();
};

template <std::size_t N>
SymmetricEigen<N> symmetric_eigen(const SquareMatrix<N>& m) {
  using Dense = Eigen::Matrix<double, int(N), int(N)>;
  Dense a;
  const SquareMatrix<N> s = m.symmetrized();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a(Eigen::Index(i), Eigen::Index(j)) = s(i, j);
  const Eigen::SelfAdjointEigenSolver<Dense> solver(a);
  SymmetricEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = solver.eigenvalues()(Eigen::Index(k));
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = solver.eigenvectors()(Eigen::Index(i), Eigen::Index(k));
  }
  return out;
}

}  // namespace ela
