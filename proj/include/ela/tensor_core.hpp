#pragma once

/// \file
/// Tensor algebra in 3D using the Kelvin (orthonormal Mandel) representation.
///
/// Second-order symmetric tensors map to R^6 and minor-symmetric fourth-order
/// tensors to 6x6 matrices, with basis order (11, 22, 33, 23, 13, 12). Shear
/// slots carry a factor sqrt(2), so Euclidean inner products in R^6 and the
/// Frobenius product of 6x6 matrices equal the full tensor contractions.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>

#include "ela/error.hpp"
#include "ela/matrix.hpp"

#include <Eigen/LU>

namespace ela {

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kPi = 3.14159265358979323846;

/// Default relative tolerance for numerical equality tests.
inline constexpr double kNumTol = 1e-9;

namespace kelvin {

/// Index pair (i, j) of Kelvin slot I.
inline constexpr std::array<std::array<int, 2>, 6> kPairs{
    {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};

/// Kelvin slot of the unordered index pair (i, j).
constexpr int slot(int i, int j) {
  if (i == j) return i;
  return 6 - i - j;
}

constexpr bool is_shear(int slot_index) { return slot_index >= 3; }

inline double weight(int slot_index) { return is_shear(slot_index) ? kSqrt2 : 1.0; }

/// Multiply an index component by the Kelvin weight of the (I, J) slot pair.
inline double scale_up(double c, int I, int J) {
  const int shear = int(is_shear(I)) + int(is_shear(J));
  if (shear == 0) return c;
  if (shear == 1) return c * kSqrt2;
  return c * 2.0;
}

/// Inverse of scale_up.
inline double scale_down(double k, int I, int J) {
  const int shear = int(is_shear(I)) + int(is_shear(J));
  if (shear == 0) return k;
  if (shear == 1) return k / kSqrt2;
  return k / 2.0;
}

inline std::string index_name(int i, int j, int k, int l) {
  std::ostringstream s;
  s << 'C' << i + 1 << j + 1 << k + 1 << l + 1;
  return s.str();
}

}  // namespace kelvin

/// Flat storage of 81 fourth-order components, index i*27 + j*9 + k*3 + l.
using Array4 = std::array<double, 81>;

constexpr std::size_t idx4(int i, int j, int k, int l) {
  return std::size_t(i * 27 + j * 9 + k * 3 + l);
}

class SymTensor2;

class Rotation {
 public:
  Rotation() : m_(Mat3::identity()) {}

  static Rotation identity() { return Rotation(); }

  /// Right-handed rotation by `angle` radians about `axis` (normalized here).
  static Rotation from_axis_angle(const Vec3& axis, double angle) {
    const double len = norm(axis);
    if (!(len > 1e-12)) throw ValidationError("rotation axis has near-zero norm");
    const Vec3 n = (1.0 / len) * axis;
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat3 m;
    m(0, 0) = c + t * n[0] * n[0];
    m(0, 1) = t * n[0] * n[1] - s * n[2];
    m(0, 2) = t * n[0] * n[2] + s * n[1];
    m(1, 0) = t * n[1] * n[0] + s * n[2];
    m(1, 1) = c + t * n[1] * n[1];
    m(1, 2) = t * n[1] * n[2] - s * n[0];
    m(2, 0) = t * n[2] * n[0] - s * n[1];
    m(2, 1) = t * n[2] * n[1] + s * n[0];
    m(2, 2) = c + t * n[2] * n[2];
    return Rotation(m);
  }

  /// Quaternion (w, x, y, z); normalized before use.
  static Rotation from_quaternion(const std::array<double, 4>& q) {
    const double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (!(len > 1e-12)) throw ValidationError("quaternion has near-zero norm");
    const double w = q[0] / len, x = q[1] / len, y = q[2] / len, z = q[3] / len;
    Mat3 m;
    m(0, 0) = 1 - 2 * (y * y + z * z);
    m(0, 1) = 2 * (x * y - w * z);
    m(0, 2) = 2 * (x * z + w * y);
    m(1, 0) = 2 * (x * y + w * z);
    m(1, 1) = 1 - 2 * (x * x + z * z);
    m(1, 2) = 2 * (y * z - w * x);
    m(2, 0) = 2 * (x * z - w * y);
    m(2, 1) = 2 * (y * z + w * x);
    m(2, 2) = 1 - 2 * (x * x + y * y);
    return Rotation(m);
  }

  /// Validates orthonormality and det = +1 within `tol`.
  static Rotation from_matrix(const Mat3& m, double tol = kNumTol) {
    const double err = (m.transpose() * m - Mat3::identity()).max_abs();
    if (!(err <= tol))
      throw ValidationError("matrix is not orthonormal (max |g^T g - 1| = " +
                            std::to_string(err) + ")");
    const double d = det3(m);
    if (!(std::abs(d - 1.0) <= tol))
      throw ValidationError("matrix is not a proper rotation (det = " + std::to_string(d) + ")");
    return Rotation(m);
  }

  /// Rotation whose columns are the given right-handed orthonormal frame.
  static Rotation from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2,
                               double tol = kNumTol) {
    Mat3 m;
    m.set_column(0, c0);
    m.set_column(1, c1);
    m.set_column(2, c2);
    return from_matrix(m, tol);
  }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  Vec3 column(int j) const { return m_.column(j); }

  Rotation inverse() const { return Rotation(m_.transpose()); }
  Vec3 apply(const Vec3& v) const { return m_ * v; }

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(a.m_ * b.m_);
  }

  /// Rotation angle in [0, pi].
  double angle() const {
    const Vec3 v = skew_vector();
    return std::atan2(norm(v), 0.5 * (m_.trace() - 1.0));
  }

  /// Unit axis; for the identity returns e3. Near pi the axis is taken from
  /// the symmetric part, which is well conditioned there.
  Vec3 axis() const {
    const Vec3 v = skew_vector();
    const double c = 0.5 * (m_.trace() - 1.0);
    const double s = norm(v);
    if (c >= 0.0) {
      if (s < 1e-300) return {0.0, 0.0, 1.0};
      return (1.0 / s) * v;
    }
    // a a^T = (sym(g) - c 1) / (1 - c)
    Mat3 b = m_.symmetrized();
    for (int i = 0; i < 3; ++i) b(i, i) -= c;
    b *= 1.0 / (1.0 - c);
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (b(i, i) > b(best, best)) best = i;
    Vec3 a = b.column(best);
    a = (1.0 / norm(a)) * a;
    if (dot(a, v) < 0.0) a = -1.0 * a;
    return a;
  }

  /// Unit quaternion (w, x, y, z) with w >= 0.
  std::array<double, 4> quaternion() const {
    const Mat3& m = m_;
    const double tr = m.trace();
    std::array<double, 4> q;
    if (tr > 0) {
      const double s = 2.0 * std::sqrt(tr + 1.0);
      q = {0.25 * s, (m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s, (m(1, 0) - m(0, 1)) / s};
    } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
      const double s = 2.0 * std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2));
      q = {(m(2, 1) - m(1, 2)) / s, 0.25 * s, (m(0, 1) + m(1, 0)) / s, (m(0, 2) + m(2, 0)) / s};
    } else if (m(1, 1) > m(2, 2)) {
      const double s = 2.0 * std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2));
      q = {(m(0, 2) - m(2, 0)) / s, (m(0, 1) + m(1, 0)) / s, 0.25 * s, (m(1, 2) + m(2, 1)) / s};
    } else {
      const double s = 2.0 * std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1));
      q = {(m(1, 0) - m(0, 1)) / s, (m(0, 2) + m(2, 0)) / s, (m(1, 2) + m(2, 1)) / s, 0.25 * s};
    }
    if (q[0] < 0)
      for (double& x : q) x = -x;
    return q;
  }

  /// 6x6 orthogonal matrix Q with kelvin(g a g^T) = Q kelvin(a).
  Mat6 kelvin() const {
    Mat6 q;
    for (int I = 0; I < 6; ++I) {
      const auto [i, j] = kelvin::kPairs[I];
      for (int J = 0; J < 6; ++J) {
        const auto [k, l] = kelvin::kPairs[J];
        double v = m_(i, k) * m_(j, l);
        if (k != l) v += m_(i, l) * m_(j, k);
        if (i == j && k != l) v *= kSqrt2 / 2.0;
        if (i != j && k == l) v *= kSqrt2;
        q(I, J) = v;
      }
    }
    return q;
  }

  static double det3(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

 private:
  explicit Rotation(const Mat3& m) : m_(m) {}

  Vec3 skew_vector() const {
    return {0.5 * (m_(2, 1) - m_(1, 2)), 0.5 * (m_(0, 2) - m_(2, 0)),
            0.5 * (m_(1, 0) - m_(0, 1))};
  }

  Mat3 m_;
};

/// Symmetric second-order tensor.
class SymTensor2 {
 public:
  SymTensor2() = default;

  static SymTensor2 from_components(double t11, double t22, double t33, double t23, double t13,
                                    double t12) {
    SymTensor2 t;
    t.m_(0, 0) = t11;
    t.m_(1, 1) = t22;
    t.m_(2, 2) = t33;
    t.m_(1, 2) = t.m_(2, 1) = t23;
    t.m_(0, 2) = t.m_(2, 0) = t13;
    t.m_(0, 1) = t.m_(1, 0) = t12;
    return t;
  }

  /// Symmetric part of `m`.
  static SymTensor2 from_matrix(const Mat3& m) {
    SymTensor2 t;
    t.m_ = m.symmetrized();
    return t;
  }

  static SymTensor2 from_kelvin(const Vec6& v) {
    return from_components(v[0], v[1], v[2], v[3] / kSqrt2, v[4] / kSqrt2, v[5] / kSqrt2);
  }

  static SymTensor2 identity() { return from_components(1, 1, 1, 0, 0, 0); }

  static SymTensor2 diagonal(double a, double b, double c) {
    return from_components(a, b, c, 0, 0, 0);
  }

  /// n (x) n for a vector n.
  static SymTensor2 outer(const Vec3& n) { return from_matrix(Mat3::outer(n, n)); }

  Vec6 kelvin() const {
    return {m_(0, 0), m_(1, 1), m_(2, 2), kSqrt2 * m_(1, 2), kSqrt2 * m_(0, 2),
            kSqrt2 * m_(0, 1)};
  }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace(); }
  double norm() const { return m_.frobenius_norm(); }

  SymTensor2 deviator() const {
    SymTensor2 d = *this;
    const double p = trace() / 3.0;
    for (int i = 0; i < 3; ++i) d.m_(i, i) -= p;
    return d;
  }

  SymTensor2 rotated(const Rotation& g) const {
    return from_matrix(g.matrix() * m_ * g.matrix().transpose());
  }

  SymmetricEigen<3> eigen() const { return symmetric_eigen(m_); }

  SymTensor2& operator+=(const SymTensor2& o) {
    m_ += o.m_;
    return *this;
  }
  SymTensor2& operator-=(const SymTensor2& o) {
    m_ -= o.m_;
    return *this;
  }
  SymTensor2& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
  friend SymTensor2 operator-(SymTensor2 a, const SymTensor2& b) { return a -= b; }
  friend SymTensor2 operator*(double s, SymTensor2 a) { return a *= s; }
  friend SymTensor2 operator*(SymTensor2 a, double s) { return a *= s; }

  /// a : b
  friend double inner(const SymTensor2& a, const SymTensor2& b) { return inner(a.m_, b.m_); }

 private:
  Mat3 m_;
};

inline SymTensor2 rotate(const SymTensor2& t, const Rotation& g) { return t.rotated(g); }

/// Minor-symmetric fourth-order tensor with a general (possibly non-symmetric)
/// Kelvin matrix.
class FourthOrderTensor {
 public:
  FourthOrderTensor() = default;
  explicit FourthOrderTensor(const Mat6& k) : k_(k) {}

  static FourthOrderTensor from_kelvin(const Mat6& k) { return FourthOrderTensor(k); }

  /// Averages over the minor-symmetric images, so exact for minor-symmetric input.
  static FourthOrderTensor from_array(const Array4& a) {
    Mat6 k;
    for (int I = 0; I < 6; ++I) {
      const auto [i, j] = kelvin::kPairs[I];
      for (int J = 0; J < 6; ++J) {
        const auto [p, q] = kelvin::kPairs[J];
        const double c =
            (a[idx4(i, j, p, q)] + a[idx4(j, i, p, q)] + a[idx4(i, j, q, p)] + a[idx4(j, i, q, p)]) /
            4.0;
        k(I, J) = kelvin::scale_up(c, I, J);
      }
    }
    return FourthOrderTensor(k);
  }

  Array4 to_array() const {
    Array4 a{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q < 3; ++q) {
            const int I = kelvin::slot(i, j), J = kelvin::slot(p, q);
            a[idx4(i, j, p, q)] = kelvin::scale_down(k_(I, J), I, J);
          }
    return a;
  }

  const Mat6& kelvin() const { return k_; }
  double operator()(int I, int J) const { return k_(I, J); }

  double component(int i, int j, int k, int l) const {
    const int I = kelvin::slot(i, j), J = kelvin::slot(k, l);
    return kelvin::scale_down(k_(I, J), I, J);
  }

  double norm() const { return k_.frobenius_norm(); }
  FourthOrderTensor transpose() const { return FourthOrderTensor(k_.transpose()); }

  FourthOrderTensor& operator+=(const FourthOrderTensor& o) {
    k_ += o.k_;
    return *this;
  }
  FourthOrderTensor& operator-=(const FourthOrderTensor& o) {
    k_ -= o.k_;
    return *this;
  }
  FourthOrderTensor& operator*=(double s) {
    k_ *= s;
    return *this;
  }
  friend FourthOrderTensor operator+(FourthOrderTensor a, const FourthOrderTensor& b) {
    return a += b;
  }
  friend FourthOrderTensor operator-(FourthOrderTensor a, const FourthOrderTensor& b) {
    return a -= b;
  }
  friend FourthOrderTensor operator*(double s, FourthOrderTensor a) { return a *= s; }
  friend FourthOrderTensor operator*(FourthOrderTensor a, double s) { return a *= s; }

 private:
  Mat6 k_;
};

/// Fourth-order tensor with minor and major symmetries, stored as a symmetric
/// Kelvin matrix. Serves for both stiffness and compliance.
class ElasticityTensor {
 public:
  ElasticityTensor() = default;

  /// Rejects matrices whose asymmetry exceeds `tol * max(1, max|k|)`.
  static ElasticityTensor from_kelvin(const Mat6& k, double tol = 1e-12) {
    const double scale = std::max(1.0, k.max_abs());
    for (int I = 0; I < 6; ++I)
      for (int J = I + 1; J < 6; ++J)
        if (!(std::abs(k(I, J) - k(J, I)) <= tol * scale))
          throw ValidationError("Kelvin matrix is not symmetric: entry (" + std::to_string(I + 1) +
                                "," + std::to_string(J + 1) + ") differs from (" +
                                std::to_string(J + 1) + "," + std::to_string(I + 1) + ")");
    ElasticityTensor c;
    c.k_ = k.symmetrized();
    return c;
  }

  static ElasticityTensor from(const FourthOrderTensor& t, double tol = 1e-12) {
    return from_kelvin(t.kelvin(), tol);
  }

  /// Builds from index components, checking minor and major symmetries.
  static ElasticityTensor from_components(const Array4& a, double tol = 1e-12) {
    double scale = 1.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    auto check = [&](int i, int j, int k, int l, int p, int q, int r, int s, const char* what) {
      if (!(std::abs(a[idx4(i, j, k, l)] - a[idx4(p, q, r, s)]) <= tol * scale))
        throw ValidationError(std::string(what) + " symmetry violated: " +
                              kelvin::index_name(i, j, k, l) +
                              " != " + kelvin::index_name(p, q, r, s));
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            check(i, j, k, l, j, i, k, l, "minor (C_ijkl = C_jikl)");
            check(i, j, k, l, i, j, l, k, "minor (C_ijkl = C_ijlk)");
            check(i, j, k, l, k, l, i, j, "major (C_ijkl = C_klij)");
          }
    Mat6 k;
    for (int I = 0; I < 6; ++I) {
      const auto [i, j] = kelvin::kPairs[I];
      for (int J = 0; J < 6; ++J) {
        const auto [p, q] = kelvin::kPairs[J];
        k(I, J) = kelvin::scale_up(a[idx4(i, j, p, q)], I, J);
      }
    }
    ElasticityTensor c;
    c.k_ = k.symmetrized();
    return c;
  }

  static ElasticityTensor identity() {
    ElasticityTensor c;
    c.k_ = Mat6::identity();
    return c;
  }

  Array4 to_components() const { return general().to_array(); }
  double component(int i, int j, int k, int l) const { return general().component(i, j, k, l); }

  const Mat6& kelvin() const { return k_; }
  double operator()(int I, int J) const { return k_(I, J); }
  FourthOrderTensor general() const { return FourthOrderTensor(k_); }
  operator FourthOrderTensor() const { return general(); }

  double norm() const { return k_.frobenius_norm(); }

  ElasticityTensor& operator+=(const ElasticityTensor& o) {
    k_ += o.k_;
    return *this;
  }
  ElasticityTensor& operator-=(const ElasticityTensor& o) {
    k_ -= o.k_;
    return *this;
  }
  ElasticityTensor& operator*=(double s) {
    k_ *= s;
    return *this;
  }
  friend ElasticityTensor operator+(ElasticityTensor a, const ElasticityTensor& b) {
    return a += b;
  }
  friend ElasticityTensor operator-(ElasticityTensor a, const ElasticityTensor& b) {
    return a -= b;
  }
  friend ElasticityTensor operator*(double s, ElasticityTensor a) { return a *= s; }
  friend ElasticityTensor operator*(ElasticityTensor a, double s) { return a *= s; }
  friend bool operator==(const ElasticityTensor& a, const ElasticityTensor& b) {
    return a.k_ == b.k_;
  }

 private:
  Mat6 k_;
};

// ---------------------------------------------------------------- products

/// Kelvin image of the basis tensor of slot J.
inline Mat3 kelvin_basis(int J) {
  Mat3 e;
  const auto [i, j] = kelvin::kPairs[J];
  if (i == j) {
    e(i, i) = 1.0;
  } else {
    e(i, j) = e(j, i) = 1.0 / kSqrt2;
  }
  return e;
}

/// a (x) b : (a (x) b)_ijkl = a_ij b_kl.
inline FourthOrderTensor dyad(const SymTensor2& a, const SymTensor2& b) {
  return FourthOrderTensor(Mat6::outer(a.kelvin(), b.kelvin()));
}

/// Minor-symmetrized a (x)bar b, with (a (x)bar b)_ijkl = (a_ik b_jl + a_il b_jk)/2
/// before symmetrization in (ij). As a map: x -> (a x b + b x a)/2.
inline FourthOrderTensor kelvin_product(const SymTensor2& a, const SymTensor2& b) {
  Mat6 k;
  const Mat3& am = a.matrix();
  const Mat3& bm = b.matrix();
  for (int J = 0; J < 6; ++J) {
    const Mat3 e = kelvin_basis(J);
    const SymTensor2 col = SymTensor2::from_matrix(0.5 * (am * e * bm + bm * e * am));
    k.set_column(std::size_t(J), col.kelvin());
  }
  return FourthOrderTensor(k);
}

/// Totally symmetric product a (x)_(4) b.
inline FourthOrderTensor sym_product(const SymTensor2& a, const SymTensor2& b) {
  return (1.0 / 6.0) *
         (dyad(a, b) + dyad(b, a) + 2.0 * kelvin_product(a, b) + 2.0 * kelvin_product(b, a));
}

/// Product a (x)_(2,2) b, whose totally symmetric part vanishes.
inline FourthOrderTensor anti_product(const SymTensor2& a, const SymTensor2& b) {
  return (1.0 / 3.0) * (dyad(a, b) + dyad(b, a) - kelvin_product(a, b) - kelvin_product(b, a));
}

/// Box product a [x] b = (6 (a (x)bar b + b (x)bar a) - 4 (a (x) b + b (x) a)) / 7.
inline FourthOrderTensor box_product(const SymTensor2& a, const SymTensor2& b) {
  return (1.0 / 7.0) *
         (6.0 * (kelvin_product(a, b) + kelvin_product(b, a)) - 4.0 * (dyad(a, b) + dyad(b, a)));
}

enum class ProductKind { Dyad, Sym, Anti, Box, Kelvin };

inline FourthOrderTensor structured_product(ProductKind kind, const SymTensor2& a,
                                            const SymTensor2& b) {
  switch (kind) {
    case ProductKind::Dyad: return dyad(a, b);
    case ProductKind::Sym: return sym_product(a, b);
    case ProductKind::Anti: return anti_product(a, b);
    case ProductKind::Box: return box_product(a, b);
    case ProductKind::Kelvin: return kelvin_product(a, b);
  }
  return {};
}

// ------------------------------------------------------------ contractions

/// (tr12 T)_kl = T_iikl.
inline SymTensor2 tr12(const FourthOrderTensor& t) {
  const Vec6 one = SymTensor2::identity().kelvin();
  return SymTensor2::from_kelvin(t.kelvin().transpose() * one);
}

/// (tr13 T)_jl = T_ijil.
inline SymTensor2 tr13(const FourthOrderTensor& t) {
  Mat3 r;
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += t.component(i, j, i, l);
      r(j, l) = s;
    }
  return SymTensor2::from_matrix(r);
}

/// T_iijj.
inline double full_trace(const FourthOrderTensor& t) {
  const Vec6 one = SymTensor2::identity().kelvin();
  return dot(one, t.kelvin() * one);
}

/// (A : B)_ijkl = A_ijpq B_pqkl.
inline FourthOrderTensor double_dot(const FourthOrderTensor& a, const FourthOrderTensor& b) {
  return FourthOrderTensor(a.kelvin() * b.kelvin());
}

/// A :: B = A_ijkl B_ijkl.
inline double quad_dot(const FourthOrderTensor& a, const FourthOrderTensor& b) {
  return inner(a.kelvin(), b.kelvin());
}

/// (A : x)_ij = A_ijkl x_kl.
inline SymTensor2 apply(const FourthOrderTensor& a, const SymTensor2& x) {
  return SymTensor2::from_kelvin(a.kelvin() * x.kelvin());
}

/// x : A : y.
inline double bilinear(const SymTensor2& x, const FourthOrderTensor& a, const SymTensor2& y) {
  return dot(x.kelvin(), a.kelvin() * y.kelvin());
}

struct IsotropicProjectors {
  FourthOrderTensor I, J, K;
};

/// I = identity on symmetric tensors, K = (1/3) 1 (x) 1, J = I - K.
inline IsotropicProjectors isotropic_projectors() {
  const SymTensor2 one = SymTensor2::identity();
  IsotropicProjectors p;
  p.I = FourthOrderTensor(Mat6::identity());
  p.K = (1.0 / 3.0) * dyad(one, one);
  p.J = p.I - p.K;
  return p;
}

/// Isotropic tensor a J + b K.
inline ElasticityTensor isotropic_tensor(double on_j, double on_k) {
  const auto p = isotropic_projectors();
  return ElasticityTensor::from(on_j * p.J + on_k * p.K);
}

// ------------------------------------------------------------------ action

inline FourthOrderTensor rotate(const FourthOrderTensor& t, const Rotation& g) {
  const Mat6 q = g.kelvin();
  return FourthOrderTensor(q * t.kelvin() * q.transpose());
}

inline ElasticityTensor rotate(const ElasticityTensor& c, const Rotation& g) {
  const Mat6 q = g.kelvin();
  return ElasticityTensor::from_kelvin(q * c.kelvin() * q.transpose(), 1e-10);
}

// ------------------------------------------------------------ linear algebra

/// Ascending eigenvalues of the Kelvin matrix.
inline Vec6 spectrum(const ElasticityTensor& c) { return symmetric_eigen(c.kelvin()).values; }

/// Smallest eigenvalue exceeds `tol * ||C||_F`.
inline bool is_positive_definite(const ElasticityTensor& c, double tol = kNumTol) {
  return spectrum(c)[0] > tol * c.norm();
}

/// Inverse on symmetric second-order tensors (LU with partial pivoting). Throws when the condition number exceeds `max_condition`.
inline ElasticityTensor invert(const ElasticityTensor& c, double max_condition = 1e12) {
  const Vec6 ev = spectrum(c);
  double smin = std::numeric_limits<double>::infinity(), smax = 0.0;
  for (double v : ev) {
    smin = std::min(smin, std::abs(v));
    smax = std::max(smax, std::abs(v));
  }
  if (!(smax > 0.0) || !(smin * max_condition > smax))
    throw SingularMatrixError("tensor is singular or ill-conditioned (smallest singular value " +
                                  std::to_string(smin) + ")",
                              smin);
  Eigen::Matrix<double, 6, 6> a;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = c.kelvin()(i, j);
  const Eigen::Matrix<double, 6, 6> ai = a.partialPivLu().inverse();
  Mat6 inv;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) inv(i, j) = ai(i, j);
  return ElasticityTensor::from_kelvin(inv.symmetrized(), 1e-6);
}

}  // namespace ela
