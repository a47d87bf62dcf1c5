#pragma once

/// \file
/// Symmetry detection for harmonic covariants and the geometric structure of
/// an elasticity tensor.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ela/class_label.hpp"
#include "ela/clips.hpp"
#include "ela/error.hpp"
#include "ela/harmonic.hpp"
#include "ela/tensor_core.hpp"

namespace ela {

/// Default relative tolerance for symmetry detection.
inline constexpr double kSymTol = 1e-7;

struct D2Covariant {
  SymTensor2 d2;
  H2Tensor d2_dev;
};

/// d2 = tr13(H : H).
inline D2Covariant d2_covariant(const H4Tensor& h) {
  const FourthOrderTensor hh = double_dot(h.tensor(), h.tensor());
  D2Covariant r;
  r.d2 = tr13(hh);
  r.d2_dev = H2Tensor::deviator_of(r.d2);
  return r;
}

namespace detail {

inline Mat3 rot(const Vec3& axis, double angle) {
  return Rotation::from_axis_angle(axis, angle).matrix();
}

inline double mat_distance(const Mat3& a, const Mat3& b) { return (a - b).frobenius_norm(); }

/// Closure of a generator set under multiplication.
inline std::vector<Mat3> close_group(const std::vector<Mat3>& generators, double tol = 1e-9) {
  std::vector<Mat3> elems{Mat3::identity()};
  auto known = [&](const Mat3& m) {
    for (const auto& e : elems)
      if (mat_distance(e, m) < tol) return true;
    return false;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      const Mat3 p = g * elems[i];
      if (!known(p)) elems.push_back(p);
    }
    if (elems.size() > 200) throw NumericalError("group closure did not terminate");
  }
  return elems;
}

/// Unit vector orthogonal to `a`.
inline Vec3 orthogonal_to(const Vec3& a) {
  const Vec3 trial = std::abs(a[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 b = cross(a, trial);
  return (1.0 / norm(b)) * b;
}

/// Right-handed frame with third column `principal` and first column the
/// component of `secondary` orthogonal to it.
inline Rotation frame_from_axes(Vec3 principal, std::optional<Vec3> secondary = std::nullopt) {
  principal = (1.0 / norm(principal)) * principal;
  Vec3 s = secondary ? *secondary - dot(*secondary, principal) * principal : Vec3{};
  if (!secondary || norm(s) < 1e-8) s = orthogonal_to(principal);
  s = (1.0 / norm(s)) * s;
  const Vec3 t = cross(principal, s);
  return Rotation::from_columns(s, t, principal, 1e-8);
}

/// Right-handed frame from eigenvector columns.
inline Rotation frame_from_eigenvectors(const Mat3& v) {
  const Vec3 c0 = v.column(0), c1 = v.column(1);
  return Rotation::from_columns(c0, c1, cross(c0, c1), 1e-8);
}

}  // namespace detail

/// Elements of the representative group of a finite class in the reference
/// frame: principal axis e3, secondary two-fold axis e1.
inline std::vector<Mat3> canonical_elements(const ClassLabel& label) {
  using detail::rot;
  const Vec3 e1{1, 0, 0}, e3{0, 0, 1};
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  switch (label.kind()) {
    case ClassKind::Triclinic: return {Mat3::identity()};
    case ClassKind::Zn: return detail::close_group({rot(e3, 2 * kPi / label.n())});
    case ClassKind::Dn: return detail::close_group({rot(e3, 2 * kPi / label.n()), rot(e1, kPi)});
    case ClassKind::T:
      return detail::close_group({rot(e3, kPi), rot(e1, kPi), rot({1, 1, 1}, 2 * kPi / 3)});
    case ClassKind::O: return detail::close_group({rot(e3, kPi / 2), rot(e1, kPi / 2)});
    case ClassKind::I:
      return detail::close_group(
          {rot(e3, kPi), rot({1, 1, 1}, 2 * kPi / 3), rot({0, 1, phi}, 2 * kPi / 5)});
    default: throw ValidationError("class " + label.to_string() + " has no finite element list");
  }
}

/// A concrete symmetry group: class label plus the frame carrying the
/// reference representative onto it.
class ClassedGroup {
 public:
  ClassedGroup() : ClassedGroup(ClassLabel::SO3(), Rotation::identity()) {}

  ClassedGroup(ClassLabel label, Rotation frame) : label_(label), frame_(frame) {
    if (label.is_finite()) {
      const Mat3 f = frame.matrix(), ft = f.transpose();
      for (const auto& g : canonical_elements(label)) elements_.push_back(f * g * ft);
    }
  }

  const ClassLabel& label() const { return label_; }
  const Rotation& frame() const { return frame_; }
  Vec3 principal_axis() const { return frame_.column(2); }
  Vec3 secondary_axis() const { return frame_.column(0); }

  /// Explicit elements; empty for continuous groups.
  const std::vector<Mat3>& elements() const { return elements_; }

  /// Generators in the group's frame.
  std::vector<Rotation> generators() const {
    const Vec3 p = principal_axis(), s = secondary_axis();
    switch (label_.kind()) {
      case ClassKind::Triclinic: return {};
      case ClassKind::Zn: return {Rotation::from_axis_angle(p, 2 * kPi / label_.n())};
      case ClassKind::Dn:
        return {Rotation::from_axis_angle(p, 2 * kPi / label_.n()),
                Rotation::from_axis_angle(s, kPi)};
      case ClassKind::O:
        return {Rotation::from_axis_angle(p, kPi / 2), Rotation::from_axis_angle(s, kPi / 2)};
      case ClassKind::O2:
        return {Rotation::from_axis_angle(p, 1.0), Rotation::from_axis_angle(s, kPi)};
      case ClassKind::SO2: return {Rotation::from_axis_angle(p, 1.0)};
      case ClassKind::SO3:
        return {Rotation::from_axis_angle({0, 0, 1}, 1.0),
                Rotation::from_axis_angle({1, 0, 0}, 1.0)};
      default: {
        std::vector<Rotation> out;
        for (const auto& e : elements_) out.push_back(Rotation::from_matrix(e, 1e-8));
        return out;
      }
    }
  }

  bool contains(const Mat3& g, double tol) const {
    switch (label_.kind()) {
      case ClassKind::SO3: return true;
      case ClassKind::SO2: {
        const Vec3 a = principal_axis();
        return norm(g * a - a) < tol;
      }
      case ClassKind::O2: {
        const Vec3 a = principal_axis();
        const Vec3 ga = g * a;
        return norm(ga - a) < tol || norm(ga + a) < tol;
      }
      default:
        for (const auto& e : elements_)
          if (detail::mat_distance(e, g) < tol) return true;
        return false;
    }
  }

 private:
  ClassLabel label_;
  Rotation frame_;
  std::vector<Mat3> elements_;
};

/// Identifies the class and frame of a finite rotation group given by its
/// elements.
inline ClassedGroup identify_group(const std::vector<Mat3>& elems, double tol) {
  const int order = int(elems.size());
  if (order <= 1) return {ClassLabel::triclinic(), Rotation::identity()};
  struct AxisClass {
    Vec3 axis;
    int count = 0;
  };
  std::vector<AxisClass> axes;
  for (const auto& m : elems) {
    if (detail::mat_distance(m, Mat3::identity()) < tol) continue;
    const Rotation g = Rotation::from_matrix(m, 1e-6);
    const Vec3 a = g.axis();
    bool found = false;
    for (auto& c : axes)
      if (norm(cross(c.axis, a)) < tol) {
        ++c.count;
        found = true;
        break;
      }
    if (!found) axes.push_back({a, 1});
  }
  auto fail = [&]() -> ClassedGroup {
    throw NumericalError("element set of order " + std::to_string(order) +
                         " is not a recognizable rotation group");
  };
  if (axes.size() == 1) return {ClassLabel::Z(order), detail::frame_from_axes(axes[0].axis)};
  int nmax = 0;
  for (const auto& c : axes) nmax = std::max(nmax, c.count + 1);
  auto axes_of_order = [&](int n) {
    std::vector<Vec3> out;
    for (const auto& c : axes)
      if (c.count + 1 == n) out.push_back(c.axis);
    return out;
  };
  auto perpendicular = [&](const Vec3& p, const std::vector<Vec3>& cands) -> std::optional<Vec3> {
    for (const auto& c : cands)
      if (std::abs(dot(c, p)) < tol) return c;
    return std::nullopt;
  };
  if (order == 2 * nmax) {
    const auto principal = axes_of_order(nmax);
    const Vec3 p = principal.front();
    const auto s = perpendicular(p, axes_of_order(2));
    if (!s) return fail();
    return {ClassLabel::D(nmax), detail::frame_from_axes(p, s)};
  }
  if (order == 12 || order == 24) {
    const auto cands = axes_of_order(order == 12 ? 2 : 4);
    if (cands.size() != 3) return fail();
    const auto s = perpendicular(cands[0], cands);
    if (!s) return fail();
    return {order == 12 ? ClassLabel::tetrahedral() : ClassLabel::octahedral(),
            detail::frame_from_axes(cands[0], s)};
  }
  if (order == 60) {
    const auto twofold = axes_of_order(2);
    const Vec3 p = twofold.front();
    for (const auto& c : twofold) {
      if (std::abs(dot(c, p)) > tol) continue;
      for (double sign : {1.0, -1.0}) {
        const ClassedGroup cand(ClassLabel::icosahedral(),
                                detail::frame_from_axes(p, sign * c));
        bool ok = true;
        for (const auto& e : cand.elements()) {
          bool hit = false;
          for (const auto& m : elems) hit = hit || detail::mat_distance(e, m) < tol;
          ok = ok && hit;
        }
        if (ok) return cand;
      }
    }
    return fail();
  }
  return fail();
}

/// Class of the intersection of two concrete groups expressed in a common
/// frame.
inline ClassedGroup intersect(const ClassedGroup& a, const ClassedGroup& b, double tol = kSymTol) {
  const double atol = std::max(1e3 * tol, 1e-6);
  using K = ClassKind;
  const K ka = a.label().kind(), kb = b.label().kind();
  if (ka == K::SO3) return b;
  if (kb == K::SO3) return a;
  const bool ca = !a.label().is_finite(), cb = !b.label().is_finite();
  if (ca && cb) {
    const Vec3 p = a.principal_axis(), q = b.principal_axis();
    const double s = norm(cross(p, q)), c = std::abs(dot(p, q));
    const bool both_o2 = ka == K::O2 && kb == K::O2;
    if (s < atol) {
      return {both_o2 ? ClassLabel::O2() : ClassLabel::SO2(), a.frame()};
    }
    if (c < atol) {
      if (both_o2) return {ClassLabel::D(2), detail::frame_from_axes(p, q)};
      if (ka == K::SO2 && kb == K::O2) return {ClassLabel::Z(2), detail::frame_from_axes(p)};
      if (ka == K::O2 && kb == K::SO2) return {ClassLabel::Z(2), detail::frame_from_axes(q)};
      return {ClassLabel::triclinic(), Rotation::identity()};
    }
    if (both_o2) return {ClassLabel::Z(2), detail::frame_from_axes(cross(p, q))};
    return {ClassLabel::triclinic(), Rotation::identity()};
  }
  const ClassedGroup& fin = ca ? b : a;
  const ClassedGroup& other = ca ? a : b;
  std::vector<Mat3> common;
  for (const auto& g : fin.elements())
    if (other.contains(g, atol)) common.push_back(g);
  return identify_group(common, atol);
}

inline ClassLabel intersect_groups(const ClassedGroup& a, const ClassedGroup& b,
                                   double tol = kSymTol) {
  return intersect(a, b, tol).label();
}

/// Symmetry group of a second-order tensor. `h` counts as zero below
/// `tol * scale`; eigenvalues coincide within `tol * ||h||`.
inline ClassedGroup classify_h2(const SymTensor2& h, double tol = kSymTol, double scale = 1.0) {
  const double hn = h.norm();
  if (hn <= tol * scale) return {ClassLabel::SO3(), Rotation::identity()};
  const auto e = h.eigen();
  const double g01 = e.values[1] - e.values[0], g12 = e.values[2] - e.values[1];
  const double eps = tol * hn;
  if (g01 <= eps && g12 <= eps) return {ClassLabel::SO3(), Rotation::identity()};
  if (g01 <= eps) return {ClassLabel::O2(), detail::frame_from_axes(e.vectors.column(2))};
  if (g12 <= eps) return {ClassLabel::O2(), detail::frame_from_axes(e.vectors.column(0))};
  return {ClassLabel::D(2), detail::frame_from_eigenvectors(e.vectors)};
}

/// ||g * H - H|| / ||H||.
inline double invariance_residual(const H4Tensor& h, const Rotation& g) {
  const double hn = h.norm();
  if (hn == 0.0) return 0.0;
  return (h.rotated(g).kelvin() - h.kelvin()).frobenius_norm() / hn;
}

/// Frame of a cubic harmonic tensor, read off the two-dimensional eigenspace
/// of its Kelvin matrix (the diagonal deviators of the cube frame).
inline Rotation cubic_frame(const H4Tensor& h) {
  if (h.norm() == 0.0) return Rotation::identity();
  const auto e = symmetric_eigen(h.kelvin());
  const bool top = std::abs(e.values[5]) >= std::abs(e.values[0]);
  const Vec6 v1 = e.vectors.column(top ? 4 : 0), v2 = e.vectors.column(top ? 5 : 1);
  double best_gap = -1.0;
  Mat3 best;
  constexpr int kSteps = 90;
  for (int k = 0; k < kSteps; ++k) {
    const double psi = kPi * k / kSteps;
    const SymTensor2 x = SymTensor2::from_kelvin(std::cos(psi) * v1 + std::sin(psi) * v2);
    const auto ex = x.eigen();
    const double gap = std::min(ex.values[1] - ex.values[0], ex.values[2] - ex.values[1]);
    if (gap > best_gap) {
      best_gap = gap;
      best = ex.vectors;
    }
  }
  return detail::frame_from_eigenvectors(best);
}

namespace detail {

/// Searches the plane orthogonal to `a` for a two-fold axis of `h`.
inline std::optional<Vec3> find_pi_axis(const H4Tensor& h, const Vec3& a, double tol) {
  const Vec3 b1 = orthogonal_to(a), b2 = cross(a, b1);
  auto axis_at = [&](double t) { return std::cos(t) * b1 + std::sin(t) * b2; };
  auto f = [&](double t) { return invariance_residual(h, Rotation::from_axis_angle(axis_at(t), kPi)); };
  constexpr int kGrid = 360;
  const double step = kPi / kGrid;
  std::array<double, kGrid> vals;
  for (int k = 0; k < kGrid; ++k) vals[std::size_t(k)] = f(k * step);
  std::vector<int> minima;
  for (int k = 0; k < kGrid; ++k) {
    const double prev = vals[std::size_t((k + kGrid - 1) % kGrid)];
    const double next = vals[std::size_t((k + 1) % kGrid)];
    if (vals[std::size_t(k)] <= prev && vals[std::size_t(k)] <= next) minima.push_back(k);
  }
  std::sort(minima.begin(), minima.end(),
            [&](int x, int y) { return vals[std::size_t(x)] < vals[std::size_t(y)]; });
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k : minima) {
    double lo = (k - 1) * step, hi = (k + 1) * step;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = f(x2);
      }
    }
    const double t = f1 < f2 ? x1 : x2;
    if (std::min(f1, f2) < tol) return axis_at(t);
  }
  return std::nullopt;
}

}  // namespace detail

/// Symmetry group of a harmonic fourth-order tensor. `H` counts as zero
/// below `tol * scale`.
inline ClassedGroup classify_h4(const H4Tensor& h, double tol = kSymTol, double scale = 1.0) {
  const double hn = h.norm();
  if (hn <= tol * scale) return {ClassLabel::SO3(), Rotation::identity()};
  auto invariant = [&](const Vec3& axis, double angle) {
    return invariance_residual(h, Rotation::from_axis_angle(axis, angle)) < tol;
  };
  const D2Covariant d = d2_covariant(h);
  const double dn = d.d2.norm(), ddn = d.d2_dev.norm();
  if (ddn <= tol * dn) {
    const Rotation f = cubic_frame(h);
    if (invariant(f.column(2), kPi / 2) && invariant(f.column(0), kPi / 2))
      return {ClassLabel::octahedral(), f};
    throw AmbiguityError("O", "a non-cubic class", "d2 is spherical but H is not cubic");
  }
  const auto e = d.d2_dev.tensor().eigen();
  const double eps = tol * ddn;
  const double g01 = e.values[1] - e.values[0], g12 = e.values[2] - e.values[1];
  const bool dbl = g01 <= eps || g12 <= eps;
  if (dbl) {
    const Vec3 a = e.vectors.column(g01 <= eps ? 2 : 0);
    const bool by1 = invariant(a, 1.0);
    const bool by5 = invariant(a, kPi / 5);
    if (by1) return {ClassLabel::O2(), detail::frame_from_axes(a)};
    if (by5) throw AmbiguityError("O(2)", "D5", "invariant under pi/5 but not 1 rad");
    if (invariant(a, kPi / 2)) {
      if (auto s = detail::find_pi_axis(h, a, tol))
        return {ClassLabel::D(4), detail::frame_from_axes(a, *s)};
      throw AmbiguityError("D4", "Z4", "no secondary two-fold axis found");
    }
    if (invariant(a, 2 * kPi / 3)) {
      if (auto s = detail::find_pi_axis(h, a, tol))
        return {ClassLabel::D(3), detail::frame_from_axes(a, *s)};
      throw AmbiguityError("D3", "Z3", "no secondary two-fold axis found");
    }
    if (invariant(a, kPi)) {
      if (auto s = detail::find_pi_axis(h, a, tol))
        return {ClassLabel::D(2), detail::frame_from_axes(a, *s)};
      return {ClassLabel::Z(2), detail::frame_from_axes(a)};
    }
    if (auto s = detail::find_pi_axis(h, a, tol))
      return {ClassLabel::Z(2), detail::frame_from_axes(*s)};
    return {ClassLabel::triclinic(), Rotation::identity()};
  }
  std::vector<int> hits;
  for (int k = 0; k < 3; ++k)
    if (invariant(e.vectors.column(std::size_t(k)), kPi)) hits.push_back(k);
  switch (hits.size()) {
    case 3: return {ClassLabel::D(2), detail::frame_from_eigenvectors(e.vectors)};
    case 1:
      return {ClassLabel::Z(2), detail::frame_from_axes(e.vectors.column(std::size_t(hits[0])))};
    case 0: return {ClassLabel::triclinic(), Rotation::identity()};
    default: throw AmbiguityError("D2", "Z2", "exactly two eigenvector axes are two-fold");
  }
}

/// The seven classes (h_a, h_b, H, (h_a,h_b), (h_a,H), (h_b,H), triplet)
/// together with their concrete groups.
struct GeometricStructure {
  std::array<ClassedGroup, 7> groups;

  ClassLabel operator[](std::size_t i) const { return groups[i].label(); }
  std::array<ClassLabel, 7> labels() const {
    std::array<ClassLabel, 7> out;
    for (std::size_t i = 0; i < 7; ++i) out[i] = groups[i].label();
    return out;
  }
  ClassLabel overall() const { return groups[6].label(); }

  StructureSignature signature() const {
    StructureSignature s;
    for (std::size_t i = 0; i < 6; ++i) s.entries[i] = groups[i].label();
    s.overall = groups[6].label();
    return s;
  }

  std::string to_string() const { return signature().to_string(); }
};

inline GeometricStructure geometric_structure(const HarmonicTriplet& t, double tol, double scale) {
  GeometricStructure s;
  s.groups[0] = classify_h2(t.ha(), tol, scale);
  s.groups[1] = classify_h2(t.hb(), tol, scale);
  s.groups[2] = classify_h4(t.H(), tol, scale);
  s.groups[3] = intersect(s.groups[0], s.groups[1], tol);
  s.groups[4] = intersect(s.groups[0], s.groups[2], tol);
  s.groups[5] = intersect(s.groups[1], s.groups[2], tol);
  s.groups[6] = intersect(s.groups[3], s.groups[2], tol);
  return s;
}

inline GeometricStructure geometric_structure(const ElasticityTensor& c, Scheme scheme,
                                              double tol = kSymTol) {
  return geometric_structure(decompose(c, scheme), tol, c.norm());
}

/// Cubic test: h_a = h_b = 0, d2 spherical and nonzero.
inline bool is_cubic(const ElasticityTensor& c, Scheme scheme, double tol = kSymTol) {
  const HarmonicTriplet t = decompose(c, scheme);
  const double scale = c.norm();
  if (t.ha().norm() >= tol * scale || t.hb().norm() >= tol * scale) return false;
  const D2Covariant d = d2_covariant(t.H());
  const double s2 = scale * scale;
  return d.d2_dev.norm() < tol * s2 && d.d2.norm() >= tol * s2;
}

}  // namespace ela
