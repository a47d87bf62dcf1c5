#pragma once

/// \file
/// Distance to a geometric structure and nearest-tensor projection.
///
/// In a fixed frame the set of tensors whose covariants satisfy an entry's
/// constraints is a linear subspace, and project_in_frame is the orthogonal
/// projection onto it. The distance to the whole orbit is then minimized over
/// orientations with a multistart simplex search on unit quaternions.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ela/covariants.hpp"
#include "ela/error.hpp"
#include "ela/exotic.hpp"
#include "ela/harmonic.hpp"
#include "ela/nelder_mead.hpp"
#include "ela/tensor_core.hpp"

namespace ela {

using Mat21 = SquareMatrix<21>;
using Vec21 = Vector<21>;

/// Coordinates of a symmetric 6x6 matrix in an orthonormal basis
/// (diagonal entries, then sqrt2 times the upper off-diagonal entries).
inline Vec21 sym6_coordinates(const Mat6& m) {
  Vec21 v{};
  std::size_t n = 0;
  for (int i = 0; i < 6; ++i) v[n++] = m(i, i);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) v[n++] = kSqrt2 * 0.5 * (m(i, j) + m(j, i));
  return v;
}

inline Mat6 sym6_from_coordinates(const Vec21& v) {
  Mat6 m;
  std::size_t n = 0;
  for (int i = 0; i < 6; ++i) m(i, i) = v[n++];
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) m(i, j) = m(j, i) = v[n++] / kSqrt2;
  return m;
}

inline void require_projectable(const ExoticCatalogEntry& entry) {
  if (is_subclass(entry.overall(), ClassLabel::D(2)))
    throw ValidationError("projection onto " + entry.label +
                          " is not supported (class at or below orthotropy)");
}

/// Orthogonal projection onto the entry's subspace in the current frame.
inline ElasticityTensor project_in_frame(const ElasticityTensor& c, const ExoticCatalogEntry& entry,
                                         Scheme scheme = Scheme::CGHD) {
  require_projectable(entry);
  return reconstruct(impose(decompose(c, scheme), constraints_for(entry)));
}

/// project_in_frame as a 21x21 matrix on sym6_coordinates.
inline Mat21 projection_matrix(const ExoticCatalogEntry& entry, Scheme scheme = Scheme::CGHD) {
  require_projectable(entry);
  const StructureConstraints cons = constraints_for(entry);
  Mat21 p;
  for (std::size_t m = 0; m < 21; ++m) {
    Vec21 e{};
    e[m] = 1.0;
    const ElasticityTensor b = ElasticityTensor::from_kelvin(sym6_from_coordinates(e));
    const Vec21 col = sym6_coordinates(reconstruct(impose(decompose(b, scheme), cons)).kelvin());
    p.set_column(m, col);
  }
  return p;
}

struct ProjectionOptions {
  int frame_starts = 8;
  int random_starts = 8;
  int screen_samples = 16384;  ///< random orientations scored to seed the random starts
  int max_iters = 2000;
  double tol = 1e-10;  ///< simplex diameter stop
  std::uint64_t seed = 0;
};

struct StartDiagnostics {
  int index = 0;
  bool from_frame = false;  ///< covariant frame (true) or seeded random
  double initial = 0.0;
  double distance = 0.0;
  int iterations = 0;
  int history_length = 0;
  bool converged = false;
};

struct ProjectionResult {
  ElasticityTensor nearest;
  Rotation rotation;  ///< frame in which `nearest` has the canonical constraint form
  double distance = 0.0;
  double relative_distance = 0.0;
  bool positive_definite = false;
  std::string entry;
  Scheme scheme = Scheme::CGHD;
  std::vector<StartDiagnostics> starts;
};

/// Raised when no start converged; carries the best result found.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, ProjectionResult best)
      : NumericalError(what), best_(std::move(best)) {}
  const ProjectionResult& best() const { return best_; }

 private:
  ProjectionResult best_;
};

namespace detail {

inline std::array<double, 4> normalized(std::array<double, 4> q) {
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (n < 1e-300) return {1.0, 0.0, 0.0, 0.0};
  for (double& x : q) x /= n;
  return q;
}

/// Frames built from the covariants: eigenframes of h_a, h_b and dev d2 with
/// each eigenvector in turn as third axis, the cubic frame of H (also in the
/// orientation that puts a cube diagonal on the third axis), each turned
/// about its third axis in steps of pi/12.
inline std::vector<Rotation> covariant_frames(const HarmonicTriplet& t) {
  std::vector<Mat3> bases;
  auto add_eigen = [&](const SymTensor2& s) {
    if (s.norm() == 0.0) return;
    const Mat3 v = s.eigen().vectors;
    for (int k = 0; k < 3; ++k) {
      const Vec3 a = v.column(std::size_t(k)), b = v.column(std::size_t((k + 1) % 3));
      bases.push_back(frame_from_axes(a, b).matrix());
    }
  };
  add_eigen(t.ha());
  add_eigen(t.hb());
  const D2Covariant d = d2_covariant(t.H());
  add_eigen(d.d2_dev);
  if (t.H().norm() > 0.0) {
    const Mat3 cube = cubic_frame(t.H()).matrix();
    bases.push_back(cube);
    bases.push_back(cube * diagonal_to_axis().transpose());
  }
  if (bases.empty()) bases.push_back(Mat3::identity());
  std::vector<Rotation> out;
  for (const auto& b : bases)
    for (int k = 0; k < 12; ++k)
      out.push_back(Rotation::from_matrix(b * rot({0, 0, 1}, kPi * k / 12.0), 1e-8));
  return out;
}

/// Gauss-Newton on the residual vector over g exp(w), with a central
/// difference Jacobian and a pseudo-inverse that ignores directions along
/// which the residual is flat (continuous symmetries).
template <class Residual>
Rotation gauss_newton_polish(const Residual& res, Rotation g, int max_steps = 20) {
  constexpr double h = 1e-6;
  Vec21 r = res(g);
  double f = norm(r);
  for (int step = 0; step < max_steps && f > 0.0; ++step) {
    std::array<Vec21, 3> jac;
    for (std::size_t a = 0; a < 3; ++a) {
      Vec3 axis{};
      axis[a] = 1.0;
      const Vec21 up = res(g * Rotation::from_axis_angle(axis, h));
      const Vec21 dn = res(g * Rotation::from_axis_angle(axis, -h));
      jac[a] = (0.5 / h) * (up - dn);
    }
    Mat3 jtj;
    Vec3 jtr{};
    for (std::size_t a = 0; a < 3; ++a) {
      jtr[a] = dot(jac[a], r);
      for (std::size_t b = 0; b < 3; ++b) jtj(int(a), int(b)) = dot(jac[a], jac[b]);
    }
    const auto e = symmetric_eigen(jtj);
    const double cutoff = 1e-10 * std::max(e.values[2], 1e-300);
    Vec3 w{};
    for (std::size_t m = 0; m < 3; ++m) {
      if (e.values[m] <= cutoff) continue;
      const Vec3 v = e.vectors.column(m);
      w = w + (-dot(v, jtr) / e.values[m]) * v;
    }
    const double angle = norm(w);
    if (!(angle > 1e-16)) break;
    const Rotation trial = g * Rotation::from_axis_angle((1.0 / angle) * w, angle);
    const Vec21 rt = res(trial);
    const double ft = norm(rt);
    if (!(ft < f)) break;
    g = trial;
    r = rt;
    f = ft;
  }
  return g;
}

}  // namespace detail

/// Minimizes ||C - g P(g^-1 C) g^-1|| over orientations g.
inline ProjectionResult nearest_in_structure(const ElasticityTensor& c, const ExoticCatalogEntry& entry,
                                             Scheme scheme = Scheme::CGHD,
                                             const ProjectionOptions& opt = {}) {
  const Mat21 p = projection_matrix(entry, scheme);
  const Mat6 k = c.kelvin();
  const double scale = c.norm() > 0 ? c.norm() : 1.0;

  auto vector_residual = [&](const Rotation& g) {
    const Mat6 q = g.kelvin();
    const Vec21 d = sym6_coordinates(q.transpose() * k * q);
    return d - p * d;
  };
  auto residual = [&](const Rotation& g) { return norm(vector_residual(g)); };
  auto objective = [&](const std::array<double, 4>& q) {
    return residual(Rotation::from_quaternion(detail::normalized(q)));
  };

  const HarmonicTriplet t = decompose(c, scheme);
  std::vector<std::pair<double, Rotation>> pool;
  for (const auto& g : detail::covariant_frames(t)) pool.emplace_back(residual(g), g);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  NelderMeadOptions<4> nm;
  nm.max_iters = opt.max_iters;
  nm.diameter_tol = opt.tol;
  nm.stall_tol = 1e-14 * scale;
  nm.target = 1e-13 * scale;
  const auto renorm = [](std::array<double, 4>& q) { q = detail::normalized(q); };

  ProjectionResult best;
  best.entry = entry.label;
  best.scheme = scheme;
  best.distance = HUGE_VAL;
  bool any_converged = false;
  std::vector<Rotation> tried;
  auto run = [&](const Rotation& start, bool from_frame) {
    auto r = nelder_mead<4>(objective, start.quaternion(), nm, renorm);
    const Rotation polished = detail::gauss_newton_polish(
        vector_residual, Rotation::from_quaternion(detail::normalized(r.x)));
    const double pv = residual(polished);
    if (pv < r.value) {
      r.value = pv;
      r.x = polished.quaternion();
    }
    StartDiagnostics s;
    s.index = int(best.starts.size());
    s.from_frame = from_frame;
    s.initial = residual(start);
    s.distance = r.value;
    s.iterations = r.iterations;
    s.history_length = r.history_length;
    s.converged = r.converged;
    best.starts.push_back(s);
    tried.push_back(start);
    any_converged = any_converged || r.converged;
    if (r.value < best.distance) {
      best.distance = r.value;
      best.rotation = Rotation::from_quaternion(detail::normalized(r.x));
    }
  };

  for (int i = 0; i < opt.frame_starts && i < int(pool.size()) && best.distance > nm.target; ++i)
    run(pool[std::size_t(i)].second, true);

  // Random starts, only while the target is unmet: the best-scoring of many
  // random orientations, each at least 0.2 rad from every start so far.
  if (best.distance > nm.target && opt.random_starts > 0) {
    std::mt19937_64 rng(opt.seed);
    const Rotation ref = pool.front().second;
    const int samples = std::max(opt.screen_samples, opt.random_starts);
    std::vector<std::pair<double, Rotation>> screen;
    screen.reserve(std::size_t(samples));
    for (int i = 0; i < samples; ++i) {
      const Rotation g = ref * random_rotation(rng);
      screen.emplace_back(residual(g), g);
    }
    std::stable_sort(screen.begin(), screen.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    const double min_cos = std::cos(0.1);
    int taken = 0;
    for (const auto& [value, g] : screen) {
      if (taken == opt.random_starts || best.distance <= nm.target) break;
      const auto q = g.quaternion();
      const bool near = std::any_of(tried.begin(), tried.end(), [&](const Rotation& t) {
        const auto u = t.quaternion();
        return std::abs(q[0] * u[0] + q[1] * u[1] + q[2] * u[2] + q[3] * u[3]) > min_cos;
      });
      if (near) continue;
      run(g, false);
      ++taken;
    }
  }

  const Mat6 q = best.rotation.kelvin();
  const Mat6 in_frame = sym6_from_coordinates(p * sym6_coordinates(q.transpose() * k * q));
  best.nearest = ElasticityTensor::from_kelvin((q * in_frame * q.transpose()).symmetrized());
  best.distance = (c - best.nearest).norm();
  best.relative_distance = best.distance / scale;
  best.positive_definite = is_positive_definite(best.nearest);
  if (!any_converged)
    throw ConvergenceError("orientation search did not converge on any start", best);
  return best;
}

}  // namespace ela
