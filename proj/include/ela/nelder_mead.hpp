#pragma once

/// \file
/// Derivative-free simplex descent on R^N with a projection applied to every
/// trial point, so the simplex can live on a manifold such as the unit
/// quaternions.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace ela {

template <std::size_t N>
struct NelderMeadOptions {
  int max_iters = 2000;
  double step = 0.05;          ///< initial simplex edge
  double diameter_tol = 1e-10; ///< stop when all vertices are this close
  double stall_tol = 1e-14;    ///< stop when the best value improves less than this...
  int stall_window = 25;       ///< ...over this many iterations
  double target = -HUGE_VAL;   ///< stop as soon as the best value reaches this
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  int history_length = 0;  ///< number of best-value improvements recorded
};

/// Standard coefficients (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
/// `project` is applied to every trial point (e.g. renormalization).
template <std::size_t N>
NelderMeadResult<N> nelder_mead(
    const std::function<double(const std::array<double, N>&)>& f, std::array<double, N> x0,
    const NelderMeadOptions<N>& opt,
    const std::function<void(std::array<double, N>&)>& project = nullptr) {
  using Point = std::array<double, N>;
  auto fix = [&](Point& p) {
    if (project) project(p);
  };
  std::array<Point, N + 1> pts;
  std::array<double, N + 1> vals;
  fix(x0);
  pts[0] = x0;
  for (std::size_t i = 0; i < N; ++i) {
    Point p = x0;
    p[i] += opt.step;
    fix(p);
    pts[i + 1] = p;
  }
  for (std::size_t i = 0; i <= N; ++i) vals[i] = f(pts[i]);

  NelderMeadResult<N> res;
  std::array<std::size_t, N + 1> order;
  auto sort = [&] {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  auto along = [&](const Point& c, const Point& w, double t) {
    Point p;
    for (std::size_t i = 0; i < N; ++i) p[i] = c[i] + t * (w[i] - c[i]);
    fix(p);
    return p;
  };

  sort();
  double best = vals[order[0]];
  double window_start = best;
  int since = 0;
  for (int it = 0; it < opt.max_iters; ++it) {
    res.iterations = it + 1;
    const std::size_t lo = order[0], hi = order[N], nh = order[N - 1];
    if (vals[lo] <= opt.target) {
      res.converged = true;
      break;
    }
    double diam = 0.0;
    for (std::size_t v = 1; v <= N; ++v) {
      double d = 0.0;
      for (std::size_t i = 0; i < N; ++i) d = std::max(d, std::abs(pts[order[v]][i] - pts[lo][i]));
      diam = std::max(diam, d);
    }
    if (diam < opt.diameter_tol) {
      res.converged = true;
      break;
    }

    Point c{};
    for (std::size_t v = 0; v < N; ++v)
      for (std::size_t i = 0; i < N; ++i) c[i] += pts[order[v]][i] / double(N);

    const Point r = along(c, pts[hi], -1.0);
    const double fr = f(r);
    if (fr < vals[lo]) {
      const Point e = along(c, pts[hi], -2.0);
      const double fe = f(e);
      if (fe < fr) {
        pts[hi] = e, vals[hi] = fe;
      } else {
        pts[hi] = r, vals[hi] = fr;
      }
    } else if (fr < vals[nh]) {
      pts[hi] = r, vals[hi] = fr;
    } else {
      const bool outside = fr < vals[hi];
      const Point k = outside ? along(c, r, 0.5) : along(c, pts[hi], 0.5);
      const double fk = f(k);
      if (fk < std::min(fr, vals[hi])) {
        pts[hi] = k, vals[hi] = fk;
      } else {
        for (std::size_t v = 1; v <= N; ++v) {
          Point& p = pts[order[v]];
          p = along(pts[lo], p, 0.5);
          vals[order[v]] = f(p);
        }
      }
    }
    sort();
    if (vals[order[0]] < best) {
      best = vals[order[0]];
      ++res.history_length;
    }
    if (++since >= opt.stall_window) {
      if (window_start - best < opt.stall_tol) {
        res.converged = true;
        break;
      }
      window_start = best;
      since = 0;
    }
  }
  res.x = pts[order[0]];
  res.value = vals[order[0]];
  return res;
}

}  // namespace ela
