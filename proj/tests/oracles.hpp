#pragma once

// Independent reference implementations used by the tests. Everything here
// works on plain index arrays (C_ijkl as 81 numbers, 3x3 as 9 numbers) with
// explicit sums, sharing no code with the library beyond the Mat3/Mat6 types
// used at the boundary.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ela/matrix.hpp"

namespace oracle {

using T4 = std::array<double, 81>;
using M3 = std::array<double, 9>;

inline int at(int i, int j, int k, int l) { return ((i * 3 + j) * 3 + k) * 3 + l; }
inline int at(int i, int j) { return i * 3 + j; }

// Kelvin slot of an index pair (11,22,33,23,13,12) and its weight.
inline int slot(int i, int j) {
  static const int table[3][3] = {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}};
  return table[i][j];
}
inline double weight(int i, int j) { return i == j ? 1.0 : std::sqrt(2.0); }

inline T4 from_kelvin(const ela::Mat6& k) {
  T4 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          c[at(i, j, p, q)] = k(slot(i, j), slot(p, q)) / (weight(i, j) * weight(p, q));
  return c;
}

inline ela::Mat6 to_kelvin(const T4& c) {
  ela::Mat6 k;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = p; q < 3; ++q) k(slot(i, j), slot(p, q)) = c[at(i, j, p, q)] * weight(i, j) * weight(p, q);
  return k;
}

inline M3 from_mat(const ela::Mat3& m) {
  M3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[at(i, j)] = m(i, j);
  return a;
}

inline ela::Mat3 to_mat(const M3& a) {
  ela::Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[at(i, j)];
  return m;
}

// C'_ijkl = g_ip g_jq g_kr g_ls C_pqrs
inline T4 rotate(const T4& c, const M3& g) {
  T4 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
              for (int r = 0; r < 3; ++r)
                for (int t = 0; t < 3; ++t)
                  s += g[at(i, p)] * g[at(j, q)] * g[at(k, r)] * g[at(l, t)] * c[at(p, q, r, t)];
          out[at(i, j, k, l)] = s;
        }
  return out;
}

inline M3 rotate2(const M3& a, const M3& g) {
  M3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) out[at(i, j)] += g[at(i, p)] * g[at(j, q)] * a[at(p, q)];
  return out;
}

inline T4 dyad(const M3& a, const M3& b) {
  T4 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) c[at(i, j, k, l)] = a[at(i, j)] * b[at(k, l)];
  return c;
}

// Minor-symmetrized (a_ik b_jl + a_il b_jk + a_jl b_ik + a_jk b_il) / 4
inline T4 bar(const M3& a, const M3& b) {
  T4 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          c[at(i, j, k, l)] = 0.25 * (a[at(i, k)] * b[at(j, l)] + a[at(i, l)] * b[at(j, k)] +
                                      a[at(j, l)] * b[at(i, k)] + a[at(j, k)] * b[at(i, l)]);
  return c;
}

inline T4 lin(double x, const T4& a, double y, const T4& b) {
  T4 c{};
  for (int n = 0; n < 81; ++n) c[n] = x * a[n] + y * b[n];
  return c;
}

// (T_ijkl + T_ikjl + T_iljk) / 3
inline T4 totally_symmetric(const T4& t) {
  T4 s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s[at(i, j, k, l)] = (t[at(i, j, k, l)] + t[at(i, k, j, l)] + t[at(i, l, j, k)]) / 3.0;
  return s;
}

inline M3 tr12(const T4& t) {
  M3 r{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i) r[at(k, l)] += t[at(i, i, k, l)];
  return r;
}

inline M3 tr13(const T4& t) {
  M3 r{};
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i) r[at(j, l)] += t[at(i, j, i, l)];
  return r;
}

inline double norm(const T4& t) {
  double s = 0.0;
  for (double v : t) s += v * v;
  return std::sqrt(s);
}

inline double max_diff(const T4& a, const T4& b) {
  double m = 0.0;
  for (int n = 0; n < 81; ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

// Rodrigues rotation from a unit axis and angle.
inline M3 axis_angle(std::array<double, 3> u, double angle) {
  const double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  for (double& x : u) x /= n;
  const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  return {t * u[0] * u[0] + c,        t * u[0] * u[1] - s * u[2], t * u[0] * u[2] + s * u[1],
          t * u[0] * u[1] + s * u[2], t * u[1] * u[1] + c,        t * u[1] * u[2] - s * u[0],
          t * u[0] * u[2] - s * u[1], t * u[1] * u[2] + s * u[0], t * u[2] * u[2] + c};
}

inline M3 mul(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[at(i, j)] += a[at(i, k)] * b[at(k, j)];
  return c;
}

inline M3 transpose(const M3& a) {
  M3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[at(i, j)] = a[at(j, i)];
  return t;
}

inline M3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double w = n(rng), x = n(rng), y = n(rng), z = n(rng);
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len, x /= len, y /= len, z /= len;
  return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
          2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
          2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

// ------------------------------------------------------------------------
// Finite rotation groups by brute force: closure of generators, intersections
// by element matching, identification by order and rotation-order counts.

using Group = std::vector<M3>;

inline bool same(const M3& a, const M3& b, double tol = 1e-9) {
  for (int n = 0; n < 9; ++n)
    if (std::abs(a[n] - b[n]) > tol) return false;
  return true;
}

inline Group closure(const std::vector<M3>& gens) {
  Group g{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& s : gens) {
      const M3 p = mul(g[i], s);
      if (std::none_of(g.begin(), g.end(), [&](const M3& e) { return same(e, p); })) g.push_back(p);
    }
  return g;
}

inline Group conjugate(const Group& g, const M3& r) {
  Group out;
  for (const auto& e : g) out.push_back(mul(mul(r, e), transpose(r)));
  return out;
}

inline Group intersection(const Group& a, const Group& b) {
  Group out;
  for (const auto& e : a)
    if (std::any_of(b.begin(), b.end(), [&](const M3& f) { return same(e, f, 1e-7); })) out.push_back(e);
  return out;
}

inline int rotation_order(const M3& m) {
  const double c = std::clamp((m[0] + m[4] + m[8] - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(c);
  if (angle < 1e-9) return 1;
  return int(std::lround(2.0 * M_PI / angle));
}

// Class name of a finite rotation group from its order and the number of
// elements of each rotation order.
inline std::string identify(const Group& g) {
  std::map<int, int> count;
  int nmax = 1;
  for (const auto& e : g) {
    const int o = rotation_order(e);
    ++count[o];
    nmax = std::max(nmax, o);
  }
  const int n = int(g.size());
  if (n == 1) return "1";
  if (n == 60) return "I";
  if (n == 24 && count[4] > 0 && count[3] == 8) return "O";
  if (n == 12 && count[3] == 8) return "T";
  if (n == nmax) return "Z" + std::to_string(n);
  if (n == 2 * nmax) return "D" + std::to_string(nmax);
  // Order-4 dihedral group D2 has three two-fold axes.
  if (n == 4 && count[2] == 3) return "D2";
  return "?" + std::to_string(n);
}

inline std::array<double, 3> e(int i) {
  std::array<double, 3> v{0, 0, 0};
  v[std::size_t(i)] = 1;
  return v;
}

inline Group cyclic(int n) { return closure({axis_angle(e(2), 2 * M_PI / n)}); }
inline Group dihedral(int n) { return closure({axis_angle(e(2), 2 * M_PI / n), axis_angle(e(0), M_PI)}); }
inline Group tetrahedral() { return closure({axis_angle({1, 1, 1}, 2 * M_PI / 3), axis_angle(e(2), M_PI)}); }
inline Group octahedral() { return closure({axis_angle(e(2), M_PI / 2), axis_angle({1, 1, 1}, 2 * M_PI / 3)}); }
inline Group icosahedral() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  return closure({axis_angle({0, 1, phi}, 2 * M_PI / 5), axis_angle(e(2), M_PI)});
}

// Unit rotation axes of a group, one per line.
inline std::vector<std::array<double, 3>> axes(const Group& g) {
  std::vector<std::array<double, 3>> out;
  for (const auto& m : g) {
    if (rotation_order(m) == 1) continue;
    std::array<double, 3> a{m[at(2, 1)] - m[at(1, 2)], m[at(0, 2)] - m[at(2, 0)], m[at(1, 0)] - m[at(0, 1)]};
    double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (n < 1e-9) {
      // pi rotation: axis from the symmetric part (m + 1) / 2
      for (int c = 0; c < 3; ++c) {
        std::array<double, 3> col{(m[at(0, c)] + (c == 0)) / 2, (m[at(1, c)] + (c == 1)) / 2,
                                  (m[at(2, c)] + (c == 2)) / 2};
        const double cn = std::sqrt(col[0] * col[0] + col[1] * col[1] + col[2] * col[2]);
        if (cn > 0.5) {
          a = col;
          n = cn;
          break;
        }
      }
    }
    for (double& x : a) x /= n;
    const bool known = std::any_of(out.begin(), out.end(), [&](const auto& b) {
      return std::abs(std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) - 1) < 1e-9;
    });
    if (!known) out.push_back(a);
  }
  return out;
}

// One axis per orbit of the group acting on its own rotation axes.
inline std::vector<std::array<double, 3>> axis_orbit_representatives(const Group& g) {
  const auto all = axes(g);
  std::vector<std::array<double, 3>> reps;
  std::vector<bool> seen(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(all[i]);
    for (const auto& m : g) {
      const auto& a = all[i];
      const std::array<double, 3> ga{m[0] * a[0] + m[1] * a[1] + m[2] * a[2], m[3] * a[0] + m[4] * a[1] + m[5] * a[2],
                                     m[6] * a[0] + m[7] * a[1] + m[8] * a[2]};
      for (std::size_t j = 0; j < all.size(); ++j)
        if (std::abs(std::abs(ga[0] * all[j][0] + ga[1] * all[j][1] + ga[2] * all[j][2]) - 1) < 1e-9) seen[j] = true;
    }
  }
  return reps;
}

// Rotation taking unit vector u to unit vector v.
inline M3 align(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  const std::array<double, 3> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  const double s = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  const double d = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  if (s < 1e-12) {
    if (d > 0) return {1, 0, 0, 0, 1, 0, 0, 0, 1};
    const std::array<double, 3> p = std::abs(u[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    const std::array<double, 3> q{u[1] * p[2] - u[2] * p[1], u[2] * p[0] - u[0] * p[2], u[0] * p[1] - u[1] * p[0]};
    return axis_angle(q, M_PI);
  }
  return axis_angle(c, std::atan2(s, d));
}

// Classes of a ∩ g b g^T over relative orientations that align one or two
// rotation axes of b with axes of a, plus random orientations. An intersection
// with two or more axes is fixed by aligning two of them; one with a single
// axis is the common cyclic part of a generic twist about a shared axis.
inline std::set<std::string> brute_force_clips(const Group& a, const Group& b, std::uint64_t seed = 1) {
  std::set<std::string> out;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < 4; ++n) out.insert(identify(intersection(a, conjugate(b, random_rotation(rng)))));
  const auto axa = axes(a), axb = axes(b);
  std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
  for (const auto& va : axis_orbit_representatives(a))
    for (const auto& vb : axis_orbit_representatives(b)) {
      const M3 r0 = align(vb, va);
      // one shared axis, generic twist
      out.insert(identify(intersection(a, conjugate(b, mul(axis_angle(va, u(rng)), r0)))));
      // twists that bring a second axis of b onto a second axis of a
      for (const auto& wb : axb) {
        const auto w = [&] {
          const M3 m = r0;
          return std::array<double, 3>{m[0] * wb[0] + m[1] * wb[1] + m[2] * wb[2],
                                       m[3] * wb[0] + m[4] * wb[1] + m[5] * wb[2],
                                       m[6] * wb[0] + m[7] * wb[1] + m[8] * wb[2]};
        }();
        const double cw = w[0] * va[0] + w[1] * va[1] + w[2] * va[2];
        if (std::abs(std::abs(cw) - 1) < 1e-9) continue;
        for (const auto& wa : axa) {
          const double ca = wa[0] * va[0] + wa[1] * va[1] + wa[2] * va[2];
          for (double sign : {1.0, -1.0}) {
            if (std::abs(sign * ca - cw) > 1e-9) continue;
            // angle about va taking the projection of w to that of sign*wa
            std::array<double, 3> pw, pa;
            for (int c = 0; c < 3; ++c) pw[c] = w[c] - cw * va[c], pa[c] = sign * wa[c] - sign * ca * va[c];
            const std::array<double, 3> cr{pw[1] * pa[2] - pw[2] * pa[1], pw[2] * pa[0] - pw[0] * pa[2],
                                           pw[0] * pa[1] - pw[1] * pa[0]};
            const double sn = cr[0] * va[0] + cr[1] * va[1] + cr[2] * va[2];
            const double cs = pw[0] * pa[0] + pw[1] * pa[1] + pw[2] * pa[2];
            const M3 r = mul(axis_angle(va, std::atan2(sn, cs)), r0);
            out.insert(identify(intersection(a, conjugate(b, r))));
          }
        }
      }
    }
  return out;
}

// Elements of g lying in SO(2) (rotations about u) or, when `dihedral`, in
// O(2) (also pi rotations about axes orthogonal to u).
inline Group intersection_with_axial(const Group& g, const std::array<double, 3>& u, bool dihedral) {
  Group out;
  for (const auto& m : g) {
    const std::array<double, 3> mu{m[0] * u[0] + m[1] * u[1] + m[2] * u[2], m[3] * u[0] + m[4] * u[1] + m[5] * u[2],
                                   m[6] * u[0] + m[7] * u[1] + m[8] * u[2]};
    const double fix = std::abs(mu[0] - u[0]) + std::abs(mu[1] - u[1]) + std::abs(mu[2] - u[2]);
    const double flip = std::abs(mu[0] + u[0]) + std::abs(mu[1] + u[1]) + std::abs(mu[2] + u[2]);
    if (fix < 1e-9 || (dihedral && flip < 1e-9 && rotation_order(m) == 2)) out.push_back(m);
  }
  return out;
}

// Classes of SO(2) or O(2) intersected with a finite group, over axis
// directions: random, along each axis, orthogonal to each pair of axes and
// generic within the plane orthogonal to each axis.
inline std::set<std::string> brute_force_axial_clips(const Group& g, bool dihedral, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  auto unit = [](std::array<double, 3> v) {
    const double l = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v) x /= l;
    return v;
  };
  auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  std::vector<std::array<double, 3>> dirs;
  for (int k = 0; k < 3; ++k) dirs.push_back(unit({n(rng), n(rng), n(rng)}));
  const auto ax = axes(g);
  for (const auto& a : ax) {
    dirs.push_back(a);
    dirs.push_back(unit(cross(a, unit({n(rng), n(rng), n(rng)}))));
    for (const auto& b : ax) {
      const auto c = cross(a, b);
      if (std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) > 1e-6) dirs.push_back(unit(c));
    }
  }
  std::set<std::string> out;
  for (const auto& u : dirs) out.insert(identify(intersection_with_axial(g, u, dihedral)));
  return out;
}

// ------------------------------------------------------------------------
// Both explicit harmonic decompositions written as index sums.

struct Decomposition {
  double alpha = 0, beta = 0;
  M3 ha{}, hb{};
  T4 H{};
};

inline M3 delta() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

inline M3 deviator(M3 a) {
  const double t = (a[0] + a[4] + a[8]) / 3.0;
  a[0] -= t, a[4] -= t, a[8] -= t;
  return a;
}

// Deviatoric projector J_ijkl = (d_ik d_jl + d_il d_jk)/2 - d_ij d_kl / 3.
inline T4 deviatoric_projector() {
  return lin(1.0, bar(delta(), delta()), -1.0 / 3.0, dyad(delta(), delta()));
}

inline T4 contract(const T4& a, const T4& b) {
  T4 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) c[at(i, j, k, l)] += a[at(i, j, p, q)] * b[at(p, q, k, l)];
  return c;
}

inline double full_contraction(const T4& a, const T4& b) {
  double s = 0.0;
  for (int n = 0; n < 81; ++n) s += a[n] * b[n];
  return s;
}

inline double trace2(const T4& t) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += t[at(i, i, j, j)];
  return s;
}

inline T4 box(const M3& a, const M3& b) {
  return lin(6.0 / 7.0, lin(1.0, bar(a, b), 1.0, bar(b, a)), -4.0 / 7.0, lin(1.0, dyad(a, b), 1.0, dyad(b, a)));
}

inline T4 sym4(const M3& a, const M3& b) { return totally_symmetric(lin(0.5, dyad(a, b), 0.5, dyad(b, a))); }

inline Decomposition cghd(const T4& c) {
  Decomposition d;
  const T4 j = deviatoric_projector();
  const T4 cdd = contract(contract(j, c), j);
  d.alpha = full_contraction(cdd, j) / 5.0;
  d.beta = trace2(c) / 3.0;
  d.ha = deviator(tr13(cdd));
  M3 c1{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) c1[at(k, l)] += c[at(k, l, i, i)];
  d.hb = deviator(c1);
  d.H = lin(1.0, lin(1.0, cdd, -1.0, box(d.ha, delta())), -d.alpha, j);
  return d;
}

inline Decomposition swhd(const T4& c) {
  Decomposition d;
  const T4 cs = totally_symmetric(c);
  const T4 ca = lin(1.0, c, -1.0, cs);
  d.alpha = trace2(ca) / 4.0;
  d.beta = trace2(cs) / 5.0;
  M3 ta = tr12(ca), ts = tr12(cs);
  for (int n = 0; n < 9; ++n) {
    ta[n] = 3.0 * (ta[n] - 4.0 / 3.0 * d.alpha * delta()[n]);
    ts[n] = 6.0 / 7.0 * (ts[n] - 5.0 / 3.0 * d.beta * delta()[n]);
  }
  d.ha = ta;
  d.hb = ts;
  d.H = lin(1.0, lin(1.0, cs, -1.0, sym4(d.hb, delta())), -d.beta, sym4(delta(), delta()));
  return d;
}

}  // namespace oracle
