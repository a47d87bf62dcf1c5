#pragma once

/// \file
/// Explicit harmonic decompositions of elasticity tensors.
///
/// Both schemes write C through two scalars (alpha, beta), two deviators
/// (h_a, h_b) and a harmonic fourth-order part H:
///
///   CGHD: C = alpha J + beta K + h_a [x] 1 + (h_b (x) 1 + 1 (x) h_b)/3 + H
///   SWHD: C = alpha 1 (x)_(2,2) 1 + beta 1 (x)_(4) 1 + h_a (x)_(2,2) 1
///             + h_b (x)_(4) 1 + H
///
/// The CGHD follows the deviatoric/spherical blocks of stress-strain space,
/// the SWHD the totally symmetric / remainder split of C. H is the same in
/// both.

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "ela/error.hpp"
#include "ela/tensor_core.hpp"

namespace ela {

enum class Scheme { CGHD, SWHD };

inline std::string to_string(Scheme s) { return s == Scheme::CGHD ? "cghd" : "swhd"; }

inline Scheme parse_scheme(const std::string& text) {
  std::string t;
  for (char c : text) t += char(std::tolower(static_cast<unsigned char>(c)));
  if (t == "cghd") return Scheme::CGHD;
  if (t == "swhd") return Scheme::SWHD;
  throw ValidationError("unknown decomposition scheme '" + text + "' (expected cghd or swhd)");
}

/// Totally symmetric part: T^s_ijkl = (T_ijkl + T_ikjl + T_iljk) / 3.
inline FourthOrderTensor totally_symmetric_part(const FourthOrderTensor& t) {
  const Array4 a = t.to_array();
  Array4 s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s[idx4(i, j, k, l)] =
              (a[idx4(i, j, k, l)] + a[idx4(i, k, j, l)] + a[idx4(i, l, j, k)]) / 3.0;
  return FourthOrderTensor::from_array(s);
}

/// Harmonic (totally symmetric, traceless) part of a fourth-order tensor.
inline FourthOrderTensor harmonic_part(const FourthOrderTensor& t) {
  const FourthOrderTensor s = totally_symmetric_part(t);
  const SymTensor2 one = SymTensor2::identity();
  const double beta = full_trace(s) / 5.0;
  const SymTensor2 hb = (6.0 / 7.0) * (tr12(s) - (5.0 / 3.0) * beta * one);
  FourthOrderTensor h = s - sym_product(hb, one) - beta * sym_product(one, one);
  h = FourthOrderTensor(h.kelvin().symmetrized());
  return h;
}

/// Traceless symmetric second-order tensor.
class H2Tensor {
 public:
  H2Tensor() = default;

  /// Rejects a trace above `tol * max(||t||, scale)`; stores the exact deviator.
  static H2Tensor from(const SymTensor2& t, double scale = 0.0, double tol = kNumTol) {
    const double ref = std::max(t.norm(), scale);
    if (std::abs(t.trace()) > tol * ref)
      throw ValidationError("second-order tensor is not traceless (trace " +
                            std::to_string(t.trace()) + ")");
    H2Tensor h;
    h.t_ = t.deviator();
    return h;
  }

  static H2Tensor deviator_of(const SymTensor2& t) {
    H2Tensor h;
    h.t_ = t.deviator();
    return h;
  }

  const SymTensor2& tensor() const { return t_; }
  operator const SymTensor2&() const { return t_; }
  double norm() const { return t_.norm(); }
  double operator()(int i, int j) const { return t_(i, j); }

  H2Tensor rotated(const Rotation& g) const {
    H2Tensor h;
    h.t_ = t_.rotated(g);
    return h;
  }

 private:
  SymTensor2 t_;
};

/// Totally symmetric traceless fourth-order tensor (9 degrees of freedom).
class H4Tensor {
 public:
  H4Tensor() = default;

  /// Projects onto the harmonic subspace; a removed part larger than
  /// `tol * max(||t||, scale)` is rejected.
  static H4Tensor from(const FourthOrderTensor& t, double scale = 0.0, double tol = 1e-12) {
    const FourthOrderTensor h = harmonic_part(t);
    const double dev = (t - h).norm();
    if (dev > tol * std::max(t.norm(), scale))
      throw ValidationError("fourth-order tensor is not harmonic (deviation " +
                            std::to_string(dev) + ")");
    H4Tensor r;
    r.t_ = h;
    return r;
  }

  static H4Tensor project(const FourthOrderTensor& t) {
    H4Tensor r;
    r.t_ = harmonic_part(t);
    return r;
  }

  const FourthOrderTensor& tensor() const { return t_; }
  operator const FourthOrderTensor&() const { return t_; }
  const Mat6& kelvin() const { return t_.kelvin(); }
  double norm() const { return t_.norm(); }

  H4Tensor rotated(const Rotation& g) const {
    H4Tensor r;
    const Mat6 q = g.kelvin();
    r.t_ = FourthOrderTensor((q * t_.kelvin() * q.transpose()).symmetrized());
    return r;
  }

 private:
  FourthOrderTensor t_;
};

/// Decomposition record (alpha, beta, h_a, h_b, H) tagged with its scheme.
class HarmonicTriplet {
 public:
  HarmonicTriplet(Scheme scheme, double alpha, double beta, H2Tensor ha, H2Tensor hb, H4Tensor h)
      : scheme_(scheme), alpha_(alpha), beta_(beta), ha_(ha), hb_(hb), h_(h) {}

  Scheme scheme() const { return scheme_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const H2Tensor& ha() const { return ha_; }
  const H2Tensor& hb() const { return hb_; }
  const H4Tensor& H() const { return h_; }

 private:
  Scheme scheme_;
  double alpha_;
  double beta_;
  H2Tensor ha_;
  H2Tensor hb_;
  H4Tensor h_;
};

struct SymAntiSplit {
  ElasticityTensor sym;
  ElasticityTensor anti;
};

/// C = C^s + C^a with C^s totally symmetric.
inline SymAntiSplit split_sym_anti(const ElasticityTensor& c) {
  const FourthOrderTensor s = totally_symmetric_part(c);
  SymAntiSplit r;
  r.sym = ElasticityTensor::from_kelvin(s.kelvin().symmetrized());
  r.anti = c - r.sym;
  return r;
}

inline HarmonicTriplet decompose(const ElasticityTensor& c, Scheme scheme) {
  const SymTensor2 one = SymTensor2::identity();
  const double scale = c.norm();
  if (scheme == Scheme::CGHD) {
    const auto p = isotropic_projectors();
    const FourthOrderTensor cdd = double_dot(double_dot(p.J, c), p.J);
    const double alpha = quad_dot(cdd, p.J) / 5.0;
    const double beta = bilinear(one, c, one) / 3.0;
    const H2Tensor ha = H2Tensor::deviator_of(tr13(cdd));
    const H2Tensor hb = H2Tensor::deviator_of(apply(p.J, apply(c, one)));
    const FourthOrderTensor h = cdd - box_product(ha, one) - alpha * p.J;
    return {scheme, alpha, beta, ha, hb, H4Tensor::from(h, scale)};
  }
  const SymAntiSplit sa = split_sym_anti(c);
  const double alpha = full_trace(sa.anti) / 4.0;
  const double beta = full_trace(sa.sym) / 5.0;
  const H2Tensor ha = H2Tensor::deviator_of(3.0 * (tr12(sa.anti) - (4.0 / 3.0) * alpha * one));
  const H2Tensor hb =
      H2Tensor::deviator_of((6.0 / 7.0) * (tr12(sa.sym) - (5.0 / 3.0) * beta * one));
  const FourthOrderTensor h =
      sa.sym.general() - sym_product(hb, one) - beta * sym_product(one, one);
  return {scheme, alpha, beta, ha, hb, H4Tensor::from(h, scale)};
}

inline ElasticityTensor reconstruct(const HarmonicTriplet& t) {
  const SymTensor2 one = SymTensor2::identity();
  FourthOrderTensor c;
  if (t.scheme() == Scheme::CGHD) {
    const auto p = isotropic_projectors();
    c = t.alpha() * p.J + t.beta() * p.K + box_product(t.ha(), one) +
        (1.0 / 3.0) * (dyad(t.hb(), one) + dyad(one, t.hb())) + t.H().tensor();
  } else {
    c = t.alpha() * anti_product(one, one) + t.beta() * sym_product(one, one) +
        anti_product(t.ha(), one) + sym_product(t.hb(), one) + t.H().tensor();
  }
  return ElasticityTensor::from_kelvin(c.kelvin().symmetrized());
}

/// Re-expresses a triplet in another scheme.
inline HarmonicTriplet convert(const HarmonicTriplet& t, Scheme target) {
  return decompose(reconstruct(t), target);
}

inline HarmonicTriplet rotate(const HarmonicTriplet& t, const Rotation& g) {
  return {t.scheme(), t.alpha(), t.beta(), t.ha().rotated(g), t.hb().rotated(g),
          t.H().rotated(g)};
}

}  // namespace ela
