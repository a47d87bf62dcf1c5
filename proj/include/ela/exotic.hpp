#pragma once

/// \file
/// Catalog of geometric structures (generic and exotic), material-level
/// classification, normal forms, directional Young's modulus and seeded
/// sampling of tensors with a prescribed structure.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ela/clips.hpp"
#include "ela/covariants.hpp"
#include "ela/error.hpp"
#include "ela/harmonic.hpp"
#include "ela/tensor_core.hpp"

namespace ela {

struct ExoticCatalogEntry {
  StructureSignature signature;
  std::string label;          ///< e.g. "O(2)^g", "D3^e_5"
  bool generic = false;
  int index = 0;              ///< k of ^e_k, 0 for generic rows
  std::string material;       ///< "UTI", "IDTI", "IYTI" or empty
  std::optional<Scheme> material_scheme;
  bool material_on_compliance = false;

  const ClassLabel& overall() const { return signature.overall; }
};

namespace detail {

inline std::vector<ExoticCatalogEntry> build_catalog() {
  std::vector<ExoticCatalogEntry> out;
  const std::vector<ClassLabel> high{ClassLabel::SO3(), ClassLabel::octahedral(), ClassLabel::O2(),
                                     ClassLabel::D(4), ClassLabel::D(3)};
  for (const auto& g : high) {
    int k = 0;
    for (const auto& s : enumerate_structures(g)) {
      ExoticCatalogEntry e;
      e.signature = s;
      e.generic = k == 0;
      e.index = k;
      e.label = g.to_string() + (k == 0 ? std::string("^g") : "^e_" + std::to_string(k));
      ++k;
      out.push_back(e);
    }
  }
  for (const auto& g : {ClassLabel::D(2), ClassLabel::Z(2), ClassLabel::triclinic()}) {
    ExoticCatalogEntry e;
    e.signature = generic_structure(g);
    e.generic = true;
    e.label = g.to_string() + "^g";
    out.push_back(e);
  }
  for (auto& e : out) {
    if (e.label == "O(2)^e_2") {
      e.material = "UTI";
      e.material_scheme = Scheme::CGHD;
    } else if (e.label == "O(2)^e_5") {
      e.material = "IDTI";
      e.material_scheme = Scheme::CGHD;
    } else if (e.label == "O(2)^e_6") {
      e.material = "IYTI";
      e.material_scheme = Scheme::SWHD;
      e.material_on_compliance = true;
    }
  }
  return out;
}

}  // namespace detail

/// 26 entries: the generic rows of all eight classes and the 18 exotic rows
/// above orthotropy.
inline const std::vector<ExoticCatalogEntry>& catalog() {
  static const std::vector<ExoticCatalogEntry> c = detail::build_catalog();
  return c;
}

/// Lookup by label ("D4^e_3") or material name ("UTI").
inline const ExoticCatalogEntry& find_entry(const std::string& name) {
  std::string key;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
  for (const auto& e : catalog())
    if (e.label == key || (!e.material.empty() && e.material == key)) return e;
  throw ValidationError("no catalog entry named '" + name + "'");
}

inline const ExoticCatalogEntry* match_entry(const StructureSignature& s) {
  for (const auto& e : catalog())
    if (e.signature == s) return &e;
  return nullptr;
}

// ------------------------------------------------------------ constraints

/// How one covariant is restricted by a structure: forced to zero, or
/// averaged over a finite group (empty group means unconstrained).
struct CovariantConstraint {
  bool zero = false;
  std::vector<Mat3> group;
};

/// Constraints on (h_a, h_b, H), all expressed in one reference frame.
struct StructureConstraints {
  std::array<CovariantConstraint, 3> parts;
};

namespace detail {

/// Carries the cube diagonal (1,1,1) to e3 and the face diagonal (1,-1,0) to e1.
inline Mat3 diagonal_to_axis() {
  const double a = 1.0 / std::sqrt(2.0), b = 1.0 / std::sqrt(6.0), c = 1.0 / std::sqrt(3.0);
  Mat3 r;
  r(0, 0) = a, r(0, 1) = -a, r(0, 2) = 0;
  r(1, 0) = b, r(1, 1) = b, r(1, 2) = -2 * b;
  r(2, 0) = c, r(2, 1) = c, r(2, 2) = c;
  return r;
}

inline std::vector<Mat3> conjugated(const std::vector<Mat3>& elems, const Mat3& r) {
  std::vector<Mat3> out;
  for (const auto& g : elems) out.push_back(r * g * r.transpose());
  return out;
}

}  // namespace detail

inline StructureConstraints constraints_for(const ExoticCatalogEntry& entry) {
  const ClassLabel g = entry.overall();
  StructureConstraints c;
  const bool low = g == ClassLabel::D(2) || g == ClassLabel::Z(2) || g == ClassLabel::triclinic();
  for (std::size_t i = 0; i < 3; ++i) {
    const ClassLabel l = entry.signature.entries[i];
    CovariantConstraint& part = c.parts[i];
    if (l == ClassLabel::SO3()) {
      part.zero = true;
    } else if (low) {
      part.group = canonical_elements(g);
    } else if (l == ClassLabel::O2()) {
      part.group = canonical_elements(ClassLabel::D(12));
    } else if (l == ClassLabel::octahedral() && g == ClassLabel::D(3)) {
      part.group =
          detail::conjugated(canonical_elements(ClassLabel::octahedral()), detail::diagonal_to_axis());
    } else {
      part.group = canonical_elements(l);
    }
  }
  return c;
}

/// Group average g -> (1/|G|) sum g * h.
inline SymTensor2 group_average(const SymTensor2& h, const std::vector<Mat3>& group) {
  if (group.empty()) return h;
  Mat3 acc;
  for (const auto& g : group) acc += g * h.matrix() * g.transpose();
  return SymTensor2::from_matrix((1.0 / double(group.size())) * acc);
}

inline FourthOrderTensor group_average(const FourthOrderTensor& t, const std::vector<Mat3>& group) {
  if (group.empty()) return t;
  Mat6 acc;
  for (const auto& g : group) {
    const Mat6 q = Rotation::from_matrix(g, 1e-8).kelvin();
    acc += q * t.kelvin() * q.transpose();
  }
  return FourthOrderTensor((1.0 / double(group.size())) * acc);
}

/// Orthogonal projection of a triplet onto the constrained subspace.
inline HarmonicTriplet impose(const HarmonicTriplet& t, const StructureConstraints& c) {
  auto h2 = [](const H2Tensor& h, const CovariantConstraint& cc) {
    if (cc.zero) return H2Tensor();
    return H2Tensor::deviator_of(group_average(h.tensor(), cc.group));
  };
  H4Tensor h4;
  if (!c.parts[2].zero) h4 = H4Tensor::project(group_average(t.H().tensor(), c.parts[2].group));
  return {t.scheme(), t.alpha(), t.beta(), h2(t.ha(), c.parts[0]), h2(t.hb(), c.parts[1]), h4};
}

// ------------------------------------------------------------ normal forms

enum class NormalFormKind { TI, UTI, IDTI, IYTI, Cubic, Isotropic };

inline NormalFormKind parse_normal_form_kind(const std::string& text) {
  std::string u;
  for (char ch : text) u += char(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "TI") return NormalFormKind::TI;
  if (u == "UTI") return NormalFormKind::UTI;
  if (u == "IDTI") return NormalFormKind::IDTI;
  if (u == "IYTI" || u == "TIIY") return NormalFormKind::IYTI;
  if (u == "CUBIC") return NormalFormKind::Cubic;
  if (u == "ISOTROPIC" || u == "ISO") return NormalFormKind::Isotropic;
  throw ValidationError("unknown normal form '" + text +
                        "' (expected TI, UTI, IDTI, IYTI, cubic or isotropic)");
}

inline std::size_t normal_form_arity(NormalFormKind k) {
  switch (k) {
    case NormalFormKind::TI: return 5;
    case NormalFormKind::UTI: return 4;
    case NormalFormKind::IDTI:
    case NormalFormKind::IYTI:
    case NormalFormKind::Cubic: return 3;
    case NormalFormKind::Isotropic: return 2;
  }
  return 0;
}

namespace detail {

/// Transversely isotropic Kelvin matrix about e3; `shear` is the (4,4) entry 2 C1313.
inline Mat6 ti_kelvin(double c1111, double c1122, double c1133, double c3333, double shear) {
  Mat6 k;
  k(0, 0) = k(1, 1) = c1111;
  k(0, 1) = k(1, 0) = c1122;
  k(0, 2) = k(2, 0) = k(1, 2) = k(2, 1) = c1133;
  k(2, 2) = c3333;
  k(3, 3) = k(4, 4) = shear;
  k(5, 5) = c1111 - c1122;
  return k;
}

}  // namespace detail

/// Parameters by kind:
///   TI (C1111, C1122, C1133, C3333, 2 C1313)
///   UTI (C1111, C1122, C1133, 2 C1313), C3333 = C1111 + C1122 - C1133
///   IDTI (C1111, C1122, C1133), C3333 = C1111 - 2 C1122 + 2 C1133,
///        2 C1313 = C1111 - C1122
///   IYTI (S1111, S1122, S1133), S3333 = S1111, 2 S1313 = S1111 - S1133
///   cubic (C1111, C1122, C2323)
///   isotropic (C1111, C1122)
inline ElasticityTensor normal_form(NormalFormKind kind, const std::vector<double>& p) {
  if (p.size() != normal_form_arity(kind))
    throw ValidationError("normal form expects " + std::to_string(normal_form_arity(kind)) +
                          " parameters, got " + std::to_string(p.size()));
  Mat6 k;
  switch (kind) {
    case NormalFormKind::TI: k = detail::ti_kelvin(p[0], p[1], p[2], p[3], p[4]); break;
    case NormalFormKind::UTI:
      k = detail::ti_kelvin(p[0], p[1], p[2], p[0] + p[1] - p[2], p[3]);
      break;
    case NormalFormKind::IDTI:
      k = detail::ti_kelvin(p[0], p[1], p[2], p[0] - 2.0 * p[1] + 2.0 * p[2], p[0] - p[1]);
      break;
    case NormalFormKind::IYTI:
      k = detail::ti_kelvin(p[0], p[1], p[2], p[0], p[0] - p[2]);
      break;
    case NormalFormKind::Cubic:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k(i, j) = i == j ? p[0] : p[1];
      k(3, 3) = k(4, 4) = k(5, 5) = 2.0 * p[2];
      break;
    case NormalFormKind::Isotropic:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k(i, j) = i == j ? p[0] : p[1];
      k(3, 3) = k(4, 4) = k(5, 5) = p[0] - p[1];
      break;
  }
  return ElasticityTensor::from_kelvin(k);
}

// ---------------------------------------------------------- classification

/// Decomposition of one tensor under one scheme, with relative residuals.
struct SchemeReport {
  Scheme scheme = Scheme::CGHD;
  StructureSignature structure;
  std::string entry;      ///< matched catalog label, empty when none
  double alpha = 0, beta = 0;
  double ha_residual = 0;  ///< ||h_a|| / ||C||
  double hb_residual = 0;  ///< ||h_b|| / ||C||
  double H_residual = 0;   ///< ||H|| / ||C||
  double d2_dev_ratio = 0; ///< ||dev d2|| / ||d2||, 0 when H = 0
};

struct MaterialReport {
  SchemeReport cghd;
  SchemeReport swhd;
  std::optional<SchemeReport> compliance_swhd;
  std::string entry;                   ///< primary match (CGHD)
  std::vector<std::string> materials;  ///< named exotic materials detected
  bool in_scope = true;                ///< overall class above orthotropy
  std::string note;
  Vec6 eigenvalues{};
  bool positive_definite = false;
};

inline SchemeReport scheme_report(const ElasticityTensor& c, Scheme scheme, double tol) {
  const HarmonicTriplet t = decompose(c, scheme);
  const double scale = c.norm();
  SchemeReport r;
  r.scheme = scheme;
  r.structure = geometric_structure(t, tol, scale).signature();
  if (const auto* e = match_entry(r.structure)) r.entry = e->label;
  r.alpha = t.alpha();
  r.beta = t.beta();
  const double inv = scale > 0 ? 1.0 / scale : 0.0;
  r.ha_residual = t.ha().norm() * inv;
  r.hb_residual = t.hb().norm() * inv;
  r.H_residual = t.H().norm() * inv;
  const D2Covariant d = d2_covariant(t.H());
  r.d2_dev_ratio = d.d2.norm() > 0 ? d.d2_dev.norm() / d.d2.norm() : 0.0;
  return r;
}

inline MaterialReport classify_material(const ElasticityTensor& c, double tol = kSymTol) {
  MaterialReport m;
  m.cghd = scheme_report(c, Scheme::CGHD, tol);
  m.swhd = scheme_report(c, Scheme::SWHD, tol);
  m.eigenvalues = spectrum(c);
  m.positive_definite = is_positive_definite(c);
  m.entry = m.cghd.entry;
  try {
    m.compliance_swhd = scheme_report(invert(c), Scheme::SWHD, tol);
  } catch (const NumericalError&) {
    m.compliance_swhd.reset();
  }
  if (m.cghd.entry == "O(2)^e_2") m.materials.push_back("UTI");
  if (m.cghd.entry == "O(2)^e_5") m.materials.push_back("IDTI");
  if (m.compliance_swhd && m.compliance_swhd->entry == "O(2)^e_6") m.materials.push_back("IYTI");
  const ClassLabel g = m.cghd.structure.overall;
  m.in_scope = !is_subclass(g, ClassLabel::D(2));
  if (!m.in_scope) {
    m.note = "at or below orthotropic (out of enumeration scope)";
  } else if (m.entry.empty()) {
    m.note = "structure not found in the catalog";
  }
  return m;
}

/// Relative residual of a material's vanishing condition on `t`.
/// UTI: ||h_b|| (CGHD); IDTI: max(||h_a||, ||H||) (CGHD); IYTI: max(||h_b||,
/// ||H||) (SWHD, with `t` read as the tensor the condition applies to).
inline double material_residual(const ElasticityTensor& t, const std::string& material) {
  const double s = t.norm() > 0 ? t.norm() : 1.0;
  if (material == "UTI") return decompose(t, Scheme::CGHD).hb().norm() / s;
  if (material == "IDTI") {
    const auto d = decompose(t, Scheme::CGHD);
    return std::max(d.ha().norm(), d.H().norm()) / s;
  }
  if (material == "IYTI") {
    const auto d = decompose(t, Scheme::SWHD);
    return std::max(d.hb().norm(), d.H().norm()) / s;
  }
  throw ValidationError("unknown material '" + material + "' (expected UTI, IDTI or IYTI)");
}

struct InversionReport {
  std::string label;
  bool input_matches = false;
  bool inverse_matches = false;
  double input_residual = 0;    ///< material labels only
  double inverse_residual = 0;  ///< material labels only
  std::string inverse_entry;    ///< CGHD catalog match of the inverse
  bool stable() const { return input_matches && inverse_matches; }
};

/// Whether the structure named by `label` survives inversion. `label` is a
/// material name (condition tested at `tol`) or a catalog label.
inline InversionReport inversion_stability(const ElasticityTensor& c, const std::string& label,
                                           double tol = 1e-6) {
  InversionReport r;
  r.label = label;
  const ElasticityTensor inv = invert(c);
  r.inverse_entry = classify_material(inv).entry;
  if (label == "UTI" || label == "IDTI" || label == "IYTI") {
    r.input_residual = material_residual(c, label);
    r.inverse_residual = material_residual(inv, label);
    r.input_matches = r.input_residual < tol;
    r.inverse_matches = r.inverse_residual < tol;
  } else {
    const std::string want = find_entry(label).label;
    r.input_matches = classify_material(c).entry == want;
    r.inverse_matches = r.inverse_entry == want;
  }
  return r;
}

// ------------------------------------------------------------ Young modulus

/// E(n) = 1 / (S :: n(x)n(x)n(x)n) for a compliance S.
inline double young_modulus(const ElasticityTensor& s, const Vec3& n) {
  if (std::abs(norm(n) - 1.0) > kNumTol) throw ValidationError("direction is not a unit vector");
  const Vec6 nn = SymTensor2::outer(n).kelvin();
  const double q = dot(nn, s.kelvin() * nn);
  if (!(q > 0.0)) throw NumericalError("compliance quartic form is not positive along direction");
  return 1.0 / q;
}

struct YoungSample {
  double theta, phi, E;
};

/// theta_i = pi i / (n_theta - 1), phi_j = 2 pi j / n_phi, theta outermost.
inline std::vector<YoungSample> young_surface(const ElasticityTensor& s, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw ValidationError("grid sizes must be at least 2");
  std::vector<YoungSample> out;
  out.reserve(std::size_t(n_theta) * std::size_t(n_phi));
  for (int i = 0; i < n_theta; ++i) {
    const double th = kPi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double ph = 2.0 * kPi * j / n_phi;
      const Vec3 n{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
      out.push_back({th, ph, young_modulus(s, (1.0 / norm(n)) * n)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- sampling

/// Uniformly distributed rotation.
inline Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 4> q;
  double len = 0.0;
  do {
    for (double& x : q) x = gauss(rng);
    len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  } while (len < 1e-6);
  return Rotation::from_quaternion(q);
}

/// Harmonic triplet with every coordinate uniform in [-1, 1].
inline HarmonicTriplet random_triplet(std::mt19937_64& rng, Scheme scheme) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto sym2 = [&] {
    return SymTensor2::from_components(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
  };
  const double alpha = u(rng), beta = u(rng);
  const H2Tensor ha = H2Tensor::deviator_of(sym2());
  const H2Tensor hb = H2Tensor::deviator_of(sym2());
  Mat6 k;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) k(i, j) = k(j, i) = u(rng);
  return {scheme, alpha, beta, ha, hb, H4Tensor::project(FourthOrderTensor(k))};
}

/// Random tensor realizing `entry`: C = 3 Id + reconstruct(t) with t a random
/// triplet projected onto the entry's constraints, then randomly rotated.
/// Draws are rejected until positive definite.
inline ElasticityTensor sample_random(const ExoticCatalogEntry& entry, std::uint64_t seed,
                                      Scheme scheme = Scheme::CGHD) {
  std::mt19937_64 rng(seed);
  const StructureConstraints c = constraints_for(entry);
  const ElasticityTensor base = 3.0 * ElasticityTensor::identity();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const HarmonicTriplet t = impose(random_triplet(rng, scheme), c);
    const Rotation g = random_rotation(rng);
    const ElasticityTensor out = rotate(base + reconstruct(t), g);
    if (is_positive_definite(out)) return out;
  }
  throw NumericalError("no positive-definite sample for " + entry.label + " within 1000 draws");
}

}  // namespace ela
