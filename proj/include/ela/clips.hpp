#pragma once

/// \file
/// Clips products of SO(3) symmetry classes, symmetry classes of direct sums
/// of harmonic spaces, and the enumeration of geometric structures of
/// elasticity tensors above orthotropy.

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ela/class_label.hpp"
#include "ela/error.hpp"

namespace ela {

/// Sorted, duplicate-free set of class labels.
class ClassSet {
 public:
  ClassSet() = default;
  ClassSet(std::initializer_list<ClassLabel> labels) {
    for (const auto& l : labels) insert(l);
  }

  void insert(const ClassLabel& l) {
    auto it = std::lower_bound(items_.begin(), items_.end(), l);
    if (it == items_.end() || *it != l) items_.insert(it, l);
  }
  void insert(const ClassSet& other) {
    for (const auto& l : other) insert(l);
  }

  bool contains(const ClassLabel& l) const {
    return std::binary_search(items_.begin(), items_.end(), l);
  }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::vector<ClassLabel>::const_iterator begin() const { return items_.begin(); }
  std::vector<ClassLabel>::const_iterator end() const { return items_.end(); }
  const std::vector<ClassLabel>& items() const { return items_; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ", ";
      s += items_[i].to_string();
    }
    return s + "}";
  }

  friend bool operator==(const ClassSet&, const ClassSet&) = default;

 private:
  std::vector<ClassLabel> items_;
};

namespace detail {

inline int clips_rank(ClassKind k) {
  switch (k) {
    case ClassKind::Zn: return 0;
    case ClassKind::Dn: return 1;
    case ClassKind::T: return 2;
    case ClassKind::O: return 3;
    case ClassKind::I: return 4;
    case ClassKind::SO2: return 5;
    case ClassKind::O2: return 6;
    default: return -1;
  }
}

}  // namespace detail

/// All classes of intersections of a group of class `a` with a group of
/// class `b`, over all relative orientations.
inline ClassSet clips(ClassLabel a, ClassLabel b) {
  using K = ClassKind;
  const ClassLabel one = ClassLabel::triclinic();
  if (a.kind() == K::Triclinic || b.kind() == K::Triclinic) return {one};
  if (a.kind() == K::SO3) return {b};
  if (b.kind() == K::SO3) return {a};
  if (detail::clips_rank(a.kind()) < detail::clips_rank(b.kind())) std::swap(a, b);
  // a indexes the row (parameter m), b the column (parameter n).
  const int m = a.n(), n = b.n();
  const int d = std::gcd(m, n);
  const int d2 = std::gcd(n, 2), d3 = std::gcd(n, 3), d5 = std::gcd(n, 5);
  const int dz = (m % 2 == 0 && n % 2 == 0) ? 2 : 1;
  const int d4 = (n % 4 == 0) ? 4 : 1;
  auto Z = [](int k) { return ClassLabel::Z(k); };
  auto D = [](int k) { return ClassLabel::D(k); };
  const ClassLabel T = ClassLabel::tetrahedral(), O = ClassLabel::octahedral(),
                   I = ClassLabel::icosahedral();
  const K R = a.kind(), C = b.kind();
  if (R == K::Zn && C == K::Zn) return {one, Z(d)};
  if (R == K::Dn && C == K::Zn) return {one, Z(d), Z(d2)};
  if (R == K::Dn && C == K::Dn) return {one, Z(2), Z(d), D(dz), D(d)};
  if (R == K::T && C == K::Zn) return {one, Z(d2), Z(d3)};
  if (R == K::T && C == K::Dn) return {one, Z(2), Z(d3), D(d2)};
  if (R == K::T && C == K::T) return {one, Z(2), Z(3), T};
  if (R == K::O && C == K::Zn) return {one, Z(d2), Z(d3), Z(d4)};
  if (R == K::O && C == K::Dn) return {one, Z(2), Z(d3), Z(d4), D(d2), D(d3), D(d4)};
  if (R == K::O && C == K::T) return {one, Z(2), Z(3), D(2), T};
  if (R == K::O && C == K::O) return {one, Z(2), Z(3), Z(4), D(2), D(3), D(4), O};
  if (R == K::I && C == K::Zn) return {one, Z(d2), Z(d3), Z(d5)};
  if (R == K::I && C == K::Dn) return {one, Z(2), Z(d3), Z(d5), D(d2), D(d3), D(d5)};
  if (R == K::I && C == K::T) return {one, Z(2), Z(3), T};
  if (R == K::I && C == K::O) return {one, Z(2), Z(3), D(2), D(3), T};
  if (R == K::I && C == K::I) return {one, Z(2), Z(3), Z(5), D(3), D(5), T, I};
  if (R == K::SO2 && C == K::Zn) return {one, Z(n)};
  if (R == K::SO2 && C == K::Dn) return {one, Z(2), Z(n)};
  if (R == K::SO2 && C == K::T) return {one, Z(2), Z(3)};
  if (R == K::SO2 && C == K::O) return {one, Z(2), Z(3), Z(4)};
  if (R == K::SO2 && C == K::I) return {one, Z(2), Z(3), Z(5)};
  if (R == K::SO2 && C == K::SO2) return {one, ClassLabel::SO2()};
  if (R == K::O2 && C == K::Zn) return {one, Z(d2), Z(n)};
  if (R == K::O2 && C == K::Dn) return {one, Z(2), D(d2), D(n)};
  if (R == K::O2 && C == K::T) return {one, Z(2), Z(3), D(2)};
  if (R == K::O2 && C == K::O) return {one, Z(2), D(2), D(3), D(4)};
  if (R == K::O2 && C == K::I) return {one, Z(2), D(2), D(3), D(5)};
  if (R == K::O2 && C == K::SO2) return {one, Z(2), ClassLabel::SO2()};
  if (R == K::O2 && C == K::O2) return {Z(2), D(2), ClassLabel::O2()};
  throw ValidationError("clips undefined for " + a.to_string() + " and " + b.to_string());
}

/// Union of clips over all pairs drawn from two families.
inline ClassSet clips(const ClassSet& f1, const ClassSet& f2) {
  ClassSet out;
  for (const auto& a : f1)
    for (const auto& b : f2) out.insert(clips(a, b));
  return out;
}

/// The eight symmetry classes of elasticity tensors.
inline const ClassSet& elasticity_classes() {
  static const ClassSet s{ClassLabel::triclinic(), ClassLabel::Z(2),  ClassLabel::D(2),
                          ClassLabel::D(3),        ClassLabel::D(4),  ClassLabel::O2(),
                          ClassLabel::octahedral(), ClassLabel::SO3()};
  return s;
}

/// Covering relations of the elasticity classes (lower, upper).
inline const std::vector<std::pair<ClassLabel, ClassLabel>>& elasticity_hasse_edges() {
  static const std::vector<std::pair<ClassLabel, ClassLabel>> e{
      {ClassLabel::triclinic(), ClassLabel::Z(2)}, {ClassLabel::Z(2), ClassLabel::D(2)},
      {ClassLabel::Z(2), ClassLabel::D(3)},        {ClassLabel::D(2), ClassLabel::D(4)},
      {ClassLabel::D(3), ClassLabel::O2()},        {ClassLabel::D(3), ClassLabel::octahedral()},
      {ClassLabel::D(4), ClassLabel::O2()},        {ClassLabel::D(4), ClassLabel::octahedral()},
      {ClassLabel::O2(), ClassLabel::SO3()},       {ClassLabel::octahedral(), ClassLabel::SO3()}};
  return e;
}

/// Clips restricted to members of `f1`, `f2` strictly above `g`.
inline ClassSet restricted_clips(const ClassSet& f1, const ClassSet& f2, const ClassLabel& g) {
  if (!elasticity_classes().contains(g))
    throw ValidationError("class " + g.to_string() + " is outside the elasticity poset");
  ClassSet out;
  for (const auto& a : f1) {
    if (!is_strict_subclass(g, a)) continue;
    for (const auto& b : f2)
      if (is_strict_subclass(g, b)) out.insert(clips(a, b));
  }
  return out;
}

/// Symmetry classes of a single harmonic space of the given order.
inline ClassSet harmonic_space_classes(int order) {
  switch (order) {
    case 0: return {ClassLabel::SO3()};
    case 2: return {ClassLabel::D(2), ClassLabel::O2(), ClassLabel::SO3()};
    case 4: return elasticity_classes();
    default:
      throw ValidationError("unsupported harmonic order " + std::to_string(order) +
                            " (supported: 0, 2, 4)");
  }
}

struct HarmonicSpace {
  int order;
  int multiplicity = 1;
};

/// Classes of a direct sum of harmonic spaces, by iterated clips.
inline ClassSet derive_space_classes(const std::vector<HarmonicSpace>& spaces) {
  ClassSet out{ClassLabel::SO3()};
  for (const auto& s : spaces) {
    if (s.multiplicity < 0) throw ValidationError("negative multiplicity");
    const ClassSet c = harmonic_space_classes(s.order);
    for (int k = 0; k < s.multiplicity; ++k) out = clips(out, c);
  }
  return out;
}

/// Classes of (h_a, h_b, H), then of (h_a, h_b), (h_a, H), (h_b, H), plus
/// the class of the whole triplet.
struct StructureSignature {
  std::array<ClassLabel, 6> entries{};
  ClassLabel overall;

  const ClassLabel& ha() const { return entries[0]; }
  const ClassLabel& hb() const { return entries[1]; }
  const ClassLabel& H() const { return entries[2]; }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < 6; ++i) {
      if (i) s += ", ";
      s += entries[i].to_string();
    }
    return s + "; " + overall.to_string() + ")";
  }

  friend bool operator==(const StructureSignature&, const StructureSignature&) = default;
};

/// Generic structure of each elasticity class.
inline StructureSignature generic_structure(const ClassLabel& g) {
  const ClassLabel so3 = ClassLabel::SO3(), o2 = ClassLabel::O2(), d2 = ClassLabel::D(2);
  StructureSignature s;
  s.overall = g;
  switch (g.kind()) {
    case ClassKind::SO3: s.entries = {so3, so3, so3, so3, so3, so3}; break;
    case ClassKind::O: s.entries = {so3, so3, g, so3, g, g}; break;
    case ClassKind::O2: s.entries = {o2, o2, o2, o2, o2, o2}; break;
    case ClassKind::Dn:
      if (g.n() == 2) {
        s.entries = {d2, d2, d2, d2, d2, d2};
      } else if (g.n() == 3 || g.n() == 4) {
        s.entries = {o2, o2, g, o2, g, g};
      } else {
        throw ValidationError("not an elasticity class: " + g.to_string());
      }
      break;
    case ClassKind::Zn:
      if (g.n() != 2) throw ValidationError("not an elasticity class: " + g.to_string());
      s.entries = {d2, d2, g, g, g, g};
      break;
    case ClassKind::Triclinic: s.entries = {d2, d2, g, g, g, g}; break;
    default: throw ValidationError("not an elasticity class: " + g.to_string());
  }
  return s;
}

/// Bit mask of singleton entries that differ from the generic structure
/// (bit 2: h_a, bit 1: h_b, bit 0: H).
inline int degeneration_mask(const StructureSignature& s) {
  const StructureSignature g = generic_structure(s.overall);
  return (s.entries[0] != g.entries[0] ? 4 : 0) | (s.entries[1] != g.entries[1] ? 2 : 0) |
         (s.entries[2] != g.entries[2] ? 1 : 0);
}

/// All geometric structures with overall class `g` (one of D3, D4, O(2), O,
/// SO(3)). The generic structure comes first, then single degenerations
/// (h_a, h_b, H) and double degenerations ((h_a,h_b), (h_a,H), (h_b,H)).
inline std::vector<StructureSignature> enumerate_structures(const ClassLabel& g) {
  const bool supported = g == ClassLabel::D(3) || g == ClassLabel::D(4) || g == ClassLabel::O2() ||
                         g == ClassLabel::octahedral() || g == ClassLabel::SO3();
  if (!supported)
    throw ValidationError("structure enumeration is only available above D2 (got " +
                          g.to_string() + ")");
  auto forced_pair = [&g](const ClassLabel& a, const ClassLabel& b, ClassLabel& out) {
    int count = 0;
    for (const auto& p : clips(a, b))
      if (is_subclass(g, p)) {
        out = p;
        ++count;
      }
    return count == 1;
  };
  std::vector<StructureSignature> rows;
  const ClassSet h2 = harmonic_space_classes(2), h4 = harmonic_space_classes(4);
  for (const auto& sa : h2)
    for (const auto& sb : h2)
      for (const auto& sh : h4) {
        if (!is_subclass(g, sa) || !is_subclass(g, sb) || !is_subclass(g, sh)) continue;
        StructureSignature s;
        s.overall = g;
        s.entries[0] = sa;
        s.entries[1] = sb;
        s.entries[2] = sh;
        if (!forced_pair(sa, sb, s.entries[3]) || !forced_pair(sa, sh, s.entries[4]) ||
            !forced_pair(sb, sh, s.entries[5]))
          continue;
        if (!clips(s.entries[3], sh).contains(g)) continue;
        rows.push_back(s);
      }
  auto key = [](const StructureSignature& s) {
    const int m = degeneration_mask(s);
    return std::pair<int, int>(std::popcount(unsigned(m)), -m);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return rows;
}

}  // namespace ela
