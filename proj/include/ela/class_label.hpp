#pragma once

/// \file
/// Conjugacy classes of closed subgroups of SO(3) and their partial order.

#include <cctype>
#include <compare>
#include <string>

#include "ela/error.hpp"

namespace ela {

enum class ClassKind { Triclinic, Zn, Dn, T, O, I, SO2, O2, SO3 };

/// Symmetry class label; `n` is meaningful only for Zn and Dn (n >= 2).
class ClassLabel {
 public:
  constexpr ClassLabel() = default;

  static constexpr ClassLabel triclinic() { return ClassLabel(ClassKind::Triclinic, 0); }
  /// Z1 collapses to the triclinic class.
  static ClassLabel Z(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    return n == 1 ? triclinic() : ClassLabel(ClassKind::Zn, n);
  }
  /// D1 collapses to Z2.
  static ClassLabel D(int n) {
    if (n < 1) throw ValidationError("dihedral group order must be positive");
    return n == 1 ? ClassLabel(ClassKind::Zn, 2) : ClassLabel(ClassKind::Dn, n);
  }
  static constexpr ClassLabel tetrahedral() { return ClassLabel(ClassKind::T, 0); }
  static constexpr ClassLabel octahedral() { return ClassLabel(ClassKind::O, 0); }
  static constexpr ClassLabel icosahedral() { return ClassLabel(ClassKind::I, 0); }
  static constexpr ClassLabel SO2() { return ClassLabel(ClassKind::SO2, 0); }
  static constexpr ClassLabel O2() { return ClassLabel(ClassKind::O2, 0); }
  static constexpr ClassLabel SO3() { return ClassLabel(ClassKind::SO3, 0); }

  constexpr ClassKind kind() const { return kind_; }
  constexpr int n() const { return n_; }

  constexpr bool is_finite() const {
    return kind_ != ClassKind::SO2 && kind_ != ClassKind::O2 && kind_ != ClassKind::SO3;
  }

  /// Group order for finite classes, 0 otherwise.
  constexpr int order() const {
    switch (kind_) {
      case ClassKind::Triclinic: return 1;
      case ClassKind::Zn: return n_;
      case ClassKind::Dn: return 2 * n_;
      case ClassKind::T: return 12;
      case ClassKind::O: return 24;
      case ClassKind::I: return 60;
      default: return 0;
    }
  }

  std::string to_string() const {
    switch (kind_) {
      case ClassKind::Triclinic: return "1";
      case ClassKind::Zn: return "Z" + std::to_string(n_);
      case ClassKind::Dn: return "D" + std::to_string(n_);
      case ClassKind::T: return "T";
      case ClassKind::O: return "O";
      case ClassKind::I: return "I";
      case ClassKind::SO2: return "SO(2)";
      case ClassKind::O2: return "O(2)";
      case ClassKind::SO3: return "SO(3)";
    }
    return "?";
  }

  /// Accepts the ASCII forms of to_string, optionally in brackets, plus
  /// "SO2", "O2", "SO3" without parentheses.
  static ClassLabel parse(const std::string& text) {
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    std::string u;
    for (char c : t) u += char(std::toupper(static_cast<unsigned char>(c)));
    if (u == "1" || u == "TRICLINIC") return triclinic();
    if (u == "T") return tetrahedral();
    if (u == "O") return octahedral();
    if (u == "I") return icosahedral();
    if (u == "SO(2)" || u == "SO2") return SO2();
    if (u == "O(2)" || u == "O2") return O2();
    if (u == "SO(3)" || u == "SO3") return SO3();
    if (u.size() >= 2 && (u[0] == 'Z' || u[0] == 'D')) {
      const std::string digits = u.substr(1);
      bool ok = !digits.empty() && digits.size() <= 6;
      for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
      if (ok) {
        const int n = std::stoi(digits);
        if (n >= 1) return u[0] == 'Z' ? Z(n) : D(n);
      }
    }
    throw ValidationError("unknown symmetry class '" + text + "'");
  }

  friend constexpr bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend constexpr std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
    if (auto c = int(a.kind_) <=> int(b.kind_); c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  constexpr ClassLabel(ClassKind k, int n) : kind_(k), n_(n) {}

  ClassKind kind_ = ClassKind::Triclinic;
  int n_ = 0;
};

/// True when `a` is conjugate to a subgroup of `b`.
inline bool is_subclass(const ClassLabel& a, const ClassLabel& b) {
  using K = ClassKind;
  const K A = a.kind(), B = b.kind();
  if (A == K::Triclinic || B == K::SO3) return true;
  if (A == K::SO3) return false;
  if (a == b) return true;
  const int m = a.n(), n = b.n();
  switch (A) {
    case K::Zn:
      switch (B) {
        case K::Zn: return n % m == 0;
        case K::Dn: return n % m == 0 || m == 2;
        case K::T: return m == 2 || m == 3;
        case K::O: return m == 2 || m == 3 || m == 4;
        case K::I: return m == 2 || m == 3 || m == 5;
        case K::SO2:
        case K::O2: return true;
        default: return false;
      }
    case K::Dn:
      switch (B) {
        case K::Dn: return n % m == 0;
        case K::T: return m == 2;
        case K::O: return m == 2 || m == 3 || m == 4;
        case K::I: return m == 2 || m == 3 || m == 5;
        case K::O2: return true;
        default: return false;
      }
    case K::T: return B == K::O || B == K::I;
    case K::SO2: return B == K::O2;
    default: return false;
  }
}

inline bool is_strict_subclass(const ClassLabel& a, const ClassLabel& b) {
  return a != b && is_subclass(a, b);
}

}  // namespace ela
