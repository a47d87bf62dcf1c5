#pragma once

/// \file
/// JSON tensor documents and analysis reports.
///
/// A tensor document looks like
///
///   { "version": 1, "role": "stiffness", "description": "...",
///     "kelvin": [[...6 numbers...], ...6 rows...] }
///
/// with exactly one payload key: "kelvin" (6x6), "voigt" (6x6, engineering
/// shear convention, converted on load) or "components" (object keyed
/// "C1111", "C1123", ...; images under minor/major symmetry are filled in).

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ela/error.hpp"
#include "ela/exotic.hpp"
#include "ela/harmonic.hpp"
#include "ela/tensor_core.hpp"

namespace ela {

using json = nlohmann::json;

enum class TensorRole { Stiffness, Compliance };

inline std::string to_string(TensorRole r) { return r == TensorRole::Stiffness ? "stiffness" : "compliance"; }

enum class PayloadForm { Kelvin, Voigt, Components };

struct TensorDocument {
  int version = 1;
  TensorRole role = TensorRole::Stiffness;
  std::string description;
  PayloadForm source = PayloadForm::Kelvin;  ///< payload form found on input
  ElasticityTensor tensor;
};

namespace detail {

inline Mat6 read_matrix6(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 6)
    throw ValidationError(std::string("'") + key + "' must be a 6x6 array");
  Mat6 m;
  for (int r = 0; r < 6; ++r) {
    const json& row = j[std::size_t(r)];
    if (!row.is_array() || row.size() != 6)
      throw ValidationError(std::string("'") + key + "' row " + std::to_string(r + 1) +
                            " must have 6 entries");
    for (int c = 0; c < 6; ++c) {
      const json& v = row[std::size_t(c)];
      if (!v.is_number())
        throw ValidationError(std::string("'") + key + "' entry (" + std::to_string(r + 1) + "," +
                              std::to_string(c + 1) + ") is not a number");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

inline json write_matrix6(const Mat6& m) {
  json rows = json::array();
  for (int r = 0; r < 6; ++r) {
    json row = json::array();
    for (int c = 0; c < 6; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

/// Worst off-diagonal mismatch; throws naming the pair when above tol.
inline void require_symmetric(const Mat6& m, const char* key, double tol = 1e-12) {
  const double scale = std::max(1.0, m.max_abs());
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (std::abs(m(i, j) - m(j, i)) > worst) worst = std::abs(m(i, j) - m(j, i)), wi = i, wj = j;
  if (worst > tol * scale)
    throw ValidationError(std::string("'") + key + "' is not symmetric: worst pair (" +
                          std::to_string(wi + 1) + "," + std::to_string(wj + 1) + ") vs (" +
                          std::to_string(wj + 1) + "," + std::to_string(wi + 1) + "), difference " +
                          std::to_string(worst));
}

inline std::optional<std::array<int, 4>> parse_component_key(const std::string& key) {
  if (key.size() != 5 || (key[0] != 'C' && key[0] != 'S')) return std::nullopt;
  std::array<int, 4> idx;
  for (std::size_t n = 0; n < 4; ++n) {
    const char ch = key[n + 1];
    if (ch < '1' || ch > '3') return std::nullopt;
    idx[n] = ch - '1';
  }
  return idx;
}

inline ElasticityTensor read_components(const json& j) {
  if (!j.is_object()) throw ValidationError("'components' must be an object");
  Array4 a{};
  std::array<std::string, 81> origin;
  const double tol = 1e-12;
  double scale = 1.0;
  for (const auto& [key, v] : j.items())
    if (v.is_number()) scale = std::max(scale, std::abs(v.get<double>()));
  for (const auto& [key, v] : j.items()) {
    const auto idx = parse_component_key(key);
    if (!idx) throw ValidationError("unknown component key '" + key + "' (expected C followed by 4 digits 1-3)");
    if (!v.is_number()) throw ValidationError("component '" + key + "' is not a number");
    const double x = v.get<double>();
    const auto [i, j2, k, l] = *idx;
    const std::array<std::array<int, 4>, 8> images{{{i, j2, k, l}, {j2, i, k, l}, {i, j2, l, k}, {j2, i, l, k},
                                                    {k, l, i, j2}, {l, k, i, j2}, {k, l, j2, i}, {l, k, j2, i}}};
    for (const auto& im : images) {
      const int p = idx4(im[0], im[1], im[2], im[3]);
      if (!origin[std::size_t(p)].empty() && std::abs(a[std::size_t(p)] - x) > tol * scale)
        throw ValidationError("components '" + origin[std::size_t(p)] + "' and '" + key +
                              "' are symmetry images but differ");
      a[std::size_t(p)] = x;
      origin[std::size_t(p)] = key;
    }
  }
  return ElasticityTensor::from_components(a);
}

}  // namespace detail

/// Kelvin matrix from a Voigt matrix (engineering shear strains).
inline Mat6 kelvin_from_voigt(const Mat6& v, TensorRole role) {
  Mat6 k;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const double wi = i < 3 ? 1.0 : kSqrt2, wj = j < 3 ? 1.0 : kSqrt2;
      k(i, j) = role == TensorRole::Stiffness ? v(i, j) * wi * wj : v(i, j) / (wi * wj);
    }
  return k;
}

inline Mat6 voigt_from_kelvin(const Mat6& k, TensorRole role) {
  Mat6 v;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const double wi = i < 3 ? 1.0 : kSqrt2, wj = j < 3 ? 1.0 : kSqrt2;
      v(i, j) = role == TensorRole::Stiffness ? k(i, j) / (wi * wj) : k(i, j) * wi * wj;
    }
  return v;
}

inline TensorDocument parse_tensor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("tensor document must be a JSON object");
  for (const auto& [key, v] : j.items())
    if (key != "version" && key != "role" && key != "description" && key != "kelvin" &&
        key != "voigt" && key != "components")
      throw ValidationError("unknown field '" + key + "'");

  TensorDocument doc;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()) throw ValidationError("'version' must be an integer");
    doc.version = j["version"].get<int>();
    if (doc.version != 1) throw ValidationError("unsupported document version " + std::to_string(doc.version));
  }
  if (!j.contains("role") || !j["role"].is_string())
    throw ValidationError("'role' is required (stiffness or compliance)");
  const std::string role = j["role"].get<std::string>();
  if (role == "stiffness") doc.role = TensorRole::Stiffness;
  else if (role == "compliance") doc.role = TensorRole::Compliance;
  else throw ValidationError("'role' must be stiffness or compliance, got '" + role + "'");
  if (j.contains("description")) {
    if (!j["description"].is_string()) throw ValidationError("'description' must be a string");
    doc.description = j["description"].get<std::string>();
  }

  const int payloads = int(j.contains("kelvin")) + int(j.contains("voigt")) + int(j.contains("components"));
  if (payloads != 1)
    throw ValidationError("exactly one of 'kelvin', 'voigt', 'components' is required");
  if (j.contains("kelvin")) {
    const Mat6 k = detail::read_matrix6(j["kelvin"], "kelvin");
    detail::require_symmetric(k, "kelvin");
    doc.source = PayloadForm::Kelvin;
    doc.tensor = ElasticityTensor::from_kelvin(k);
  } else if (j.contains("voigt")) {
    const Mat6 v = detail::read_matrix6(j["voigt"], "voigt");
    detail::require_symmetric(v, "voigt");
    doc.source = PayloadForm::Voigt;
    doc.tensor = ElasticityTensor::from_kelvin(kelvin_from_voigt(v, doc.role));
  } else {
    doc.source = PayloadForm::Components;
    doc.tensor = detail::read_components(j["components"]);
  }
  return doc;
}

inline json tensor_to_json(const TensorDocument& doc, PayloadForm form = PayloadForm::Kelvin) {
  json j;
  j["version"] = doc.version;
  j["role"] = to_string(doc.role);
  if (!doc.description.empty()) j["description"] = doc.description;
  switch (form) {
    case PayloadForm::Kelvin: j["kelvin"] = detail::write_matrix6(doc.tensor.kelvin()); break;
    case PayloadForm::Voigt:
      j["voigt"] = detail::write_matrix6(voigt_from_kelvin(doc.tensor.kelvin(), doc.role));
      break;
    case PayloadForm::Components: {
      json c = json::object();
      const char prefix = doc.role == TensorRole::Stiffness ? 'C' : 'S';
      for (int I = 0; I < 6; ++I)
        for (int J = I; J < 6; ++J) {
          const auto [i, jj] = kelvin::kPairs[I];
          const auto [k, l] = kelvin::kPairs[J];
          std::string key = kelvin::index_name(i, jj, k, l);
          key[0] = prefix;
          c[key] = doc.tensor.component(i, jj, k, l);
        }
      j["components"] = c;
      break;
    }
  }
  return j;
}

/// Indented JSON with arrays of scalars kept on one line, so matrices print
/// row by row.
inline std::string pretty_json(const json& j, int indent = 0) {
  const std::string pad(std::size_t(indent + 2), ' '), close(std::size_t(indent), ' ');
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  if (j.is_object()) {
    if (j.empty()) return "{}";
    std::string out = "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : ",\n") + pad + json(k).dump() + ": " + pretty_json(v, indent + 2);
      first = false;
    }
    return out + "\n" + close + "}";
  }
  if (j.is_array()) {
    if (j.empty() || flat(j)) {
      std::string out = "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      return out + "]";
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < j.size(); ++i)
      out += (i ? ",\n" : "") + pad + pretty_json(j[i], indent + 2);
    return out + "\n" + close + "]";
  }
  return j.dump();
}

inline std::string serialize_tensor(const TensorDocument& doc, PayloadForm form = PayloadForm::Kelvin) {
  return pretty_json(tensor_to_json(doc, form));
}

// ------------------------------------------------------------------ reports

struct DecompositionRecord {
  Scheme scheme = Scheme::CGHD;
  double alpha = 0, beta = 0;
  Mat3 ha, hb;
  Mat6 H;  ///< Kelvin matrix of the harmonic part

  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

inline DecompositionRecord record_of(const HarmonicTriplet& t) {
  return {t.scheme(), t.alpha(), t.beta(), t.ha().tensor().matrix(), t.hb().tensor().matrix(),
          t.H().kelvin()};
}

struct ReportDocument {
  std::vector<DecompositionRecord> decompositions;
  std::map<std::string, std::string> structure;  ///< scheme name -> signature text
  std::string entry;
  std::vector<std::string> materials;
  std::map<std::string, double> residuals;
  Vec6 eigenvalues{};
  bool positive_definite = false;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline ReportDocument make_report(const ElasticityTensor& c, double tol = kSymTol) {
  ReportDocument r;
  const MaterialReport m = classify_material(c, tol);
  for (Scheme s : {Scheme::CGHD, Scheme::SWHD}) r.decompositions.push_back(record_of(decompose(c, s)));
  for (const SchemeReport* sr : {&m.cghd, &m.swhd}) {
    const std::string n = to_string(sr->scheme);
    r.structure[n] = sr->structure.to_string();
    r.residuals[n + ".ha"] = sr->ha_residual;
    r.residuals[n + ".hb"] = sr->hb_residual;
    r.residuals[n + ".H"] = sr->H_residual;
    r.residuals[n + ".d2_dev"] = sr->d2_dev_ratio;
  }
  r.entry = m.entry;
  r.materials = m.materials;
  r.eigenvalues = m.eigenvalues;
  r.positive_definite = m.positive_definite;
  return r;
}

namespace detail {

inline json write_matrix3(const Mat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return rows;
}

inline Mat3 read_matrix3(const json& j) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = j.at(std::size_t(r)).at(std::size_t(c)).get<double>();
  return m;
}

}  // namespace detail

inline json decomposition_to_json(const DecompositionRecord& d) {
  return {{"scheme", to_string(d.scheme)},
          {"alpha", d.alpha},
          {"beta", d.beta},
          {"ha", detail::write_matrix3(d.ha)},
          {"hb", detail::write_matrix3(d.hb)},
          {"H_kelvin", detail::write_matrix6(d.H)}};
}

inline DecompositionRecord decomposition_from_json(const json& j) {
  DecompositionRecord d;
  d.scheme = parse_scheme(j.at("scheme").get<std::string>());
  d.alpha = j.at("alpha").get<double>();
  d.beta = j.at("beta").get<double>();
  d.ha = detail::read_matrix3(j.at("ha"));
  d.hb = detail::read_matrix3(j.at("hb"));
  d.H = detail::read_matrix6(j.at("H_kelvin"), "H_kelvin");
  return d;
}

inline json report_to_json(const ReportDocument& r) {
  json j;
  j["decompositions"] = json::array();
  for (const auto& d : r.decompositions) j["decompositions"].push_back(decomposition_to_json(d));
  j["structure"] = r.structure;
  j["entry"] = r.entry;
  j["materials"] = r.materials;
  j["residuals"] = r.residuals;
  j["eigenvalues"] = r.eigenvalues;
  j["positive_definite"] = r.positive_definite;
  return j;
}

inline ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument r;
    for (const auto& d : j.at("decompositions")) r.decompositions.push_back(decomposition_from_json(d));
    r.structure = j.at("structure").get<std::map<std::string, std::string>>();
    r.entry = j.at("entry").get<std::string>();
    r.materials = j.at("materials").get<std::vector<std::string>>();
    r.residuals = j.at("residuals").get<std::map<std::string, double>>();
    r.eigenvalues = j.at("eigenvalues").get<Vec6>();
    r.positive_definite = j.at("positive_definite").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace ela
