// Command-line front end: decomposition, classification, enumeration, normal
// forms, projection and Young's modulus surfaces for elasticity tensors.
//
// Exit status: 0 success, 2 invalid input, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ela/clips.hpp"
#include "ela/exotic.hpp"
#include "ela/io.hpp"
#include "ela/projection.hpp"

namespace {

using namespace ela;

struct Options {
  double tol = kSymTol;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;  // empty: the subcommand's natural format
  std::string input = "-";
  std::string scheme = "cghd";
  std::string class_a, class_b, group;
  std::string kind;
  std::vector<double> params;
  std::string target;
  std::string grid = "19,36";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TensorDocument load(const Options& o) { return parse_tensor(read_input(o.input)); }

std::string format_or(const Options& o, const std::string& fallback) {
  return o.format.empty() ? fallback : o.format;
}

void require_json(const Options& o, const std::string& command) {
  if (format_or(o, "json") != "json")
    throw ValidationError("'" + command + "' supports only --format json");
}

std::string tensor_text(const ElasticityTensor& c, TensorRole role, const std::string& description) {
  TensorDocument d;
  d.role = role;
  d.description = description;
  d.tensor = c;
  return serialize_tensor(d);
}

std::string to_text(const json& j) { return pretty_json(j); }

std::string run_decompose(const Options& o) {
  require_json(o, "decompose");
  const TensorDocument d = load(o);
  return to_text(decomposition_to_json(record_of(decompose(d.tensor, parse_scheme(o.scheme)))));
}

std::string run_classify(const Options& o) {
  require_json(o, "classify");
  const TensorDocument d = load(o);
  const MaterialReport m = classify_material(d.tensor, o.tol);
  json j = report_to_json(make_report(d.tensor, o.tol));
  j["role"] = to_string(d.role);
  j["in_scope"] = m.in_scope;
  if (!m.note.empty()) j["note"] = m.note;
  if (m.compliance_swhd) j["compliance_swhd_structure"] = m.compliance_swhd->structure.to_string();
  return to_text(j);
}

std::string run_structure(const Options& o) {
  const TensorDocument d = load(o);
  const Scheme s = parse_scheme(o.scheme);
  const GeometricStructure g = geometric_structure(d.tensor, s, o.tol);
  const StructureSignature sig = g.signature();
  const ExoticCatalogEntry* e = match_entry(sig);
  if (format_or(o, "text") == "text") return sig.to_string() + (e ? "  " + e->label : std::string());
  require_json(o, "structure");
  json j{{"scheme", to_string(s)}, {"signature", sig.to_string()}, {"entry", e ? e->label : ""}};
  json classes = json::array();
  for (const auto& l : g.labels()) classes.push_back(l.to_string());
  j["classes"] = classes;
  return to_text(j);
}

std::string run_clips(const Options& o) {
  const ClassSet s = clips(ClassLabel::parse(o.class_a), ClassLabel::parse(o.class_b));
  if (format_or(o, "text") == "text") return s.to_string();
  require_json(o, "clips");
  json j = json::array();
  for (const auto& l : s) j.push_back(l.to_string());
  return j.dump();
}

std::string run_enumerate(const Options& o) {
  const ClassLabel g = ClassLabel::parse(o.group);
  std::vector<const ExoticCatalogEntry*> rows;
  for (const auto& e : catalog())
    if (e.overall() == g) rows.push_back(&e);
  if (rows.empty() || is_subclass(g, ClassLabel::D(2)))
    throw ValidationError("enumeration is available for SO(3), O, O(2), D4 and D3, not " + g.to_string());
  if (format_or(o, "text") == "text") {
    std::string out;
    for (const auto* e : rows) {
      out += e->label + "  " + e->signature.to_string();
      if (!e->material.empty()) out += "  " + e->material;
      out += "\n";
    }
    out.pop_back();
    return out;
  }
  require_json(o, "enumerate");
  json j = json::array();
  for (const auto* e : rows)
    j.push_back({{"label", e->label}, {"signature", e->signature.to_string()},
                 {"generic", e->generic}, {"material", e->material}});
  return to_text(j);
}

std::string run_normal_form(const Options& o) {
  require_json(o, "normal-form");
  const NormalFormKind k = parse_normal_form_kind(o.kind);
  const TensorRole role = k == NormalFormKind::IYTI ? TensorRole::Compliance : TensorRole::Stiffness;
  return tensor_text(normal_form(k, o.params), role, "normal form " + o.kind);
}

std::string run_project(const Options& o) {
  require_json(o, "project");
  const TensorDocument d = load(o);
  const ExoticCatalogEntry& e = find_entry(o.target);
  const Scheme s = e.material_scheme ? *e.material_scheme : parse_scheme(o.scheme);
  ProjectionOptions po;
  po.seed = o.seed;
  ProjectionResult r;
  try {
    r = nearest_in_structure(d.tensor, e, s, po);
  } catch (const ConvergenceError& err) {
    std::cerr << "warning: " << err.what() << "; reporting best orientation found\n";
    r = err.best();
  }
  json j;
  j["target"] = r.entry;
  j["scheme"] = to_string(r.scheme);
  j["distance"] = r.distance;
  j["relative_distance"] = r.relative_distance;
  j["rotation"] = r.rotation.quaternion();
  j["positive_definite"] = r.positive_definite;
  TensorDocument nd;
  nd.role = d.role;
  nd.tensor = r.nearest;
  j["nearest"] = tensor_to_json(nd);
  json starts = json::array();
  for (const auto& st : r.starts)
    starts.push_back({{"index", st.index}, {"origin", st.from_frame ? "frame" : "random"},
                      {"distance", st.distance}, {"iterations", st.iterations},
                      {"converged", st.converged}});
  j["starts"] = starts;
  return to_text(j);
}

std::string run_young(const Options& o) {
  const TensorDocument d = load(o);
  int n_theta = 0, n_phi = 0;
  char comma = 0, extra = 0;
  std::istringstream grid(o.grid);
  if (!(grid >> n_theta >> comma >> n_phi) || comma != ',' || (grid >> extra))
    throw ValidationError("--grid expects two integers T,P, got '" + o.grid + "'");
  const ElasticityTensor s = d.role == TensorRole::Compliance ? d.tensor : invert(d.tensor);
  const auto samples = young_surface(s, n_theta, n_phi);
  const std::string fmt = format_or(o, "csv");
  if (fmt == "csv") {
    std::string out = "theta,phi,E";
    for (const auto& p : samples) out += "\n" + json(p.theta).dump() + "," + json(p.phi).dump() + "," + json(p.E).dump();
    return out;
  }
  require_json(o, "young");
  json j = json::array();
  for (const auto& p : samples) j.push_back({{"theta", p.theta}, {"phi", p.phi}, {"E", p.E}});
  return to_text(j);
}

std::string run_invert(const Options& o) {
  require_json(o, "invert");
  const TensorDocument d = load(o);
  const TensorRole role = d.role == TensorRole::Stiffness ? TensorRole::Compliance : TensorRole::Stiffness;
  return tensor_text(invert(d.tensor), role, "inverse");
}

std::string run_eig(const Options& o) {
  const TensorDocument d = load(o);
  const Vec6 ev = spectrum(d.tensor);
  if (format_or(o, "json") == "csv") {
    std::string out = "eigenvalue";
    for (double v : ev) out += "\n" + json(v).dump();
    return out;
  }
  require_json(o, "eig");
  return to_text(json{{"eigenvalues", ev}, {"positive_definite", is_positive_definite(d.tensor)}});
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ValidationError("cannot write '" + o.out + "'");
  f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Harmonic decomposition and symmetry analysis of elasticity tensors"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Relative tolerance for symmetry detection")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized starts")->capture_default_str();
  app.add_option("--out", o.out, "Write output to FILE instead of standard output");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Tensor document (default: stdin)"); };
  auto scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Decomposition scheme")
        ->check(CLI::IsMember({"cghd", "swhd"}))
        ->capture_default_str();
  };

  auto* dec = app.add_subcommand("decompose", "Harmonic decomposition (alpha, beta, h_a, h_b, H)");
  scheme(dec);
  input(dec);
  auto* cls = app.add_subcommand("classify", "Full classification report");
  input(cls);
  auto* st = app.add_subcommand("structure", "Geometric structure signature");
  scheme(st);
  input(st);
  auto* cl = app.add_subcommand("clips", "Clips product of two symmetry classes");
  cl->add_option("A", o.class_a)->required();
  cl->add_option("B", o.class_b)->required();
  auto* en = app.add_subcommand("enumerate", "Generic and exotic structures of a class");
  en->add_option("G", o.group)->required();
  auto* nf = app.add_subcommand("normal-form", "Kelvin normal form (TI, UTI, IDTI, IYTI, cubic, isotropic)");
  nf->add_option("KIND", o.kind)->required();
  nf->add_option("P", o.params)->required();
  auto* pr = app.add_subcommand("project", "Nearest tensor with a given structure");
  pr->add_option("--target", o.target, "Catalog label or material name")->required();
  scheme(pr);
  input(pr);
  auto* yg = app.add_subcommand("young", "Directional Young's modulus on an angular grid");
  yg->add_option("--grid", o.grid, "n_theta,n_phi")->capture_default_str();
  input(yg);
  auto* inv = app.add_subcommand("invert", "Inverse tensor (stiffness <-> compliance)");
  input(inv);
  auto* eig = app.add_subcommand("eig", "Kelvin eigenvalues");
  input(eig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (dec->parsed()) text = run_decompose(o);
    else if (cls->parsed()) text = run_classify(o);
    else if (st->parsed()) text = run_structure(o);
    else if (cl->parsed()) text = run_clips(o);
    else if (en->parsed()) text = run_enumerate(o);
    else if (nf->parsed()) text = run_normal_form(o);
    else if (pr->parsed()) text = run_project(o);
    else if (yg->parsed()) text = run_young(o);
    else if (inv->parsed()) text = run_invert(o);
    else if (eig->parsed()) text = run_eig(o);
    emit(o, text);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
