// Command-line front end: each subcommand parses its inputs, calls the library and prints a report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "carnot/carnot.hpp"

namespace {

using carnot::AlgebraVector;
using carnot::GradedLieAlgebra;
using carnot::Rational;
using carnot::Subspace;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

struct SubspaceArgs {
  std::string labels;
  std::string file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw carnot::input_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw carnot::input_error(what + " is not valid JSON: " + e.what());
  }
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::optional<Subspace> read_subspace(const GradedLieAlgebra& g, const SubspaceArgs& a) {
  if (!a.labels.empty()) return Subspace::span_of(g, split_labels(a.labels));
  if (a.file.empty()) return std::nullopt;
  const auto j = parse_json(read_file(a.file), "subspace file");
  try {
    std::vector<AlgebraVector> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Rational> coeffs;
      for (const auto& c : row) coeffs.push_back(carnot::parse_rational(c.get<std::string>()));
      if (coeffs.size() != g.dim()) throw carnot::input_error("subspace row has wrong length");
      rows.emplace_back(std::move(coeffs));
    }
    return Subspace(g, rows);
  } catch (const nlohmann::json::exception& e) {
    throw carnot::input_error(std::string("malformed subspace file: ") + e.what());
  }
}

Json rows_json(const std::vector<AlgebraVector>& rows) {
  auto out = Json::array();
  for (const auto& r : rows) {
    auto row = Json::array();
    for (const auto& c : r.coeffs()) row.push_back(carnot::to_string(c));
    out.push_back(row);
  }
  return out;
}

std::string vector_text(const GradedLieAlgebra& g, const AlgebraVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += (v[i] == 1 ? std::string() : "(" + carnot::to_string(v[i]) + ")*") + g.label(i);
  }
  return out.empty() ? "0" : out;
}

std::string labels_text(const GradedLieAlgebra& g, const std::vector<std::size_t>& idx) {
  std::string out;
  for (auto i : idx) out += (out.empty() ? "" : ",") + g.label(i);
  return out;
}

void emit(const Globals& gl, const Json& j, const std::string& text) {
  if (gl.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

Json bound_json(const carnot::GrowthBound& b) {
  Json j;
  j["target"] = carnot::to_string(b.target);
  j["m"] = b.m;
  j["exponent"] = b.exponent ? Json(carnot::to_string(*b.exponent)) : Json(nullptr);
  j["relation"] = carnot::to_string(b.relation);
  j["source"] = b.source;
  j["note"] = b.note;
  return j;
}

std::string bound_text(const carnot::GrowthBound& b) {
  std::string var = b.target == carnot::Target::Filling ? "l" : "r";
  std::string s = std::string(carnot::to_string(b.target)) + "^" + std::to_string(b.m) + "  ";
  if (b.exponent)
    s += std::string(carnot::relation_symbol(b.relation)) + " " + var + "^(" + carnot::to_string(*b.exponent) + ")";
  else
    s += "unknown";
  s += "  [" + b.source + "]";
  if (!b.note.empty()) s += "  " + b.note;
  return s;
}

// ---- subcommands ----

int cmd_catalog(const Globals& gl, const std::string& show) {
  if (!show.empty()) {
    const auto e = carnot::resolve_source(show);
    std::cout << carnot::algebra_to_json(e.algebra).dump(2) << '\n';
    return kOk;
  }
  auto list = Json::array();
  std::string text;
  for (const auto& e : carnot::standard_catalog()) {
    Json j;
    j["id"] = e.id();
    j["dim"] = e.algebra.dim();
    auto dims = Json::array();
    std::string dims_text;
    for (const auto& l : e.algebra.layers()) {
      dims.push_back(l.size());
      dims_text += (dims_text.empty() ? "" : ",") + std::to_string(l.size());
    }
    j["layer_dims"] = dims;
    j["hausdorff_dimension"] = carnot::hausdorff_dimension(e.algebra);
    std::string sub;
    if (e.designated_subspace) sub = labels_text(e.algebra, e.designated_subspace->coordinate_indices());
    j["designated_subspace"] = e.designated_subspace ? Json(sub) : Json(nullptr);
    j["notes"] = e.notes;
    list.push_back(j);
    text += e.id() + "  dim " + std::to_string(e.algebra.dim()) + "  layers (" + dims_text + ")  D " +
            std::to_string(carnot::hausdorff_dimension(e.algebra)) + (sub.empty() ? "" : "  S = span(" + sub + ")") + "\n";
  }
  emit(gl, Json{{"entries", list}}, text);
  return kOk;
}

int cmd_check(const Globals& gl, const std::string& source) {
  const auto e = carnot::resolve_source(source);
  const auto& g = e.algebra;
  const auto jac = carnot::jacobi_check(g);
  Json j;
  j["algebra"] = g.name();
  j["dim"] = g.dim();
  std::string text = "algebra: " + g.name() + "\ndim: " + std::to_string(g.dim()) + "\n";
  Json jj;
  jj["ok"] = jac.ok;
  text += std::string("jacobi: ") + (jac.ok ? "pass" : "fail");
  if (!jac.ok) {
    const auto& t = *jac.failing_triple;
    jj["triple"] = {g.label(t[0]), g.label(t[1]), g.label(t[2])};
    jj["jacobiator"] = vector_text(g, jac.jacobiator);
    text += " at (" + g.label(t[0]) + "," + g.label(t[1]) + "," + g.label(t[2]) + "), sum = " + vector_text(g, jac.jacobiator);
  }
  text += "\n";
  j["jacobi"] = jj;
  bool ok = jac.ok;
  if (jac.ok) {
    const auto strat = carnot::stratification_check(g);
    ok = strat.ok;
    j["stratification"] = {{"ok", strat.ok}, {"diagnostic", strat.diagnostic}};
    text += std::string("stratification: ") + (strat.ok ? "pass" : "fail: " + strat.diagnostic) + "\n";
    auto dims = Json::array();
    std::string dims_text;
    const auto series = carnot::lower_central_series(g);
    for (const auto& s : series) {
      dims.push_back(s.dim());
      dims_text += (dims_text.empty() ? "" : " > ") + std::to_string(s.dim());
    }
    j["lower_central_series_dims"] = dims;
    j["nilpotency_degree"] = series.size() - 1;
    j["hausdorff_dimension"] = carnot::hausdorff_dimension(g);
    text += "lower central series dims: " + dims_text + "\nnilpotency degree: " + std::to_string(series.size() - 1) +
            "\nhausdorff dimension: " + std::to_string(carnot::hausdorff_dimension(g)) + "\n";
  }
  j["ok"] = ok;
  emit(gl, j, text);
  return ok ? kOk : kCheckFailed;
}

Json certify_json(const Subspace& s, std::string& text) {
  const auto& g = s.ambient();
  const auto iso = carnot::is_isotropic(s);
  const auto reg = carnot::is_regular(s);
  Json j;
  j["subspace"] = {{"rows", rows_json(s.rows())}};
  j["dim"] = s.dim();
  j["isotropic"] = iso.isotropic;
  j["regular"] = reg.regular;
  j["rank"] = reg.rank;
  j["required_rank"] = reg.required_rank;
  if (iso.witness) {
    const auto& [a, b] = *iso.witness;
    j["witness"] = {vector_text(g, s.rows()[a]), vector_text(g, s.rows()[b])};
  } else {
    j["witness"] = nullptr;
  }
  const auto bound = carnot::gromov_dimension_bound(g, static_cast<long>(std::max<std::size_t>(1, s.dim())));
  j["dimension_bound"] = {{"left", bound.left}, {"right", bound.right}, {"satisfied", bound.satisfied()}};
  std::string rows;
  for (const auto& r : s.rows()) rows += (rows.empty() ? "" : ", ") + vector_text(g, r);
  text += "subspace: span(" + rows + ")\ndim: " + std::to_string(s.dim()) + "\n";
  text += std::string("isotropic: ") + (iso.isotropic ? "true" : "false");
  if (iso.witness)
    text += " (witness [" + vector_text(g, s.rows()[iso.witness->first]) + ", " + vector_text(g, s.rows()[iso.witness->second]) + "] != 0)";
  text += std::string("\nregular: ") + (reg.regular ? "true" : "false") + " (rank " + std::to_string(reg.rank) + " of " +
          std::to_string(reg.required_rank) + ")\n";
  text += "dimension bound: " + std::to_string(bound.left) + " >= " + std::to_string(bound.right) +
          (bound.satisfied() ? " holds" : " violated") + "\n";
  return j;
}

int cmd_certify(const Globals& gl, const std::string& source, const SubspaceArgs& sa, std::size_t search_k,
                std::size_t samples, std::uint64_t seed) {
  const auto e = carnot::resolve_source(source);
  const auto& g = e.algebra;
  std::string text;
  if (search_k > 0) {
    carnot::SearchConfig cfg;
    cfg.random_samples = samples;
    cfg.seed = seed;
    cfg.threads = gl.threads;
    const auto r = carnot::search_certified_subspace(g, search_k, cfg);
    Json j;
    j["search_dim"] = search_k;
    j["candidates_checked"] = r.candidates_checked;
    j["coordinate_search_complete"] = r.coordinate_search_complete;
    j["found"] = r.found.has_value();
    j["note"] = r.note;
    text = "search dim: " + std::to_string(search_k) + "\ncandidates checked: " + std::to_string(r.candidates_checked) + "\n";
    if (r.found)
      j["result"] = certify_json(*r.found, text);
    else
      text += "not found: " + r.note + "\n";
    emit(gl, j, text);
    return r.found ? kOk : kCheckFailed;
  }
  const auto s = read_subspace(g, sa);
  if (!s) throw carnot::input_error("certify needs --subspace, --subspace-file or --search");
  const auto j = certify_json(*s, text);
  emit(gl, j, text);
  return j["isotropic"].get<bool>() && j["regular"].get<bool>() ? kOk : kCheckFailed;
}

int cmd_predict(const Globals& gl, const std::string& source, const SubspaceArgs& sa, bool assert_lattice,
                std::size_t max_iso, bool no_literature, bool coverage) {
  const auto e = carnot::resolve_source(source);
  carnot::BundleOptions opt;
  opt.assert_lattice = assert_lattice;
  if (max_iso > 0) opt.max_isotropic_dim = max_iso;
  opt.use_literature = !no_literature;
  const auto bundle = carnot::make_bundle(e, read_subspace(e.algebra, sa), opt);
  Json j;
  j["algebra"] = e.algebra.name();
  j["n"] = bundle.dim();
  j["D"] = bundle.hausdorff();
  j["d"] = bundle.degree();
  j["k"] = bundle.k();
  j["regular"] = bundle.regular;
  j["lattice"] = bundle.lattice_origin;
  std::string text = "algebra: " + e.algebra.name() + "\nn = " + std::to_string(bundle.dim()) + ", D = " +
                     std::to_string(bundle.hausdorff()) + ", d = " + std::to_string(bundle.degree()) + ", dim S = " +
                     std::to_string(bundle.k() + 1) + ", regular: " + (bundle.regular ? "yes" : "no") +
                     ", lattice: " + bundle.lattice_origin + "\n";
  if (coverage) {
    const auto table = carnot::coverage_table(bundle);
    auto rows = Json::array();
    for (const auto& r : table.rows) {
      Json row;
      row["target"] = carnot::to_string(r.target);
      row["m"] = r.m;
      row["unknown"] = r.unknown;
      row["conflict"] = r.conflict;
      auto bounds = Json::array();
      for (const auto& b : r.bounds) bounds.push_back(bound_json(b));
      row["bounds"] = bounds;
      rows.push_back(row);
      for (const auto& b : r.bounds) text += (r.conflict ? "! " : "  ") + bound_text(b) + "\n";
    }
    j["coverage"] = rows;
  } else {
    auto filling = Json::array();
    for (const auto& b : carnot::predict_filling(bundle)) {
      filling.push_back(bound_json(b));
      text += bound_text(b) + "\n";
    }
    auto div = Json::array();
    for (const auto& b : carnot::predict_divergence(bundle)) {
      div.push_back(bound_json(b));
      text += bound_text(b) + "\n";
    }
    j["filling"] = filling;
    j["divergence"] = div;
  }
  j["notes"] = bundle.notes;
  for (const auto& n : bundle.notes) text += "note: " + n + "\n";
  emit(gl, j, text);
  return kOk;
}

int cmd_curvature(const Globals& gl, const std::string& source, const SubspaceArgs& sa, bool maximal) {
  const auto e = carnot::resolve_source(source);
  const auto& g = e.algebra;
  const auto table = carnot::curvature_table(g, gl.threads);
  Json j;
  j["algebra"] = g.name();
  auto pairs = Json::array();
  std::string text = "algebra: " + g.name() + "\nnonzero plane curvatures:\n";
  for (const auto& [key, k] : table) {
    pairs.push_back({{"u", g.label(key.first)}, {"v", g.label(key.second)}, {"K", carnot::to_string(k)}});
    if (sgn(k) != 0) text += "  K(" + g.label(key.first) + "," + g.label(key.second) + ") = " + carnot::to_string(k) + "\n";
  }
  j["curvatures"] = pairs;
  bool ok = true;
  auto s = read_subspace(g, sa);
  if (!s && g.depth() == 2) s = e.designated_subspace;
  if (s) {
    const auto r = carnot::trichotomy_report(*s, maximal);
    auto item = [&](const char* name, const carnot::TrichotomyItem& it) {
      Json w = Json::array();
      for (const auto& [jdx, idx] : it.witnesses) w.push_back({g.label(jdx), g.label(idx)});
      Json out{{"holds", it.holds}, {"asserted", it.asserted}, {"witnesses", w}};
      if (it.failing_pair) out["failing_pair"] = {g.label(it.failing_pair->first), g.label(it.failing_pair->second)};
      if (it.failing_direction) out["failing_direction"] = g.label(*it.failing_direction);
      text += std::string(name) + ": " + (it.holds ? "holds" : "fails") + (it.asserted ? "" : " (not asserted)");
      for (const auto& [jdx, idx] : it.witnesses) text += " " + g.label(jdx) + "<-" + g.label(idx);
      text += "\n";
      if (it.asserted && !it.holds) ok = false;
      return out;
    };
    Json t;
    t["subspace"] = labels_text(g, r.subspace_basis);
    text += "trichotomy for span(" + labels_text(g, r.subspace_basis) + "):\n";
    t["flat"] = item("1 flat", r.flat);
    t["negative"] = item("2 negative", r.negative);
    t["positive"] = item("3 positive", r.positive);
    j["trichotomy"] = t;
  }
  emit(gl, j, text);
  return ok ? kOk : kCheckFailed;
}

Json form_json(const carnot::InvariantForm& f) {
  Json j;
  j["degree"] = f.degree();
  auto terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"indices", m}, {"coeff", carnot::to_string(c)}});
  j["terms"] = terms;
  return j;
}

std::string form_text(const GradedLieAlgebra& g, const carnot::InvariantForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + carnot::to_string(c) + ")";
    for (std::size_t r = 0; r < m.size(); ++r) out += (r == 0 ? " " : "^") + g.label(m[r]) + "*";
  }
  return out;
}

int cmd_pittet(const Globals& gl, const std::string& source) {
  const auto e = carnot::resolve_source(source);
  const auto r = carnot::pittet_kernel(e.algebra);
  Json j;
  j["algebra"] = e.algebra.name();
  j["space_dim"] = r.space_dim;
  j["equations"] = r.system.rows();
  j["kernel_dim"] = r.kernel_dim();
  auto basis = Json::array();
  for (const auto& v : r.kernel) {
    auto row = Json::array();
    for (const auto& c : v) row.push_back(carnot::to_string(c));
    basis.push_back(row);
  }
  j["kernel"] = basis;
  emit(gl, j,
       "algebra: " + e.algebra.name() + "\nspace_dim: " + std::to_string(r.space_dim) + "\nequations: " +
           std::to_string(r.system.rows()) + "\nkernel_dim: " + std::to_string(r.kernel_dim()) + "\n");
  return kOk;
}

int cmd_lattice(const Globals& gl, const std::string& source) {
  const auto e = carnot::resolve_source(source);
  const auto& g = e.algebra;
  const auto spec = carnot::build_scalable_lattice(g);
  const auto group = carnot::check_group_closure(spec, gl.threads);
  const auto scaling = carnot::check_scaling_closure(spec);
  Json j;
  j["algebra"] = g.name();
  auto gens = Json::array();
  std::string text = "algebra: " + g.name() + "\ngenerators:\n";
  for (const auto& v : spec.generators()) {
    gens.push_back(vector_text(g, v));
    text += "  " + vector_text(g, v) + "\n";
  }
  j["generators"] = gens;
  j["group_closure"] = {{"ok", group.ok}, {"pairs_checked", group.pairs_checked}};
  if (group.violating_pair) j["group_closure"]["violating_pair"] = {group.violating_pair->first, group.violating_pair->second};
  j["scaling_closure"] = {{"ok", scaling.ok}};
  if (scaling.violating_generator) j["scaling_closure"]["violating_generator"] = *scaling.violating_generator;
  text += std::string("group closure: ") + (group.ok ? "pass" : "fail") + " (" + std::to_string(group.pairs_checked) + " pairs)\n";
  text += std::string("scaling closure: ") + (scaling.ok ? "pass" : "fail") + "\n";
  emit(gl, j, text);
  return group.ok && scaling.ok ? kOk : kCheckFailed;
}

int cmd_forms_d(const Globals& gl, const std::string& source, const std::string& form) {
  const auto e = carnot::resolve_source(source);
  const auto& g = e.algebra;
  const std::string literal = !form.empty() && form.front() == '{' ? form : read_file(form);
  const auto j = parse_json(literal, "form literal");
  carnot::InvariantForm f;
  try {
    f = carnot::InvariantForm(g, j.at("degree").get<std::size_t>());
    for (const auto& t : j.at("terms"))
      f.add(t.at("indices").get<std::vector<std::size_t>>(), carnot::parse_rational(t.at("coeff").get<std::string>()));
  } catch (const nlohmann::json::exception& ex) {
    throw carnot::input_error(std::string("malformed form literal: ") + ex.what());
  }
  const auto d = carnot::differential(f);
  Json out;
  out["algebra"] = g.name();
  out["form"] = form_json(f);
  out["differential"] = form_json(d);
  out["closed"] = d.is_zero();
  emit(gl, out, "form: " + form_text(g, f) + "\nd(form): " + form_text(g, d) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on stratified nilpotent Lie algebras"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Print a single JSON document");
  app.add_option("--threads", gl.threads, "Worker threads for parallel checks")->check(CLI::Range(1u, 256u));
  app.fallthrough();

  std::string source, show, form;
  SubspaceArgs sa;
  std::size_t search_k = 0, samples = 0, max_iso = 0;
  std::uint64_t seed = 1;
  bool assert_lattice = false, no_literature = false, coverage = false, maximal = false;

  auto add_subspace = [&](CLI::App* c) {
    auto* l = c->add_option("--subspace", sa.labels, "Comma-separated basis labels spanning S");
    auto* f = c->add_option("--subspace-file", sa.file, "JSON file {\"rows\": [[\"p/q\", ...], ...]}");
    l->excludes(f);
  };

  auto* catalog = app.add_subcommand("catalog", "List catalog algebras or print one as a definition file");
  catalog->add_option("--show", show, "Catalog id or file to print in the definition format");

  auto* check = app.add_subcommand("check", "Jacobi, stratification, lower central series");
  check->add_option("source", source, "Catalog id (heisenberg_h:2) or algebra file")->required();

  auto* certify = app.add_subcommand("certify", "Isotropy and regularity of a horizontal subspace");
  certify->add_option("source", source)->required();
  add_subspace(certify);
  certify->add_option("--search", search_k, "Search for a certified subspace of this dimension");
  certify->add_option("--samples", samples, "Random candidates after the coordinate search");
  certify->add_option("--seed", seed, "Seed for random candidates");

  auto* predict = app.add_subcommand("predict", "Filling and divergence growth predictions");
  predict->add_option("source", source)->required();
  add_subspace(predict);
  predict->add_flag("--assert-lattice", assert_lattice, "Assume a scalable lattice (degree > 2 only)");
  predict->add_option("--max-isotropic", max_iso, "Asserted maximal dimension of an isotropic subspace");
  predict->add_flag("--no-literature", no_literature, "Ignore literature bounds shipped with the catalog entry");
  predict->add_flag("--coverage", coverage, "Per-dimension coverage table");

  auto* curvature = app.add_subcommand("curvature", "Sectional curvatures and the sign trichotomy");
  curvature->add_option("source", source)->required();
  add_subspace(curvature);
  curvature->add_flag("--maximal", maximal, "Assert that S has maximal dimension");

  auto* pittet = app.add_subcommand("pittet", "Kernel of d on the span of Y* ^ x*");
  pittet->add_option("source", source)->required();

  auto* lattice = app.add_subcommand("lattice", "Scalable lattice and its closure checks");
  lattice->add_option("source", source)->required();

  auto* forms_d = app.add_subcommand("forms-d", "Differential of an invariant form");
  forms_d->add_option("source", source)->required();
  forms_d->add_option("--form", form, "Form literal or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(gl, show);
    if (check->parsed()) return cmd_check(gl, source);
    if (certify->parsed()) return cmd_certify(gl, source, sa, search_k, samples, seed);
    if (predict->parsed()) return cmd_predict(gl, source, sa, assert_lattice, max_iso, no_literature, coverage);
    if (curvature->parsed()) return cmd_curvature(gl, source, sa, maximal);
    if (pittet->parsed()) return cmd_pittet(gl, source);
    if (lattice->parsed()) return cmd_lattice(gl, source);
    if (forms_d->parsed()) return cmd_forms_d(gl, source, form);
  } catch (const carnot::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const carnot::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const carnot::error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
