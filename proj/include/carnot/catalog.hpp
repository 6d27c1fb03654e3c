#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "carnot/algebra.hpp"
#include "carnot/growth.hpp"
#include "carnot/rational.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

struct CatalogEntry {
  std::string builder;  // heisenberg_c | heisenberg_h | heisenberg_o | unipotent | abelian | file
  int n = 0;
  GradedLieAlgebra algebra;
  std::optional<Subspace> designated_subspace;
  std::vector<std::string> notes;
  std::optional<std::size_t> max_isotropic_dim;  // known maximal dimension of an isotropic S in V_1
  std::vector<GrowthBound> literature;           // filling bounds known from other sources

  std::string id() const { return builder == "file" ? algebra.name() : builder + ":" + std::to_string(n); }
};

namespace detail {

struct LabelledBracket {
  std::string left, right, result;
  int coeff = 1;
};

inline GradedLieAlgebra assemble(const std::string& name, const std::vector<std::vector<std::string>>& layer_labels,
                                 const std::vector<LabelledBracket>& brackets) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> layers;
  for (const auto& layer : layer_labels) {
    layers.emplace_back();
    for (const auto& l : layer) {
      layers.back().push_back(labels.size());
      labels.push_back(l);
    }
  }
  auto index = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw internal_error("builder refers to unknown label " + l);
  };
  std::vector<BracketEntry> entries;
  for (const auto& b : brackets) entries.push_back({index(b.left), index(b.right), {{index(b.result), b.coeff}}});
  return GradedLieAlgebra(name, StructureConstants(labels, entries), layers);
}

inline std::vector<std::string> indexed(const std::string& letter, int n) {
  std::vector<std::string> out;
  for (int q = 1; q <= n; ++q) out.push_back(letter + std::to_string(q));
  return out;
}

inline void require_n(int n, int min, const char* builder) {
  if (n < min) throw input_error(std::string(builder) + " needs n >= " + std::to_string(min));
}

inline std::vector<std::string> concat_letters(const std::string& letters, int n) {
  std::vector<std::string> out;
  for (char c : letters) {
    auto part = indexed(std::string(1, c), n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace detail

/// H^n_C: basis j_1..j_n, k_1..k_n, K with [k_q, j_q] = K.
inline CatalogEntry build_heisenberg_c(int n) {
  detail::require_n(n, 1, "heisenberg_c");
  std::vector<detail::LabelledBracket> br;
  for (int q = 1; q <= n; ++q) br.push_back({"k" + std::to_string(q), "j" + std::to_string(q), "K"});
  CatalogEntry e;
  e.builder = "heisenberg_c";
  e.n = n;
  e.algebra = detail::assemble("heisenberg_c:" + std::to_string(n), {detail::concat_letters("jk", n), {"K"}}, br);
  e.notes.push_back("no designated subspace is shipped; span(j1..jn) is isotropic and regular");
  e.notes.push_back("literature filling bounds: F^{j+1} ~ l^{(j+1)/j} for j<n, F^{n+1} ~ l^{(n+2)/n}, F^{j+1} ~ l^{(j+2)/(j+1)} for j>n");
  const int dim = 2 * n + 1;
  for (int j = 1; j + 1 <= dim; ++j) {
    GrowthBound b;
    b.target = Target::Filling;
    b.m = j + 1;
    b.relation = Relation::Equivalent;
    b.source = "literature";
    if (j < n)
      b.exponent = Rational(j + 1, j);
    else if (j == n)
      b.exponent = Rational(n + 2, n);
    else
      b.exponent = Rational(j + 2, j + 1);
    b.exponent->canonicalize();
    e.literature.push_back(b);
  }
  return e;
}

/// H^n_H: basis h, i, j, k (indexed) then I, J, K.
inline CatalogEntry build_heisenberg_h(int n) {
  detail::require_n(n, 1, "heisenberg_h");
  std::vector<detail::LabelledBracket> br;
  for (int q = 1; q <= n; ++q) {
    const auto s = std::to_string(q);
    br.push_back({"i" + s, "h" + s, "I"});
    br.push_back({"j" + s, "h" + s, "J"});
    br.push_back({"k" + s, "h" + s, "K"});
    br.push_back({"k" + s, "j" + s, "I"});
    br.push_back({"i" + s, "k" + s, "J"});
    br.push_back({"j" + s, "i" + s, "K"});
  }
  CatalogEntry e;
  e.builder = "heisenberg_h";
  e.n = n;
  e.algebra = detail::assemble("heisenberg_h:" + std::to_string(n), {detail::concat_letters("hijk", n), {"I", "J", "K"}}, br);
  e.designated_subspace = Subspace::span_of(e.algebra, detail::indexed("h", n));
  e.notes.push_back("Hausdorff dimension from the layer formula is 4n+6; 4n+3 is the topological dimension");
  return e;
}

/// H^n_O: basis d, e, f, g, h, i, j, k (indexed) then E, F, G, H, I, J, K.
inline CatalogEntry build_heisenberg_o(int n) {
  detail::require_n(n, 1, "heisenberg_o");
  // [left, right] = result within one index, as printed in the bracket table.
  static const std::array<std::array<char, 3>, 21> table{{
      {'i', 'f', 'E'}, {'k', 'h', 'E'}, {'j', 'g', 'E'},
      {'e', 'i', 'F'}, {'j', 'h', 'F'}, {'g', 'k', 'F'},
      {'k', 'f', 'G'}, {'e', 'j', 'G'}, {'h', 'i', 'G'},
      {'i', 'g', 'H'}, {'f', 'j', 'H'}, {'e', 'k', 'H'},
      {'g', 'h', 'I'}, {'f', 'e', 'I'}, {'k', 'j', 'I'},
      {'h', 'f', 'J'}, {'g', 'e', 'J'}, {'i', 'k', 'J'},
      {'f', 'g', 'K'}, {'e', 'h', 'K'}, {'j', 'i', 'K'},
  }};
  std::vector<detail::LabelledBracket> br;
  for (int q = 1; q <= n; ++q) {
    const auto s = std::to_string(q);
    for (char a : std::string("efghijk"))
      br.push_back({std::string(1, a) + s, "d" + s, std::string(1, static_cast<char>(a - 'a' + 'A'))});
    for (const auto& [l, r, res] : table) br.push_back({std::string(1, l) + s, std::string(1, r) + s, std::string(1, res)});
  }
  CatalogEntry e;
  e.builder = "heisenberg_o";
  e.n = n;
  e.algebra = detail::assemble("heisenberg_o:" + std::to_string(n),
                               {detail::concat_letters("defghijk", n), {"E", "F", "G", "H", "I", "J", "K"}}, br);
  e.designated_subspace = Subspace::span_of(e.algebra, detail::indexed("d", n));
  e.max_isotropic_dim = static_cast<std::size_t>(n);
  e.notes.push_back("Hausdorff dimension from the layer formula is 8n+14; 8n+7 is the topological dimension");
  e.notes.push_back("no (n+1)-dimensional isotropic subspace exists, so the maximal isotropic dimension is n");
  return e;
}

inline std::string unipotent_label(int n, int u, int v) {
  return n < 10 ? "E" + std::to_string(u) + std::to_string(v) : "E" + std::to_string(u) + "_" + std::to_string(v);
}

/// N_n: strictly upper triangular n x n matrices, basis E_uv ordered by superdiagonal.
///
/// V_s is the s-th superdiagonal, so dim V_1 = n-1 (not n).
inline CatalogEntry build_unipotent(int n) {
  detail::require_n(n, 3, "unipotent");
  std::vector<std::vector<std::string>> layers;
  for (int s = 1; s < n; ++s) {
    layers.emplace_back();
    for (int u = 1; u + s <= n; ++u) layers.back().push_back(unipotent_label(n, u, u + s));
  }
  std::vector<detail::LabelledBracket> br;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int w = v + 1; w <= n; ++w) br.push_back({unipotent_label(n, u, v), unipotent_label(n, v, w), unipotent_label(n, u, w)});
  CatalogEntry e;
  e.builder = "unipotent";
  e.n = n;
  e.algebra = detail::assemble("unipotent:" + std::to_string(n), layers, br);
  std::vector<std::string> iso;
  for (int k = 1; 2 * k <= n; ++k) iso.push_back(unipotent_label(n, 2 * k - 1, 2 * k));
  e.designated_subspace = Subspace::span_of(e.algebra, iso);
  e.notes.push_back("first layer computed as the superdiagonal, dim V_1 = n-1");
  e.notes.push_back("designated subspace span(E_{2k-1,2k}) is isotropic but not regular for n >= 4");
  e.notes.push_back("F^2 >= l^3 holds for n >= 4, so the Euclidean low band fails without regularity");
  return e;
}

inline CatalogEntry build_abelian(int n) {
  detail::require_n(n, 1, "abelian");
  CatalogEntry e;
  e.builder = "abelian";
  e.n = n;
  e.algebra = detail::assemble("abelian:" + std::to_string(n), {detail::indexed("x", n)}, {});
  e.designated_subspace = Subspace::whole(e.algebra);
  return e;
}

/// Builder ids with their parameter range used for catalog-wide checks.
inline std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 3; ++n) out.push_back(build_heisenberg_c(n));
  for (int n = 1; n <= 3; ++n) out.push_back(build_heisenberg_h(n));
  for (int n = 1; n <= 3; ++n) out.push_back(build_heisenberg_o(n));
  for (int n = 3; n <= 6; ++n) out.push_back(build_unipotent(n));
  for (int n = 1; n <= 8; ++n) out.push_back(build_abelian(n));
  return out;
}

// ---- algebra definition files ----

inline nlohmann::ordered_json algebra_to_json(const GradedLieAlgebra& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["basis"] = g.labels();
  auto layers = nlohmann::ordered_json::array();
  for (const auto& layer : g.layers()) {
    auto l = nlohmann::ordered_json::array();
    for (auto i : layer) l.push_back(g.label(i));
    layers.push_back(l);
  }
  j["layers"] = layers;
  auto brackets = nlohmann::ordered_json::array();
  for (const auto& [key, terms] : g.structure().entries()) {
    if (terms.empty()) continue;
    nlohmann::ordered_json b;
    b["left"] = g.label(key.first);
    b["right"] = g.label(key.second);
    auto result = nlohmann::ordered_json::array();
    for (const auto& t : terms) result.push_back({{"basis", g.label(t.index)}, {"coeff", to_string(t.coeff)}});
    b["result"] = result;
    brackets.push_back(b);
  }
  j["brackets"] = brackets;
  return j;
}

inline GradedLieAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw input_error("algebra file must hold a JSON object");
    const std::string name = j.at("name").get<std::string>();
    const auto labels = j.at("basis").get<std::vector<std::string>>();
    auto index = [&](const std::string& l) -> std::size_t {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return i;
      throw input_error("unknown basis label '" + l + "'");
    };
    std::vector<std::vector<std::size_t>> layers;
    for (const auto& layer : j.at("layers")) {
      layers.emplace_back();
      for (const auto& l : layer) layers.back().push_back(index(l.get<std::string>()));
    }
    std::vector<BracketEntry> entries;
    if (j.contains("brackets"))
      for (const auto& b : j.at("brackets")) {
        BracketEntry e{index(b.at("left").get<std::string>()), index(b.at("right").get<std::string>()), {}};
        for (const auto& t : b.at("result"))
          e.result.push_back({index(t.at("basis").get<std::string>()), parse_rational(t.at("coeff").get<std::string>())});
        entries.push_back(std::move(e));
      }
    return GradedLieAlgebra(name, StructureConstants(labels, entries), layers);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed algebra file: ") + e.what());
  }
}

inline GradedLieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open algebra file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("'" + path + "' is not valid JSON: " + e.what());
  }
  return algebra_from_json(j);
}

inline void save_algebra(const GradedLieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write algebra file '" + path + "'");
  out << algebra_to_json(g).dump(2) << '\n';
}

inline void save_algebra(const CatalogEntry& e, const std::string& path) { save_algebra(e.algebra, path); }

/// "builder:n" for catalog entries, anything else is read as a file path.
inline CatalogEntry resolve_source(const std::string& source) {
  const auto colon = source.find(':');
  if (colon != std::string::npos) {
    const std::string builder = source.substr(0, colon);
    const std::string arg = source.substr(colon + 1);
    const bool numeric = !arg.empty() && arg.size() < 6 && arg.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      const int n = std::stoi(arg);
      if (builder == "heisenberg_c") return build_heisenberg_c(n);
      if (builder == "heisenberg_h") return build_heisenberg_h(n);
      if (builder == "heisenberg_o") return build_heisenberg_o(n);
      if (builder == "unipotent") return build_unipotent(n);
      if (builder == "abelian") return build_abelian(n);
    }
  }
  CatalogEntry e;
  e.builder = "file";
  e.algebra = load_algebra(source);
  return e;
}

}  // namespace carnot
