#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "carnot/error.hpp"
#include "carnot/rational.hpp"

namespace carnot {

/// Element of the Lie algebra as dense coefficients in the fixed basis order.
class AlgebraVector {
 public:
  AlgebraVector() = default;
  explicit AlgebraVector(std::size_t dim) : coeffs_(dim) {}
  explicit AlgebraVector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraVector unit(std::size_t dim, std::size_t index) {
    AlgebraVector v(dim);
    v.coeffs_.at(index) = 1;
    return v;
  }

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  AlgebraVector& operator+=(const AlgebraVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlgebraVector& operator-=(const AlgebraVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlgebraVector& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const Rational& s, AlgebraVector a) { return a *= s; }
  friend AlgebraVector operator-(AlgebraVector a) { return a *= Rational(-1); }
  friend bool operator==(const AlgebraVector& a, const AlgebraVector& b) = default;

 private:
  void check_same_size(const AlgebraVector& o) const {
    if (o.size() != size()) throw input_error("algebra vector dimension mismatch");
  }
  std::vector<Rational> coeffs_;
};

struct BracketTerm {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// One declared bracket [b_left, b_right] = sum of terms. Either orientation may be given.
struct BracketEntry {
  std::size_t left;
  std::size_t right;
  std::vector<BracketTerm> result;
};

/// A source pair (u < v) whose bracket has a nonzero b_w component.
struct BracketPreimage {
  std::size_t u;
  std::size_t v;
  Rational coeff;
};

/// Basis labels plus structure constants, stored once per unordered pair with u < v.
class StructureConstants {
 public:
  StructureConstants() : data_(std::make_shared<Data>()) {}

  StructureConstants(std::vector<std::string> labels, const std::vector<BracketEntry>& entries) {
    auto built = std::make_shared<Data>();
    auto& d = *built;
    d.labels = std::move(labels);
    for (std::size_t i = 0; i < d.labels.size(); ++i)
      if (!d.index.emplace(d.labels[i], i).second)
        throw input_error("duplicate basis label '" + d.labels[i] + "'");
    const std::size_t n = d.labels.size();
    for (const auto& e : entries) {
      if (e.left >= n || e.right >= n) throw input_error("bracket refers to an unknown basis index");
      if (e.left == e.right)
        throw input_error("bracket [" + d.labels[e.left] + "," + d.labels[e.left] + "] must not be declared");
      const bool flip = e.left > e.right;
      const auto key = flip ? std::pair{e.right, e.left} : std::pair{e.left, e.right};
      std::map<std::size_t, Rational> merged;
      for (const auto& t : e.result) {
        if (t.index >= n) throw input_error("bracket result refers to an unknown basis index");
        merged[t.index] += flip ? Rational(-t.coeff) : t.coeff;
      }
      std::vector<BracketTerm> terms;
      for (auto& [w, c] : merged)
        if (sgn(c) != 0) terms.push_back({w, c});
      if (!d.brackets.emplace(key, std::move(terms)).second)
        throw input_error("bracket of pair (" + d.labels[key.first] + ", " + d.labels[key.second] +
                          ") declared more than once");
    }
    d.preimages.resize(n);
    for (const auto& [key, terms] : d.brackets)
      for (const auto& t : terms) d.preimages[t.index].push_back({key.first, key.second, t.coeff});
    data_ = std::move(built);
  }

  std::size_t dim() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  /// Stored pairs (u < v) with their nonzero result terms, in lexicographic order.
  const std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>>& entries() const {
    return data_->brackets;
  }

  /// [b_u, b_v] as sparse terms, with antisymmetry applied.
  std::vector<BracketTerm> basis_bracket(std::size_t u, std::size_t v) const {
    if (u == v) return {};
    const bool flip = u > v;
    auto it = data_->brackets.find(flip ? std::pair{v, u} : std::pair{u, v});
    if (it == data_->brackets.end()) return {};
    auto terms = it->second;
    if (flip)
      for (auto& t : terms) t.coeff = -t.coeff;
    return terms;
  }

  /// Structure constant c_{uvw} with [b_u, b_v] = sum_w c_{uvw} b_w.
  Rational constant(std::size_t u, std::size_t v, std::size_t w) const {
    for (const auto& t : basis_bracket(u, v))
      if (t.index == w) return t.coeff;
    return 0;
  }

  const std::vector<BracketPreimage>& preimages(std::size_t w) const { return data_->preimages.at(w); }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels && a.data_->brackets == b.data_->brackets;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>> brackets;
    std::vector<std::vector<BracketPreimage>> preimages;
  };
  std::shared_ptr<const Data> data_;
};

/// Bilinear antisymmetric extension of the stored constants.
inline AlgebraVector bracket(const StructureConstants& sc, const AlgebraVector& x, const AlgebraVector& y) {
  if (x.size() != sc.dim() || y.size() != sc.dim())
    throw input_error("bracket: vector dimension does not match the algebra");
  AlgebraVector out(sc.dim());
  for (const auto& [key, terms] : sc.entries()) {
    const Rational weight = x[key.first] * y[key.second] - x[key.second] * y[key.first];
    if (sgn(weight) == 0) continue;
    for (const auto& t : terms) out[t.index] += weight * t.coeff;
  }
  return out;
}

struct JacobiResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> failing_triple;
  AlgebraVector jacobiator;  // value of the cyclic sum at the failing triple
};

/// Checks [[b_u,b_v],b_w] + [[b_v,b_w],b_u] + [[b_w,b_u],b_v] = 0 for all u < v < w.
inline JacobiResult jacobi_check(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<AlgebraVector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(AlgebraVector::unit(n, i));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        auto sum = bracket(sc, bracket(sc, units[u], units[v]), units[w]);
        sum += bracket(sc, bracket(sc, units[v], units[w]), units[u]);
        sum += bracket(sc, bracket(sc, units[w], units[u]), units[v]);
        if (!sum.is_zero()) return {false, std::array{u, v, w}, std::move(sum)};
      }
  return {};
}

/// Lie algebra over Q with a declared grading V_1 + ... + V_d.
///
/// Construction enforces that the layers partition the basis, that no layer is
/// empty, and that brackets are graded: c_{uvw} != 0 with b_u in V_s, b_v in V_t
/// forces b_w in V_{s+t}. The stratification condition [V_1, V_j] = V_{j+1} is
/// validated separately by stratification_check.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;

  GradedLieAlgebra(std::string name, StructureConstants structure, std::vector<std::vector<std::size_t>> layers)
      : name_(std::move(name)), structure_(std::move(structure)), layers_(std::move(layers)) {
    const std::size_t n = structure_.dim();
    if (n == 0) throw input_error("algebra '" + name_ + "' has an empty basis");
    layer_of_.assign(n, 0);
    for (std::size_t s = 0; s < layers_.size(); ++s) {
      if (layers_[s].empty()) throw input_error("layer V_" + std::to_string(s + 1) + " is empty");
      for (auto i : layers_[s]) {
        if (i >= n) throw input_error("layer refers to an unknown basis index");
        if (layer_of_[i] != 0) throw input_error("basis vector '" + structure_.label(i) + "' is in two layers");
        layer_of_[i] = static_cast<int>(s + 1);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (layer_of_[i] == 0) throw input_error("basis vector '" + structure_.label(i) + "' is in no layer");
    for (const auto& [key, terms] : structure_.entries())
      for (const auto& t : terms)
        if (layer_of_[t.index] != layer_of_[key.first] + layer_of_[key.second])
          throw input_error("bracket [" + structure_.label(key.first) + "," + structure_.label(key.second) +
                            "] has a component on '" + structure_.label(t.index) +
                            "' outside layer V_" + std::to_string(layer_of_[key.first] + layer_of_[key.second]));
    for (std::size_t i = 0; i < n; ++i)
      (layer_of_[i] == 1 ? horizontal_ : vertical_).push_back(i);
  }

  const std::string& name() const { return name_; }
  const StructureConstants& structure() const { return structure_; }
  std::size_t dim() const { return structure_.dim(); }
  const std::string& label(std::size_t i) const { return structure_.label(i); }
  const std::vector<std::string>& labels() const { return structure_.labels(); }

  std::size_t index_of(const std::string& label) const {
    if (auto i = structure_.find(label)) return *i;
    throw input_error("unknown basis label '" + label + "' in algebra '" + name_ + "'");
  }

  /// Number of declared layers d.
  std::size_t depth() const { return layers_.size(); }
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }
  /// 1-based layer index of basis vector i.
  int layer_of(std::size_t i) const { return layer_of_.at(i); }

  /// Basis indices of V_1, in basis order.
  const std::vector<std::size_t>& horizontal_indices() const { return horizontal_; }
  /// Basis indices outside V_1, in basis order.
  const std::vector<std::size_t>& vertical_indices() const { return vertical_; }
  std::size_t horizontal_dim() const { return horizontal_.size(); }

  AlgebraVector unit(std::size_t i) const { return AlgebraVector::unit(dim(), i); }
  AlgebraVector unit(const std::string& label) const { return unit(index_of(label)); }

  bool is_horizontal(const AlgebraVector& v) const {
    for (auto i : vertical_)
      if (sgn(v[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
    return a.name_ == b.name_ && structurally_equal(a, b);
  }

  /// Same labels, layers and structure constants; the name is ignored.
  friend bool structurally_equal(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
    return a.structure_ == b.structure_ && a.layers_ == b.layers_;
  }

 private:
  std::string name_;
  StructureConstants structure_;
  std::vector<std::vector<std::size_t>> layers_;
  std::vector<int> layer_of_;
  std::vector<std::size_t> horizontal_;
  std::vector<std::size_t> vertical_;
};

inline AlgebraVector bracket(const GradedLieAlgebra& g, const AlgebraVector& x, const AlgebraVector& y) {
  return bracket(g.structure(), x, y);
}

inline JacobiResult jacobi_check(const GradedLieAlgebra& g) { return jacobi_check(g.structure()); }

/// D = sum_j j * dim V_j.
inline long hausdorff_dimension(const GradedLieAlgebra& g) {
  long d = 0;
  for (std::size_t s = 0; s < g.layers().size(); ++s) d += static_cast<long>(s + 1) * static_cast<long>(g.layers()[s].size());
  return d;
}

/// Graded dilation: multiplies the V_j component by t^j.
///
/// Kept as the per-basis exponent vector; the factor t is substituted when the
/// map is applied, so weight queries never need a symbolic t.
class Dilation {
 public:
  Dilation(const GradedLieAlgebra& g, Rational t) : factor_(std::move(t)) {
    if (sgn(factor_) == 0) throw precondition_error("dilation factor must be nonzero");
    for (std::size_t i = 0; i < g.dim(); ++i) weights_.push_back(g.layer_of(i));
    for (int w = 0; w <= static_cast<int>(g.depth()); ++w) powers_.push_back(pow(factor_, w));
  }

  const Rational& factor() const { return factor_; }
  std::span<const int> weights() const { return weights_; }

  AlgebraVector operator()(const AlgebraVector& x) const {
    if (x.size() != weights_.size()) throw input_error("dilation: vector dimension mismatch");
    AlgebraVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= powers_[static_cast<std::size_t>(weights_[i])];
    return out;
  }

 private:
  Rational factor_;
  std::vector<int> weights_;
  std::vector<Rational> powers_;
};

inline Dilation dilation_weights(const GradedLieAlgebra& g, const Rational& t) { return Dilation(g, t); }

/// Same algebra with basis vectors listed in a new order: new index i is old index order[i].
inline GradedLieAlgebra reorder_basis(const GradedLieAlgebra& g, std::span<const std::size_t> order) {
  const std::size_t n = g.dim();
  if (order.size() != n) throw input_error("reorder_basis: permutation has wrong length");
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || new_index[order[i]] != n) throw input_error("reorder_basis: not a permutation");
    new_index[order[i]] = i;
  }
  std::vector<std::string> labels;
  for (auto old : order) labels.push_back(g.label(old));
  std::vector<BracketEntry> entries;
  for (const auto& [key, terms] : g.structure().entries()) {
    BracketEntry e{new_index[key.first], new_index[key.second], {}};
    for (const auto& t : terms) e.result.push_back({new_index[t.index], t.coeff});
    entries.push_back(std::move(e));
  }
  std::vector<std::vector<std::size_t>> layers;
  for (const auto& layer : g.layers()) {
    std::vector<std::size_t> mapped;
    for (auto i : layer) mapped.push_back(new_index[i]);
    std::sort(mapped.begin(), mapped.end());
    layers.push_back(std::move(mapped));
  }
  return GradedLieAlgebra(g.name(), StructureConstants(std::move(labels), entries), std::move(layers));
}

}  // namespace carnot
