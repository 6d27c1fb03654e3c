#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/linalg.hpp"
#include "carnot/parallel.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

namespace detail {
inline void require_two_step(const GradedLieAlgebra& g, const char* op) {
  if (g.depth() > 2) throw precondition_error(std::string(op) + " needs an algebra of nilpotency degree <= 2");
}
}  // namespace detail

/// exp(x) in exponential coordinates of the first kind.
class GroupElement {
 public:
  GroupElement(GradedLieAlgebra g, AlgebraVector coords) : algebra_(std::move(g)), coords_(std::move(coords)) {
    detail::require_two_step(algebra_, "GroupElement");
    if (coords_.size() != algebra_.dim()) throw input_error("group element has wrong dimension");
  }

  static GroupElement identity(const GradedLieAlgebra& g) { return {g, AlgebraVector(g.dim())}; }

  const GradedLieAlgebra& ambient() const { return algebra_; }
  const AlgebraVector& coords() const { return coords_; }

  GroupElement inverse() const { return {algebra_, -coords_}; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords_ == b.coords_; }

 private:
  GradedLieAlgebra algebra_;
  AlgebraVector coords_;
};

/// exp(x) exp(y) = exp(x + y + 1/2 [x, y]).
inline GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (!structurally_equal(a.ambient(), b.ambient())) throw input_error("group elements of different groups");
  auto c = a.coords() + b.coords();
  c += Rational(1, 2) * bracket(a.ambient(), a.coords(), b.coords());
  return {a.ambient(), std::move(c)};
}

inline GroupElement group_scaling(const Rational& t, const GroupElement& g) {
  return {g.ambient(), Dilation(g.ambient(), t)(g.coords())};
}

/// Z-span of a full-rank generator list.
class LatticeSpec {
 public:
  LatticeSpec(GradedLieAlgebra g, std::vector<AlgebraVector> generators)
      : algebra_(std::move(g)), generators_(std::move(generators)) {
    detail::require_two_step(algebra_, "LatticeSpec");
    const std::size_t n = algebra_.dim();
    if (generators_.size() != n) throw input_error("lattice needs exactly dim g generators");
    Matrix cols(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      if (generators_[c].size() != n) throw input_error("lattice generator has wrong dimension");
      for (std::size_t r = 0; r < n; ++r) cols(r, c) = generators_[c][r];
    }
    auto inv = carnot::inverse(cols);
    if (!inv) throw input_error("lattice generators are not linearly independent");
    to_lattice_coords_ = std::move(*inv);
  }

  const GradedLieAlgebra& ambient() const { return algebra_; }
  const std::vector<AlgebraVector>& generators() const { return generators_; }

  /// Coefficients of x in the generator basis.
  std::vector<Rational> coordinates(const AlgebraVector& x) const {
    const std::size_t n = algebra_.dim();
    std::vector<Rational> out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(x[c]) != 0) out[r] += to_lattice_coords_(r, c) * x[c];
    return out;
  }

  bool contains(const AlgebraVector& x) const {
    for (const auto& q : coordinates(x))
      if (!is_integer(q)) return false;
    return true;
  }

 private:
  GradedLieAlgebra algebra_;
  std::vector<AlgebraVector> generators_;
  Matrix to_lattice_coords_;
};

/// Standard V_1 basis, then 1/2-brackets of V_1 basis pairs in order while independent,
/// padded with 1/2 times unused standard V_2 vectors.
inline LatticeSpec build_scalable_lattice(const GradedLieAlgebra& g) {
  if (g.depth() > 2) throw precondition_error("build_scalable_lattice needs a 2-step algebra");
  std::vector<AlgebraVector> gens;
  for (auto i : g.horizontal_indices()) gens.push_back(g.unit(i));
  if (g.depth() == 2) {
    const std::size_t n = g.dim();
    std::vector<AlgebraVector> v2;
    auto independent = [&](const AlgebraVector& x) {
      auto trial = v2;
      trial.push_back(x);
      return rank(detail::rows_to_matrix(trial, n)) == trial.size();
    };
    const auto& h = g.horizontal_indices();
    const std::size_t n2 = g.layers()[1].size();
    for (std::size_t a = 0; a < h.size() && v2.size() < n2; ++a)
      for (std::size_t b = a + 1; b < h.size() && v2.size() < n2; ++b) {
        auto half = Rational(1, 2) * bracket(g, g.unit(h[a]), g.unit(h[b]));
        if (!half.is_zero() && independent(half)) v2.push_back(std::move(half));
      }
    for (auto w : g.layers()[1]) {
      if (v2.size() == n2) break;
      auto half = Rational(1, 2) * g.unit(w);
      if (independent(half)) v2.push_back(std::move(half));
    }
    gens.insert(gens.end(), v2.begin(), v2.end());
  }
  return LatticeSpec(g, std::move(gens));
}

struct GroupClosureReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  std::size_t pairs_checked = 0;
};

/// exp(g_a) exp(g_b) stays in exp(Z) for all generator pairs.
inline GroupClosureReport check_group_closure(const LatticeSpec& spec, unsigned threads = 1) {
  const auto& gens = spec.generators();
  const std::size_t n = gens.size();
  auto row_failure = [&](std::size_t a) -> long {
    const GroupElement x(spec.ambient(), gens[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (!spec.contains(multiply(x, GroupElement(spec.ambient(), gens[b])).coords())) return static_cast<long>(b);
    return -1;
  };
  const auto failures = detail::parallel_map(n, threads, row_failure);
  GroupClosureReport r;
  for (std::size_t a = 0; a < n; ++a) {
    if (failures[a] >= 0) {
      r.ok = false;
      r.violating_pair = std::pair{a, static_cast<std::size_t>(failures[a])};
      r.pairs_checked += static_cast<std::size_t>(failures[a]) + 1;
      return r;
    }
    r.pairs_checked += n;
  }
  return r;
}

struct ScalingClosureReport {
  bool ok = true;
  std::optional<std::size_t> violating_generator;
};

/// s_2 maps every generator into Z.
inline ScalingClosureReport check_scaling_closure(const LatticeSpec& spec) {
  const Dilation s2(spec.ambient(), 2);
  for (std::size_t i = 0; i < spec.generators().size(); ++i)
    if (!spec.contains(s2(spec.generators()[i]))) return {false, i};
  return {};
}

}  // namespace carnot
