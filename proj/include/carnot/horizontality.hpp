#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/linalg.hpp"
#include "carnot/parallel.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

/// Omega = (omega_1, ..., omega_{n-n1}), one antisymmetric matrix on V_1 per basis vector outside V_1.
///
/// component(i)(a, b) = omega_i(b_{V1[a]}, b_{V1[b]}) = 1/2 * b*_{w_i}([b_{V1[a]}, b_{V1[b]}])
/// where w_i = vertical_indices()[i].
class CurvatureForm {
 public:
  explicit CurvatureForm(const GradedLieAlgebra& g) : algebra_(g) {
    const auto& h = g.horizontal_indices();
    const auto& v = g.vertical_indices();
    std::vector<std::size_t> vertical_pos(g.dim(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vertical_pos[v[i]] = i;
    std::vector<std::size_t> horizontal_pos(g.dim(), h.size());
    for (std::size_t a = 0; a < h.size(); ++a) horizontal_pos[h[a]] = a;
    components_.assign(v.size(), Matrix(h.size(), h.size()));
    const Rational half(1, 2);
    for (const auto& [key, terms] : g.structure().entries()) {
      const auto a = horizontal_pos[key.first], b = horizontal_pos[key.second];
      if (a == h.size() || b == h.size()) continue;
      for (const auto& t : terms) {
        const auto i = vertical_pos[t.index];
        if (i == v.size()) continue;
        components_[i](a, b) = half * t.coeff;
        components_[i](b, a) = -half * t.coeff;
      }
    }
  }

  const GradedLieAlgebra& ambient() const { return algebra_; }
  std::size_t size() const { return components_.size(); }
  const Matrix& component(std::size_t i) const { return components_.at(i); }

  /// omega_i(x, y) for horizontal x, y given in full ambient coordinates.
  Rational evaluate(std::size_t i, const AlgebraVector& x, const AlgebraVector& y) const {
    const auto& h = algebra_.horizontal_indices();
    const auto& m = components_.at(i);
    Rational sum;
    for (std::size_t a = 0; a < h.size(); ++a) {
      if (sgn(x[h[a]]) == 0) continue;
      for (std::size_t b = 0; b < h.size(); ++b)
        if (sgn(m(a, b)) != 0) sum += x[h[a]] * y[h[b]] * m(a, b);
    }
    return sum;
  }

 private:
  GradedLieAlgebra algebra_;
  std::vector<Matrix> components_;
};

inline CurvatureForm curvature_form(const GradedLieAlgebra& g) { return CurvatureForm(g); }

namespace detail {
inline void require_horizontal(const Subspace& s, const char* op) {
  if (!s.is_horizontal()) throw precondition_error(std::string(op) + ": subspace is not contained in V_1");
}
}  // namespace detail

struct IsotropyReport {
  bool isotropic = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // row indices of S with nonzero bracket
};

inline IsotropyReport is_isotropic(const Subspace& s) {
  detail::require_horizontal(s, "is_isotropic");
  const auto& rows = s.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (!bracket(s.ambient(), rows[a], rows[b]).is_zero()) return {false, std::pair{a, b}};
  return {};
}

struct RegularityReport {
  bool regular = false;
  std::size_t rank = 0;
  std::size_t required_rank = 0;
  Matrix matrix;  // rows (i, q) lexicographic, columns the V_1 basis
};

/// Matrix of X -> (omega_i(X, X_q))_{i,q} on the V_1 basis.
inline Matrix regularity_matrix(const Subspace& s, const CurvatureForm& omega) {
  const auto& g = s.ambient();
  const auto& h = g.horizontal_indices();
  Matrix m(omega.size() * s.dim(), h.size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t q = 0; q < s.dim(); ++q)
      for (std::size_t u = 0; u < h.size(); ++u) m(i * s.dim() + q, u) = omega.evaluate(i, g.unit(h[u]), s.rows()[q]);
  return m;
}

inline RegularityReport is_regular(const Subspace& s) {
  detail::require_horizontal(s, "is_regular");
  RegularityReport r;
  r.matrix = regularity_matrix(s, curvature_form(s.ambient()));
  r.rank = rank(r.matrix);
  r.required_rank = r.matrix.rows();
  r.regular = r.rank == r.required_rank;
  return r;
}

/// xi in V_1 with omega_i(xi, X_q) = sigma(i, q), found by row reduction.
inline AlgebraVector solve_regularity(const Subspace& s, const Matrix& sigma) {
  detail::require_horizontal(s, "solve_regularity");
  const auto& g = s.ambient();
  const auto omega = curvature_form(g);
  if (sigma.rows() != omega.size() || sigma.cols() != s.dim())
    throw input_error("sigma must have shape (n - n1) x dim S");
  const auto m = regularity_matrix(s, omega);
  if (rank(m) != m.rows()) throw precondition_error("solve_regularity: subspace is not regular");
  std::vector<Rational> rhs(m.rows());
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t q = 0; q < sigma.cols(); ++q) rhs[i * s.dim() + q] = sigma(i, q);
  const auto x = solve(m, rhs);
  if (!x) throw internal_error("regularity system is singular despite full rank");
  AlgebraVector xi(g.dim());
  const auto& h = g.horizontal_indices();
  for (std::size_t u = 0; u < h.size(); ++u) xi[h[u]] = (*x)[u];
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t q = 0; q < sigma.cols(); ++q)
      if (omega.evaluate(i, xi, s.rows()[q]) != sigma(i, q))
        throw internal_error("regularity solution failed re-evaluation");
  return xi;
}

struct DimensionBound {
  long left = 0;   // dim V_1 - k
  long right = 0;  // k (dim g - dim V_1)
  bool satisfied() const { return left >= right; }
  bool equality() const { return left == right; }
};

/// Necessary condition dim V_1 - k >= k (n - n1) for a k-dimensional isotropic regular S.
inline DimensionBound gromov_dimension_bound(const GradedLieAlgebra& g, long k) {
  if (k < 1) throw precondition_error("dimension bound needs k >= 1");
  const long n = static_cast<long>(g.dim());
  const long n1 = static_cast<long>(g.horizontal_dim());
  return {n1 - k, k * (n - n1)};
}

struct SearchConfig {
  std::size_t random_samples = 0;  // pseudorandom candidates tried after the coordinate subsets
  long max_coeff = 2;              // entries drawn from [-max_coeff, max_coeff]
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t max_candidates = 200000;  // cap on coordinate subsets
};

struct SearchResult {
  std::optional<Subspace> found;
  std::size_t candidates_checked = 0;
  bool coordinate_search_complete = false;
  std::string note;
};

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline char certifies(const Subspace& s, std::size_t k) {
  return s.dim() == k && is_isotropic(s).isotropic && is_regular(s).regular ? 1 : 0;
}

/// First index in enumeration order whose candidate certifies; batches are checked concurrently.
template <class Next>
std::optional<Subspace> first_certified(Next&& next, std::size_t k, unsigned threads, std::size_t& checked) {
  const std::size_t batch = std::max<std::size_t>(64, 16 * static_cast<std::size_t>(std::max(1u, threads)));
  for (;;) {
    std::vector<Subspace> candidates;
    while (candidates.size() < batch) {
      auto c = next();
      if (!c) break;
      candidates.push_back(std::move(*c));
    }
    if (candidates.empty()) return std::nullopt;
    const auto ok = parallel_map(candidates.size(), threads, [&](std::size_t i) { return certifies(candidates[i], k); });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ++checked;
      if (ok[i]) return candidates[i];
    }
  }
}

}  // namespace detail

/// Semi-decision search for a k-dimensional isotropic and regular S in V_1.
///
/// Coordinate subsets of the V_1 basis are tried exhaustively in lexicographic
/// order, then seeded pseudorandom small-integer spans. A miss proves nothing.
inline SearchResult search_certified_subspace(const GradedLieAlgebra& g, std::size_t k, const SearchConfig& cfg = {}) {
  const auto& h = g.horizontal_indices();
  if (k == 0 || k > h.size()) throw input_error("search dimension must lie in [1, dim V_1]");
  SearchResult result;
  const auto bound = gromov_dimension_bound(g, static_cast<long>(k));
  if (!bound.satisfied()) {
    result.note = "dimension bound violated (" + std::to_string(bound.left) + " < " + std::to_string(bound.right) +
                  "); no such subspace exists";
    result.coordinate_search_complete = true;
    return result;
  }
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  bool more = true;
  std::size_t produced = 0;
  auto next_coordinate = [&]() -> std::optional<Subspace> {
    if (!more || produced >= cfg.max_candidates) return std::nullopt;
    std::vector<AlgebraVector> rows;
    for (auto c : combo) rows.push_back(g.unit(h[c]));
    more = detail::next_combination(combo, h.size());
    ++produced;
    return Subspace(g, rows);
  };
  result.found = detail::first_certified(next_coordinate, k, cfg.threads, result.candidates_checked);
  result.coordinate_search_complete = !more;
  if (result.found) return result;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> coeff(-cfg.max_coeff, cfg.max_coeff);
  std::size_t drawn = 0;
  auto next_random = [&]() -> std::optional<Subspace> {
    if (drawn >= cfg.random_samples) return std::nullopt;
    ++drawn;
    std::vector<AlgebraVector> rows;
    for (std::size_t r = 0; r < k; ++r) {
      AlgebraVector v(g.dim());
      for (auto i : h) v[i] = coeff(rng);
      rows.push_back(std::move(v));
    }
    return Subspace(g, rows);
  };
  result.found = detail::first_certified(next_random, k, cfg.threads, result.candidates_checked);
  if (!result.found) result.note = "not found within the search budget; this is not a proof of nonexistence";
  return result;
}

}  // namespace carnot
