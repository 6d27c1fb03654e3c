#pragma once

#include <string>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/linalg.hpp"

namespace carnot {

namespace detail {

inline Matrix rows_to_matrix(const std::vector<AlgebraVector>& rows, std::size_t dim) {
  Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim) throw input_error("spanning vector has wrong dimension");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

/// Nonzero rows of the reduced row-echelon form of the given vectors.
inline std::vector<AlgebraVector> canonical_rows(const std::vector<AlgebraVector>& rows, std::size_t dim) {
  const auto ech = row_reduce(rows_to_matrix(rows, dim));
  std::vector<AlgebraVector> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) out.emplace_back(ech.reduced.row(r));
  return out;
}

}  // namespace detail

/// Linear subspace of the algebra, stored as the nonzero rows of its RREF.
class Subspace {
 public:
  Subspace() = default;

  Subspace(GradedLieAlgebra algebra, const std::vector<AlgebraVector>& spanning)
      : algebra_(std::move(algebra)), rows_(detail::canonical_rows(spanning, algebra_.dim())) {
    horizontal_ = std::all_of(rows_.begin(), rows_.end(),
                              [&](const AlgebraVector& r) { return algebra_.is_horizontal(r); });
  }

  /// Span of the named basis vectors.
  static Subspace span_of(const GradedLieAlgebra& algebra, const std::vector<std::string>& labels) {
    std::vector<AlgebraVector> rows;
    for (const auto& l : labels) rows.push_back(algebra.unit(l));
    return Subspace(algebra, rows);
  }

  static Subspace whole(const GradedLieAlgebra& algebra) {
    std::vector<AlgebraVector> rows;
    for (std::size_t i = 0; i < algebra.dim(); ++i) rows.push_back(algebra.unit(i));
    return Subspace(algebra, rows);
  }

  const GradedLieAlgebra& ambient() const { return algebra_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<AlgebraVector>& rows() const { return rows_; }
  bool is_horizontal() const { return horizontal_; }

  bool contains(const AlgebraVector& v) const {
    auto rows = rows_;
    rows.push_back(v);
    return rank(detail::rows_to_matrix(rows, algebra_.dim())) == rows_.size();
  }

  /// Basis indices b_i with each row a unit vector, or empty if S is not a coordinate subspace.
  std::vector<std::size_t> coordinate_indices() const {
    std::vector<std::size_t> out;
    for (const auto& r : rows_) {
      std::size_t hits = 0, at = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (sgn(r[i]) != 0) {
          ++hits;
          at = i;
        }
      if (hits != 1 || r[at] != 1) return {};
      out.push_back(at);
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return structurally_equal(a.algebra_, b.algebra_) && a.rows_ == b.rows_;
  }

 private:
  GradedLieAlgebra algebra_;
  std::vector<AlgebraVector> rows_;
  bool horizontal_ = true;
};

}  // namespace carnot
