#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/horizontality.hpp"
#include "carnot/linalg.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

using Monomial = std::vector<std::size_t>;  // strictly increasing basis indices

/// Left-invariant p-form sum c * b*_{i1} ^ ... ^ b*_{ip}; zero coefficients are never stored.
class InvariantForm {
 public:
  InvariantForm() = default;
  InvariantForm(GradedLieAlgebra algebra, std::size_t degree) : algebra_(std::move(algebra)), degree_(degree) {}

  static InvariantForm covector(const GradedLieAlgebra& g, std::size_t i) {
    InvariantForm f(g, 1);
    f.add({i}, 1);
    return f;
  }

  const GradedLieAlgebra& ambient() const { return algebra_; }
  std::size_t degree() const { return degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * b*_{idx[0]} ^ ... in any index order; repeated indices contribute nothing.
  void add(Monomial idx, const Rational& c) {
    if (idx.size() != degree_) throw input_error("monomial degree does not match form degree");
    for (auto i : idx)
      if (i >= algebra_.dim()) throw input_error("monomial index out of range");
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a)
      for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
        if (idx[b - 1] == idx[b]) return;
        std::swap(idx[b - 1], idx[b]);
        sign = -sign;
      }
    accumulate(std::move(idx), sign > 0 ? c : Rational(-c));
  }

  InvariantForm& operator+=(const InvariantForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  InvariantForm& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator*(const Rational& s, InvariantForm a) { return a *= s; }
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) {
    return a + Rational(-1) * b;
  }
  friend bool operator==(const InvariantForm& a, const InvariantForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_ && structurally_equal(a.algebra_, b.algebra_);
  }

  void check_compatible(const InvariantForm& o) const {
    if (!structurally_equal(algebra_, o.algebra_)) throw input_error("forms live on different algebras");
    if (degree_ != o.degree_) throw input_error("forms have different degrees");
  }

 private:
  void accumulate(Monomial m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  GradedLieAlgebra algebra_;
  std::size_t degree_ = 0;
  std::map<Monomial, Rational> terms_;
};

inline InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (!structurally_equal(a.ambient(), b.ambient())) throw input_error("wedge of forms on different algebras");
  InvariantForm out(a.ambient(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

/// Determinant convention: b*_I(X_0..X_{p-1}) = det(b*_{I_r}(X_s)).
inline Rational evaluate(const InvariantForm& f, const std::vector<AlgebraVector>& xs) {
  if (xs.size() != f.degree()) throw input_error("form evaluated on the wrong number of vectors");
  Rational sum;
  for (const auto& [m, c] : f.terms()) {
    Matrix pairing(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t s = 0; s < m.size(); ++s) pairing(r, s) = xs[s][m[r]];
    sum += c * determinant(std::move(pairing));
  }
  return sum;
}

/// (p+1)! d gamma(X_0..X_p) = sum_{s<t} (-1)^{s+t+1} gamma([X_s,X_t], X_0, ..^s..^t.., X_p).
///
/// Sparse: each stored bracket [b_u, b_v] with a b_w component feeds the monomial
/// obtained from J by replacing w with u, v.
inline InvariantForm differential(const InvariantForm& gamma) {
  const auto& g = gamma.ambient();
  const std::size_t p = gamma.degree();
  Rational factorial = 1;
  for (std::size_t i = 2; i <= p + 1; ++i) factorial *= static_cast<long>(i);
  const Rational scale = 1 / factorial;
  InvariantForm out(g, p + 1);
  for (const auto& [J, c] : gamma.terms())
    for (std::size_t pos = 0; pos < J.size(); ++pos) {
      const std::size_t w = J[pos];
      for (const auto& pre : g.structure().preimages(w)) {
        bool clash = false;
        for (std::size_t r = 0; r < J.size() && !clash; ++r)
          clash = r != pos && (J[r] == pre.u || J[r] == pre.v);
        if (clash) continue;
        Monomial I;
        for (std::size_t r = 0; r < J.size(); ++r)
          if (r != pos) I.push_back(J[r]);
        I.push_back(pre.u);
        I.push_back(pre.v);
        std::sort(I.begin(), I.end());
        const auto s = static_cast<std::size_t>(std::find(I.begin(), I.end(), pre.u) - I.begin());
        const auto t = static_cast<std::size_t>(std::find(I.begin(), I.end(), pre.v) - I.begin());
        const bool negative = ((s + t + 1) + pos) % 2 == 1;
        Rational term = c * pre.coeff * scale;
        out.add(std::move(I), negative ? Rational(-term) : term);
      }
    }
  return out;
}

struct ScalingWeight {
  std::optional<long> weight;                          // common weight when homogeneous
  std::vector<std::pair<Monomial, long>> per_monomial;  // filled when mixed
};

/// Weight of b*_{i1} ^ ... ^ b*_{ip} is the sum of the layer indices; pullback by s_t multiplies by t^weight.
inline ScalingWeight scaling_weight(const InvariantForm& gamma) {
  if (gamma.is_zero()) throw precondition_error("scaling weight of the zero form");
  std::vector<std::pair<Monomial, long>> weights;
  for (const auto& [m, c] : gamma.terms()) {
    long w = 0;
    for (auto i : m) w += gamma.ambient().layer_of(i);
    weights.emplace_back(m, w);
  }
  for (const auto& [m, w] : weights)
    if (w != weights.front().second) return {std::nullopt, std::move(weights)};
  return {weights.front().second, {}};
}

/// Basis of V_1 with the rows of S first, completed by standard V_1 vectors in basis order.
inline std::vector<AlgebraVector> adapted_horizontal_basis(const Subspace& s) {
  detail::require_horizontal(s, "adapted_horizontal_basis");
  std::vector<AlgebraVector> basis = s.rows();
  for (auto i : s.ambient().horizontal_indices()) {
    auto trial = basis;
    trial.push_back(s.ambient().unit(i));
    if (rank(detail::rows_to_matrix(trial, s.ambient().dim())) == trial.size()) basis = std::move(trial);
  }
  return basis;
}

/// Wedge of all dual covectors of the basis (horizontal_basis, then V_2, V_3, ... standard vectors)
/// except the first j horizontal ones.
inline InvariantForm cube_form(const GradedLieAlgebra& g, std::size_t j, const std::vector<AlgebraVector>& horizontal_basis) {
  const auto& h = g.horizontal_indices();
  const std::size_t n1 = h.size();
  if (horizontal_basis.size() != n1) throw input_error("cube_form needs a full basis of V_1");
  if (j > n1) throw precondition_error("cube_form: omitted count exceeds dim V_1");
  Matrix q(n1, n1);
  for (std::size_t c = 0; c < n1; ++c) {
    if (!g.is_horizontal(horizontal_basis[c])) throw input_error("cube_form: basis vector is not horizontal");
    for (std::size_t r = 0; r < n1; ++r) q(r, c) = horizontal_basis[c][h[r]];
  }
  const auto dual = inverse(q);  // row r is the covector dual to horizontal_basis[r]
  if (!dual) throw input_error("cube_form: horizontal vectors are not a basis");

  // Wedge of dual rows j..n1-1: coefficient of the monomial on coordinates T is the minor on (rows j.., columns T).
  const std::size_t keep = n1 - j;
  InvariantForm horizontal(g, keep);
  std::vector<std::size_t> cols(keep);
  for (std::size_t i = 0; i < keep; ++i) cols[i] = i;
  bool more = keep > 0;
  while (more) {
    Matrix minor(keep, keep);
    for (std::size_t r = 0; r < keep; ++r)
      for (std::size_t c = 0; c < keep; ++c) minor(r, c) = (*dual)(j + r, cols[c]);
    const Rational det = determinant(std::move(minor));
    if (sgn(det) != 0) {
      Monomial m;
      for (auto c : cols) m.push_back(h[c]);
      horizontal.add(std::move(m), det);
    }
    more = detail::next_combination(cols, n1);
  }
  InvariantForm acc = horizontal;
  if (keep == 0) acc.add({}, 1);
  for (std::size_t layer = 1; layer < g.layers().size(); ++layer)
    for (auto w : g.layers()[layer]) acc = wedge(acc, InvariantForm::covector(g, w));
  return acc;
}

/// d(cube_form) == 0 for S isotropic, omitting j <= dim S - 1 horizontal covectors.
inline bool check_cube_closed(const GradedLieAlgebra& g, const Subspace& s, std::size_t j) {
  if (!structurally_equal(g, s.ambient())) throw input_error("subspace belongs to a different algebra");
  if (s.dim() == 0 || j + 1 > s.dim()) throw precondition_error("check_cube_closed needs j <= dim S - 1");
  if (!is_isotropic(s).isotropic) throw precondition_error("check_cube_closed needs an isotropic subspace");
  return differential(cube_form(g, j, adapted_horizontal_basis(s))).is_zero();
}

struct PittetResult {
  std::size_t space_dim = 0;                // dim V_2 * dim V_1
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (Y, x) basis indices per variable
  Matrix system;                            // rows: 3-form monomials, columns: variables
  std::vector<std::vector<Rational>> kernel;
  std::size_t kernel_dim() const { return kernel.size(); }
};

/// Kernel of alpha -> d(sum alpha_{Y,x} Y* ^ x*) over all pairs Y in V_2, x in V_1.
inline PittetResult pittet_kernel(const GradedLieAlgebra& g) {
  if (g.depth() > 2) throw precondition_error("pittet_kernel needs a 2-step algebra");
  PittetResult r;
  const std::vector<std::size_t> v2 = g.depth() == 2 ? g.layers()[1] : std::vector<std::size_t>{};
  std::vector<InvariantForm> images;
  std::map<Monomial, std::size_t> row_of;
  for (auto y : v2)
    for (auto x : g.horizontal_indices()) {
      r.pairs.emplace_back(y, x);
      images.push_back(differential(wedge(InvariantForm::covector(g, y), InvariantForm::covector(g, x))));
      for (const auto& [m, c] : images.back().terms()) row_of.emplace(m, 0);
    }
  std::size_t next = 0;
  for (auto& [m, row] : row_of) row = next++;
  r.space_dim = r.pairs.size();
  r.system = Matrix(row_of.size(), r.space_dim);
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [m, c] : images[col].terms()) r.system(row_of.at(m), col) = c;
  r.kernel = nullspace(r.system);
  return r;
}

}  // namespace carnot
