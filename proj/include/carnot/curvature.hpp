#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/horizontality.hpp"
#include "carnot/lattice.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

/// Milnor's plane curvature K(e_u, e_v) with the declared basis orthonormal.
inline Rational sectional_curvature(const GradedLieAlgebra& g, std::size_t i, std::size_t j) {
  if (i == j) throw input_error("sectional curvature needs two distinct basis vectors");
  if (i >= g.dim() || j >= g.dim()) throw input_error("basis index out of range");
  const auto& sc = g.structure();
  auto a = [&](std::size_t u, std::size_t v, std::size_t w) { return sc.constant(u, v, w); };
  const Rational half(1, 2), quarter(1, 4);
  Rational k;
  for (std::size_t l = 0; l < g.dim(); ++l) {
    const Rational ijk = a(i, j, l), jki = a(j, l, i), kij = a(l, i, j);
    k += half * ijk * (-ijk + jki + kij);
    k -= quarter * (ijk - jki + kij) * (ijk + jki - kij);
    k -= a(l, i, i) * a(l, j, j);
  }
  return k;
}

/// K_{1,1} = -3/4 sum_k a_{ijk}^2, K_{1,2} = 1/4 sum_{k in V_1} a_{kij}^2, 0 on V_2 x V_2.
inline Rational two_step_closed_forms(const GradedLieAlgebra& g, std::size_t i, std::size_t j) {
  detail::require_two_step(g, "two_step_closed_forms");
  if (i == j) throw input_error("sectional curvature needs two distinct basis vectors");
  if (i >= g.dim() || j >= g.dim()) throw input_error("basis index out of range");
  const auto& sc = g.structure();
  const int li = g.layer_of(i), lj = g.layer_of(j);
  Rational k;
  if (li == 1 && lj == 1) {
    for (auto w : g.vertical_indices()) {
      const auto c = sc.constant(i, j, w);
      k += c * c;
    }
    return Rational(-3, 4) * k;
  }
  if (li == 2 && lj == 2) return 0;
  const std::size_t h = li == 1 ? i : j, z = li == 1 ? j : i;
  for (auto l : g.horizontal_indices()) {
    const auto c = sc.constant(l, h, z);
    k += c * c;
  }
  return Rational(1, 4) * k;
}

/// K over all basis pairs u < v.
inline std::map<std::pair<std::size_t, std::size_t>, Rational> curvature_table(const GradedLieAlgebra& g,
                                                                               unsigned threads = 1) {
  const std::size_t n = g.dim();
  auto rows = detail::parallel_map(n, threads, [&](std::size_t u) {
    std::vector<Rational> row;
    for (std::size_t v = u + 1; v < n; ++v) row.push_back(sectional_curvature(g, u, v));
    return row;
  });
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) out.emplace(std::pair{u, v}, rows[u][v - u - 1]);
  return out;
}

struct TrichotomyItem {
  bool holds = true;
  bool asserted = true;  // false when the item's hypothesis was not supplied
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // (j, i) with the required sign
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // item 1: plane in S with K != 0
  std::optional<std::size_t> failing_direction;                      // items 2, 3: j with no witness
};

struct TrichotomyReport {
  std::vector<std::size_t> subspace_basis;  // basis indices spanning S
  TrichotomyItem flat;                      // item 1: K = 0 inside S
  TrichotomyItem negative;                  // item 2: each V_1 direction outside S has a negative plane with S
  TrichotomyItem positive;                  // item 3: each V_2 direction has a positive plane with S
  bool all_hold() const { return flat.holds && negative.holds && positive.holds; }
};

/// Sign pattern of K for a coordinate subspace S that is isotropic and regular.
///
/// Item 2 is only asserted when the caller vouches that dim S is maximal.
inline TrichotomyReport trichotomy_report(const Subspace& s, bool assume_maximal) {
  const auto& g = s.ambient();
  detail::require_two_step(g, "trichotomy_report");
  detail::require_horizontal(s, "trichotomy_report");
  const auto idx = s.coordinate_indices();
  if (idx.empty() && s.dim() > 0) throw precondition_error("trichotomy_report needs a coordinate subspace");
  if (!is_isotropic(s).isotropic) throw precondition_error("trichotomy_report needs an isotropic subspace");
  if (!is_regular(s).regular) throw precondition_error("trichotomy_report needs a regular subspace");
  TrichotomyReport r;
  r.subspace_basis = idx;
  for (std::size_t a = 0; a < idx.size() && r.flat.holds; ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (sgn(sectional_curvature(g, idx[a], idx[b])) != 0) {
        r.flat.holds = false;
        r.flat.failing_pair = std::pair{idx[a], idx[b]};
        break;
      }
  auto scan = [&](TrichotomyItem& item, const std::vector<std::size_t>& targets, int sign) {
    for (auto j : targets) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      std::optional<std::size_t> hit;
      for (auto i : idx)
        if (sgn(sectional_curvature(g, i, j)) == sign) {
          hit = i;
          break;
        }
      if (!hit) {
        item.holds = false;
        item.failing_direction = j;
        return;
      }
      item.witnesses.emplace_back(j, *hit);
    }
  };
  scan(r.negative, g.horizontal_indices(), -1);
  r.negative.asserted = assume_maximal;
  scan(r.positive, g.vertical_indices(), 1);
  return r;
}

}  // namespace carnot
