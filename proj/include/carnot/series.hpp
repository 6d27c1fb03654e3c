#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

/// Lower central series g = g_1 > g_2 > ... > 0 as RREF row sets, ending with the zero space.
///
/// Works on bare structure constants so that non-nilpotent constant tables can be
/// diagnosed; throws input_error when the series stabilizes above zero.
inline std::vector<std::vector<AlgebraVector>> lower_central_series_rows(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<AlgebraVector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(AlgebraVector::unit(n, i));
  std::vector<std::vector<AlgebraVector>> series{current};
  while (!current.empty()) {
    std::vector<AlgebraVector> images;
    for (std::size_t u = 0; u < n; ++u) {
      const auto bu = AlgebraVector::unit(n, u);
      for (const auto& r : current) {
        auto b = bracket(sc, bu, r);
        if (!b.is_zero()) images.push_back(std::move(b));
      }
    }
    auto next = detail::canonical_rows(images, n);
    if (next.size() == current.size())
      throw input_error("lower central series stabilizes at dimension " + std::to_string(next.size()) +
                        "; the algebra is not nilpotent");
    series.push_back(next);
    current = std::move(next);
  }
  return series;
}

inline std::vector<Subspace> lower_central_series(const GradedLieAlgebra& g) {
  std::vector<Subspace> out;
  for (const auto& rows : lower_central_series_rows(g.structure())) out.emplace_back(g, rows);
  return out;
}

/// Number of nonzero terms of the lower central series.
inline std::size_t nilpotency_degree(const GradedLieAlgebra& g) {
  return lower_central_series_rows(g.structure()).size() - 1;
}

struct StratificationReport {
  bool ok = true;
  std::string diagnostic;
  std::optional<std::size_t> layer;            // j with [V_1, V_j] != V_{j+1}
  std::optional<std::size_t> uncovered_basis;  // first basis vector of V_{j+1} outside the image
};

/// Verifies [V_1, V_j] = V_{j+1} for every j and compares the declared layer
/// dimensions with the lower central series quotients.
inline StratificationReport stratification_check(const GradedLieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto& layers = g.layers();
  for (std::size_t j = 0; j < layers.size(); ++j) {
    std::vector<AlgebraVector> images;
    for (auto u : layers[0])
      for (auto v : layers[j]) {
        auto b = bracket(g, g.unit(u), g.unit(v));
        if (!b.is_zero()) images.push_back(std::move(b));
      }
    const auto image = detail::canonical_rows(images, n);
    const std::size_t target = j + 1 < layers.size() ? layers[j + 1].size() : 0;
    if (image.size() == target) continue;
    StratificationReport r;
    r.ok = false;
    r.layer = j + 1;
    if (image.size() < target) {
      const Subspace span(g, image);
      for (auto w : layers[j + 1])
        if (!span.contains(g.unit(w))) {
          r.uncovered_basis = w;
          break;
        }
      r.diagnostic = "[V_1,V_" + std::to_string(j + 1) + "] has dimension " + std::to_string(image.size()) +
                     " but V_" + std::to_string(j + 2) + " has dimension " + std::to_string(target) +
                     "; basis vector '" + g.label(*r.uncovered_basis) + "' is not covered";
    } else {
      r.diagnostic = "[V_1,V_" + std::to_string(j + 1) + "] is nonzero but no layer V_" + std::to_string(j + 2) +
                     " is declared";
    }
    return r;
  }
  const auto series = lower_central_series_rows(g.structure());
  for (std::size_t j = 0; j < layers.size(); ++j) {
    const std::size_t quotient = j + 1 < series.size() ? series[j].size() - series[j + 1].size() : 0;
    if (quotient != layers[j].size()) {
      StratificationReport r;
      r.ok = false;
      r.layer = j + 1;
      r.diagnostic = "declared dim V_" + std::to_string(j + 1) + " = " + std::to_string(layers[j].size()) +
                     " but the lower central series quotient has dimension " + std::to_string(quotient);
      return r;
    }
  }
  return {};
}

}  // namespace carnot
