#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/catalog.hpp"
#include "carnot/growth.hpp"
#include "carnot/horizontality.hpp"
#include "carnot/lattice.hpp"
#include "carnot/series.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

struct BundleOptions {
  bool assert_lattice = false;                   // caller vouches for a lattice with s_2(L) in L
  std::optional<std::size_t> max_isotropic_dim;  // caller-asserted maximal dimension of an isotropic S
  bool use_literature = true;
};

/// Algebra, isotropic S (dim k+1) and the derived flags that gate each prediction rule.
struct HypothesisBundle {
  GradedLieAlgebra algebra;
  Subspace subspace;
  bool regular = false;
  bool lattice_scalable = false;
  std::string lattice_origin;  // "2-step construction", "asserted" or "none"
  std::optional<std::size_t> max_isotropic_dim;
  std::vector<GrowthBound> literature;
  std::vector<std::string> notes;

  long dim() const { return static_cast<long>(algebra.dim()); }
  long k() const { return static_cast<long>(subspace.dim()) - 1; }
  long hausdorff() const { return hausdorff_dimension(algebra); }
  long degree() const { return static_cast<long>(algebra.depth()); }
};

inline HypothesisBundle make_bundle(const Subspace& s, const BundleOptions& opt = {},
                                    const std::vector<GrowthBound>& literature = {},
                                    const std::vector<std::string>& notes = {}) {
  detail::require_horizontal(s, "make_bundle");
  if (s.dim() == 0) throw precondition_error("make_bundle needs a nonzero subspace");
  if (!is_isotropic(s).isotropic) throw precondition_error("make_bundle needs an isotropic subspace");
  HypothesisBundle b;
  b.algebra = s.ambient();
  b.subspace = s;
  b.regular = is_regular(s).regular;
  b.max_isotropic_dim = opt.max_isotropic_dim;
  if (b.max_isotropic_dim && *b.max_isotropic_dim < s.dim())
    throw input_error("asserted maximal isotropic dimension is below dim S");
  if (b.algebra.depth() <= 2) {
    const auto lattice = build_scalable_lattice(b.algebra);
    if (!check_group_closure(lattice).ok || !check_scaling_closure(lattice).ok)
      throw internal_error("scalable lattice construction failed its closure checks");
    b.lattice_scalable = true;
    b.lattice_origin = "2-step construction";
  } else {
    b.lattice_scalable = opt.assert_lattice;
    b.lattice_origin = opt.assert_lattice ? "asserted" : "none";
  }
  if (opt.use_literature) b.literature = literature;
  b.notes = notes;
  if (!b.regular) b.notes.push_back("S is isotropic but not regular; only isotropy-based bounds apply");
  if (!b.lattice_scalable) b.notes.push_back("no scalable lattice known; Euclidean low band reported as lower bounds only");
  return b;
}

/// Bundle for a catalog entry, using its designated subspace unless one is supplied.
inline HypothesisBundle make_bundle(const CatalogEntry& e, const std::optional<Subspace>& s = std::nullopt,
                                    BundleOptions opt = {}) {
  const auto& sub = s ? s : e.designated_subspace;
  if (!sub) throw precondition_error(e.id() + " has no designated subspace; supply one");
  if (!opt.max_isotropic_dim) opt.max_isotropic_dim = e.max_isotropic_dim;
  return make_bundle(*sub, opt, e.literature, e.notes);
}

namespace detail {

inline GrowthBound bound(Target t, long m, Rational e, Relation r, std::string source, std::string note = {}) {
  e.canonicalize();
  return {t, static_cast<int>(m), std::move(e), r, std::move(source), std::move(note)};
}

inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline void sort_bounds(std::vector<GrowthBound>& v) {
  std::stable_sort(v.begin(), v.end(), [](const GrowthBound& a, const GrowthBound& b) { return a.m < b.m; });
}

}  // namespace detail

/// Filling bounds F^m for m = 2..n, with Unknown rows where no rule applies.
inline std::vector<GrowthBound> predict_filling(const HypothesisBundle& b) {
  using detail::bound;
  using detail::ratio;
  const long n = b.dim(), k = b.k(), D = b.hausdorff(), d = b.degree();
  std::vector<GrowthBound> out;
  if (b.regular) {
    for (long j = 1; j <= k && j + 1 <= n; ++j) {
      if (b.lattice_scalable)
        out.push_back(bound(Target::Filling, j + 1, ratio(j + 1, j), Relation::Equivalent, "Thm1"));
      else
        out.push_back(bound(Target::Filling, j + 1, ratio(j + 1, j), Relation::AtLeast, "Propeta",
                            "upper bound needs a scalable lattice"));
    }
    if (k + 2 <= n) {
      if (b.lattice_scalable)
        out.push_back(bound(Target::Filling, k + 2, ratio(k + 1 + d, k + 1), Relation::AtMost, "Thm1-upper"));
      if (b.max_isotropic_dim && static_cast<long>(*b.max_isotropic_dim) == k + 1)
        out.push_back(bound(Target::Filling, k + 2, ratio(k + 2, k + 1), Relation::StrictlyAbove, "Thm4b",
                            "maximal regular and maximal isotropic dimensions coincide; condition a) is not checked"));
    }
    if (b.lattice_scalable)
      for (long j = 0; j <= k - 1 && n - j >= 2; ++j)
        out.push_back(bound(Target::Filling, n - j, ratio(D - j, D - j - 1), Relation::Equivalent, "Thm2"));
  }
  for (long j = 0; j <= k && n - j >= 2; ++j) {
    const bool covered = b.regular && b.lattice_scalable && j <= k - 1;
    if (!covered)
      out.push_back(bound(Target::Filling, n - j, ratio(D - j, D - j - 1), Relation::AtLeast, "toplow"));
  }
  for (const auto& lit : b.literature)
    if (lit.target == Target::Filling) out.push_back(lit);
  detail::sort_bounds(out);
  for (long m = 2; m <= n; ++m)
    if (std::none_of(out.begin(), out.end(), [&](const GrowthBound& g) { return g.m == m; }))
      out.push_back({Target::Filling, static_cast<int>(m), std::nullopt, Relation::Unknown, "unknown", {}});
  detail::sort_bounds(out);
  return out;
}

/// Divergence bounds Div^m for m = 1..n-2, transferred from the filling bounds on F^{m+1}:
/// lower bounds give Div^m >= r^{delta m}; upper bounds with delta < (m+1)/m give Div^m <= r^{delta m}.
inline std::vector<GrowthBound> predict_divergence(const HypothesisBundle& b) {
  const auto filling = predict_filling(b);
  const long n = b.dim();
  std::vector<GrowthBound> out;
  for (long m = 1; m <= n - 2; ++m) {
    const GrowthBound* lower = nullptr;
    const GrowthBound* upper = nullptr;
    for (const auto& f : filling) {
      if (f.m != m + 1 || !f.exponent) continue;
      const bool is_lower = f.relation == Relation::Equivalent || f.relation == Relation::AtLeast ||
                            f.relation == Relation::StrictlyAbove;
      const bool is_upper = (f.relation == Relation::Equivalent || f.relation == Relation::AtMost) &&
                            *f.exponent < detail::ratio(m + 1, m);
      if (is_lower && (!lower || *f.exponent > *lower->exponent)) lower = &f;
      if (is_upper && (!upper || *f.exponent < *upper->exponent)) upper = &f;
    }
    auto note_for = [&](const GrowthBound* f) {
      return f->source == "Thm2" ? std::string("indexed as Div^{n-j-1} per Thm7(ii); the Thm6 form Div^{n-j} is off by one")
                                 : std::string();
    };
    if (lower && upper && *lower->exponent == *upper->exponent) {
      out.push_back(detail::bound(Target::Divergence, m, *lower->exponent * m, Relation::Equivalent,
                                  "Divlow+Divup(" + lower->source + (upper->source == lower->source ? "" : "," + upper->source) + ")",
                                  note_for(upper)));
      continue;
    }
    if (lower)
      out.push_back(detail::bound(Target::Divergence, m, *lower->exponent * m, Relation::AtLeast,
                                  "Divlow(" + lower->source + ")", note_for(lower)));
    if (upper)
      out.push_back(detail::bound(Target::Divergence, m, *upper->exponent * m, Relation::AtMost,
                                  "Divup(" + upper->source + ")", note_for(upper)));
    if (!lower && !upper)
      out.push_back({Target::Divergence, static_cast<int>(m), std::nullopt, Relation::Unknown, "unknown", {}});
  }
  return out;
}

struct CoverageRow {
  Target target = Target::Filling;
  int m = 0;
  std::vector<GrowthBound> bounds;
  bool unknown = false;
  bool conflict = false;
};

struct CoverageTable {
  std::vector<CoverageRow> rows;
  std::vector<std::string> notes;
};

/// True when no exponent satisfies every bound in the list.
inline bool bounds_conflict(const std::vector<GrowthBound>& bounds) {
  std::optional<Rational> lo, hi;
  bool lo_strict = false;
  for (const auto& b : bounds) {
    if (!b.exponent) continue;
    const auto& e = *b.exponent;
    const bool raises_lo = b.relation == Relation::Equivalent || b.relation == Relation::AtLeast ||
                           b.relation == Relation::StrictlyAbove;
    if (raises_lo) {
      const bool strict = b.relation == Relation::StrictlyAbove;
      if (!lo || e > *lo) {
        lo = e;
        lo_strict = strict;
      } else if (e == *lo) {
        lo_strict = lo_strict || strict;
      }
    }
    if ((b.relation == Relation::Equivalent || b.relation == Relation::AtMost) && (!hi || e < *hi)) hi = e;
  }
  if (!lo || !hi) return false;
  return *lo > *hi || (*lo == *hi && lo_strict);
}

inline CoverageTable coverage_table(const HypothesisBundle& b) {
  CoverageTable t;
  auto add_rows = [&](Target target, const std::vector<GrowthBound>& bounds, long from, long to) {
    for (long m = from; m <= to; ++m) {
      CoverageRow row;
      row.target = target;
      row.m = static_cast<int>(m);
      for (const auto& g : bounds)
        if (g.m == m) row.bounds.push_back(g);
      row.unknown = row.bounds.size() == 1 && row.bounds.front().relation == Relation::Unknown;
      row.conflict = bounds_conflict(row.bounds);
      t.rows.push_back(std::move(row));
    }
  };
  add_rows(Target::Filling, predict_filling(b), 2, b.dim());
  add_rows(Target::Divergence, predict_divergence(b), 1, b.dim() - 2);
  t.notes = b.notes;
  return t;
}

}  // namespace carnot
