#pragma once

// Exponent tables for the three Heisenberg families, written directly from the
// closed-form statements rather than from the predictor's rules.

#include <string>
#include <vector>

#include "carnot/carnot.hpp"

namespace tables {

using carnot::GrowthBound;
using carnot::Rational;
using carnot::Relation;
using carnot::Target;

enum class Family { Complex, Quaternionic, Octonionic };

inline const char* name(Family f) {
  switch (f) {
    case Family::Complex: return "heisenberg_c";
    case Family::Quaternionic: return "heisenberg_h";
    case Family::Octonionic: return "heisenberg_o";
  }
  return "";
}

struct Claim {
  Target target;
  int m;
  Rational exponent;
  Relation relation;  // Equivalent, AtMost, AtLeast or StrictlyAbove
  std::string label;
};

inline Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// Every claim for H^n of the family: filling then divergence.
inline std::vector<Claim> claims(Family f, int n) {
  std::vector<Claim> out;
  auto add = [&](Target t, int m, Rational e, Relation r, std::string label) {
    out.push_back({t, m, std::move(e), r, std::move(label)});
  };
  if (f == Family::Complex) {
    for (int j = 1; j < n; ++j) add(Target::Divergence, j, j + 1, Relation::AtLeast, "C(i)");
    add(Target::Divergence, n, n + 2, Relation::AtLeast, "C(ii)");
    for (int m = n + 1; m < 2 * n; ++m) add(Target::Divergence, m, q((m + 2) * m, m + 1), Relation::Equivalent, "C(iii)");
    return out;
  }
  const int c = f == Family::Quaternionic ? 4 : 8;  // dim V_1 per index
  const int v2 = c - 1;                              // dim V_2
  const std::string tag = f == Family::Quaternionic ? "H" : "O";
  for (int j = 1; j < n; ++j) add(Target::Filling, j + 1, q(j + 1, j), Relation::Equivalent, tag + "(i)");
  add(Target::Filling, n + 1, q(n + 2, n), Relation::AtMost, tag + "(ii)");
  for (int m = v2 * n + v2 + 1; m < c * n + v2; ++m)
    add(Target::Filling, m + 1, q(m + c, m + v2), Relation::Equivalent, tag + "(iii)");
  for (int j = 1; j < n; ++j) add(Target::Divergence, j, j + 1, Relation::AtLeast, tag + "-div(i)");
  for (int m = v2 * n + v2 + 1; m < c * n + v2 - 1; ++m)
    add(Target::Divergence, m, q((m + c) * m, m + v2), Relation::Equivalent, tag + "-div(ii)");
  if (f == Family::Octonionic) add(Target::Filling, n + 1, q(n + 1, n), Relation::StrictlyAbove, "O-strict");
  return out;
}

inline bool satisfies(const GrowthBound& b, const Claim& c) {
  if (b.target != c.target || b.m != c.m || !b.exponent || *b.exponent != c.exponent) return false;
  switch (c.relation) {
    case Relation::Equivalent: return b.relation == Relation::Equivalent;
    case Relation::AtLeast: return b.relation == Relation::AtLeast || b.relation == Relation::Equivalent;
    case Relation::AtMost: return b.relation == Relation::AtMost || b.relation == Relation::Equivalent;
    case Relation::StrictlyAbove: return b.relation == Relation::StrictlyAbove;
    case Relation::Unknown: return false;
  }
  return false;
}

inline GrowthBound as_bound(const Claim& c) { return {c.target, c.m, c.exponent, c.relation, c.label, {}}; }

/// Mismatch descriptions: claims without a matching emitted bound, and emitted bounds that contradict a claim.
inline std::vector<std::string> compare(const std::vector<GrowthBound>& emitted, const std::vector<Claim>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) {
    bool hit = false;
    for (const auto& b : emitted) hit = hit || satisfies(b, c);
    if (!hit)
      out.push_back(std::string(carnot::to_string(c.target)) + "^" + std::to_string(c.m) + " " + c.label + " " +
                    carnot::relation_symbol(c.relation) + " " + carnot::to_string(c.exponent) + " not emitted");
  }
  for (const auto& b : emitted) {
    if (!b.exponent) continue;
    for (const auto& c : cs) {
      if (c.target != b.target || c.m != b.m) continue;
      if (carnot::bounds_conflict({b, as_bound(c)}))
        out.push_back(std::string(carnot::to_string(b.target)) + "^" + std::to_string(b.m) + " from " + b.source +
                      " contradicts " + c.label);
    }
  }
  return out;
}

/// Bundle the predictor sees for H^n of the family: the catalog's designated subspace,
/// or span(j_1..j_n) for the complex family.
inline carnot::HypothesisBundle bundle(Family f, int n) {
  using namespace carnot;
  if (f == Family::Complex) {
    const auto e = build_heisenberg_c(n);
    std::vector<std::string> js;
    for (int i = 1; i <= n; ++i) js.push_back("j" + std::to_string(i));
    return make_bundle(e, Subspace::span_of(e.algebra, js));
  }
  return make_bundle(f == Family::Quaternionic ? build_heisenberg_h(n) : build_heisenberg_o(n));
}

}  // namespace tables
