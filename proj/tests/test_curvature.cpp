#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace carnot;

TEST(Curvature, ComplexHeisenberg) {
  const auto g = build_heisenberg_c(1).algebra;
  EXPECT_EQ(sectional_curvature(g, g.index_of("j1"), g.index_of("k1")), Rational(-3, 4));
  EXPECT_EQ(sectional_curvature(g, g.index_of("j1"), g.index_of("K")), Rational(1, 4));
  EXPECT_THROW(sectional_curvature(g, 0, 0), input_error);
}

TEST(Curvature, AbelianFlat) {
  const auto g = build_abelian(4).algebra;
  for (const auto& [key, k] : curvature_table(g)) EXPECT_EQ(sgn(k), 0);
}

TEST(Curvature, Symmetric) {
  for (const auto& e : standard_catalog()) {
    if (e.algebra.dim() > 16) continue;
    for (std::size_t u = 0; u < e.algebra.dim(); ++u)
      for (std::size_t v = u + 1; v < e.algebra.dim(); ++v)
        EXPECT_EQ(sectional_curvature(e.algebra, u, v), sectional_curvature(e.algebra, v, u)) << e.id();
  }
}

TEST(Curvature, ClosedFormsMatchMilnorSum) {
  for (const auto& e : standard_catalog()) {
    if (e.algebra.depth() > 2) continue;
    for (std::size_t u = 0; u < e.algebra.dim(); ++u)
      for (std::size_t v = 0; v < e.algebra.dim(); ++v)
        if (u != v) {
          ASSERT_EQ(two_step_closed_forms(e.algebra, u, v), sectional_curvature(e.algebra, u, v)) << e.id();
        }
  }
  EXPECT_THROW(two_step_closed_forms(build_unipotent(4).algebra, 0, 1), precondition_error);
}

TEST(Curvature, OctonionicPlane) {
  const auto g = build_heisenberg_o(1).algebra;
  EXPECT_EQ(two_step_closed_forms(g, g.index_of("d1"), g.index_of("e1")), Rational(-3, 4));
  EXPECT_EQ(sgn(two_step_closed_forms(g, g.index_of("E"), g.index_of("I"))), 0);
}

TEST(Curvature, SignsOfClosedForms) {
  for (const auto& e : standard_catalog()) {
    const auto& g = e.algebra;
    if (g.depth() != 2) continue;
    for (auto a : g.horizontal_indices()) {
      for (auto b : g.horizontal_indices()) {
        if (a == b) continue;
        const auto k = two_step_closed_forms(g, a, b);
        EXPECT_LE(sgn(k), 0);
        EXPECT_EQ(sgn(k) == 0, bracket(g, g.unit(a), g.unit(b)).is_zero());
      }
      for (auto z : g.vertical_indices()) EXPECT_GE(sgn(two_step_closed_forms(g, a, z)), 0);
    }
  }
}

TEST(Curvature, TableDeterministicAcrossThreads) {
  const auto g = build_heisenberg_o(1).algebra;
  EXPECT_EQ(curvature_table(g, 1), curvature_table(g, 3));
}

TEST(Curvature, UnipotentGeneralFormula) {
  const auto g = build_unipotent(4).algebra;
  const auto t = curvature_table(g);
  EXPECT_EQ(t.size(), 15u);
  EXPECT_LT(sgn(t.at({g.index_of("E12"), g.index_of("E23")})), 0);
}

TEST(Trichotomy, QuaternionicTwo) {
  const auto e = build_heisenberg_h(2);
  const auto r = trichotomy_report(*e.designated_subspace, true);
  EXPECT_TRUE(r.flat.holds);
  EXPECT_TRUE(r.negative.holds);
  EXPECT_TRUE(r.negative.asserted);
  EXPECT_TRUE(r.positive.holds);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.negative.witnesses.size(), 6u);
  EXPECT_EQ(r.positive.witnesses.size(), 3u);
  for (const auto& [j, i] : r.negative.witnesses) EXPECT_LT(sgn(sectional_curvature(e.algebra, i, j)), 0);
  for (const auto& [j, i] : r.positive.witnesses) EXPECT_GT(sgn(sectional_curvature(e.algebra, i, j)), 0);
}

TEST(Trichotomy, MaximalityNotAssumed) {
  const auto e = build_heisenberg_h(2);
  EXPECT_FALSE(trichotomy_report(*e.designated_subspace, false).negative.asserted);
}

TEST(Trichotomy, OctonionicPositiveWitness) {
  const auto e = build_heisenberg_o(1);
  const auto r = trichotomy_report(*e.designated_subspace, true);
  EXPECT_TRUE(r.positive.holds);
  const auto E = e.algebra.index_of("E");
  bool seen = false;
  for (const auto& [j, i] : r.positive.witnesses)
    if (j == E) {
      seen = true;
      EXPECT_GT(sgn(sectional_curvature(e.algebra, i, j)), 0);
    }
  EXPECT_TRUE(seen);
}

TEST(Trichotomy, IsotropicSubspacesAreFlat) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = build_heisenberg_c(n).algebra;
    std::vector<std::size_t> js;
    for (int q = 1; q <= n; ++q) js.push_back(g.index_of("j" + std::to_string(q)));
    for (std::size_t a = 0; a < js.size(); ++a)
      for (std::size_t b = a + 1; b < js.size(); ++b) EXPECT_EQ(sgn(sectional_curvature(g, js[a], js[b])), 0);
  }
}

TEST(Trichotomy, Preconditions) {
  const auto c = build_heisenberg_c(1).algebra;
  EXPECT_THROW(trichotomy_report(Subspace::span_of(c, {"j1", "k1"}), true), precondition_error);
  const auto n4 = build_unipotent(4);
  EXPECT_THROW(trichotomy_report(*n4.designated_subspace, true), precondition_error);
  const auto h = build_heisenberg_h(1).algebra;
  EXPECT_THROW(trichotomy_report(Subspace(h, {h.unit("h1") + h.unit("i1")}), true), precondition_error);
}
