#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace carnot;

namespace {

std::vector<CatalogEntry> two_step_entries() {
  std::vector<CatalogEntry> out;
  for (auto& e : standard_catalog())
    if (e.algebra.depth() <= 2) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST(Group, IdentityAndInverse) {
  oracle::Rng rng(1);
  for (const auto& e : two_step_entries()) {
    const GroupElement x(e.algebra, rng.vector(e.algebra));
    const auto id = GroupElement::identity(e.algebra);
    EXPECT_EQ(multiply(id, x), x);
    EXPECT_EQ(multiply(x, id), x);
    EXPECT_EQ(multiply(x, x.inverse()), id);
    EXPECT_EQ(multiply(x.inverse(), x), id);
  }
}

TEST(Group, ComplexHeisenbergProduct) {
  const auto g = build_heisenberg_c(1).algebra;
  const auto p = multiply(GroupElement(g, g.unit("j1")), GroupElement(g, g.unit("k1")));
  EXPECT_EQ(p.coords(), g.unit("j1") + g.unit("k1") - Rational(1, 2) * g.unit("K"));
}

TEST(Group, MatchesBchOracle) {
  oracle::Rng rng(2);
  for (const auto& e : two_step_entries()) {
    const auto x = rng.vector(e.algebra), y = rng.vector(e.algebra);
    EXPECT_EQ(multiply(GroupElement(e.algebra, x), GroupElement(e.algebra, y)).coords(), oracle::bch2(e.algebra, x, y));
  }
}

TEST(Group, Associative) {
  oracle::Rng rng(3);
  for (const auto& e : two_step_entries()) {
    for (int t = 0; t < 200; ++t) {
      const GroupElement a(e.algebra, rng.vector(e.algebra)), b(e.algebra, rng.vector(e.algebra)),
          c(e.algebra, rng.vector(e.algebra));
      ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c))) << e.id();
    }
  }
}

TEST(Group, RequiresTwoStep) {
  const auto g = build_unipotent(4).algebra;
  EXPECT_THROW(GroupElement(g, g.unit(0)), precondition_error);
  EXPECT_THROW(build_scalable_lattice(g), precondition_error);
}

TEST(Group, ScalingIsHomomorphism) {
  oracle::Rng rng(4);
  const auto g = build_heisenberg_h(2).algebra;
  for (int t = 0; t < 100; ++t) {
    const GroupElement a(g, rng.vector(g)), b(g, rng.vector(g));
    EXPECT_EQ(group_scaling(2, multiply(a, b)), multiply(group_scaling(2, a), group_scaling(2, b)));
  }
  for (const auto& e : two_step_entries()) {
    const GroupElement a(e.algebra, rng.vector(e.algebra));
    EXPECT_EQ(group_scaling(2, group_scaling(3, a)), group_scaling(6, a));
    EXPECT_EQ(group_scaling(1, a), a);
    const auto s = rng.nonzero_rational();
    EXPECT_EQ(group_scaling(1 / s, group_scaling(s, a)), a);
  }
  EXPECT_THROW(group_scaling(0, GroupElement::identity(g)), precondition_error);
}

TEST(Lattice, ComplexHeisenbergGenerators) {
  const auto g = build_heisenberg_c(1).algebra;
  const auto spec = build_scalable_lattice(g);
  ASSERT_EQ(spec.generators().size(), 3u);
  EXPECT_EQ(spec.generators()[0], g.unit("j1"));
  EXPECT_EQ(spec.generators()[1], g.unit("k1"));
  EXPECT_EQ(spec.generators()[2], Rational(1, 2) * bracket(g, g.unit("j1"), g.unit("k1")));
  EXPECT_TRUE(spec.contains(Rational(1, 2) * g.unit("K")));
  EXPECT_FALSE(spec.contains(Rational(1, 4) * g.unit("K")));
}

TEST(Lattice, AbelianIsStandard) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = build_abelian(n).algebra;
    const auto spec = build_scalable_lattice(g);
    for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_EQ(spec.generators()[i], g.unit(i));
    EXPECT_TRUE(check_group_closure(spec).ok);
    EXPECT_TRUE(check_scaling_closure(spec).ok);
  }
}

TEST(Lattice, ClosureOnEveryTwoStepEntry) {
  for (const auto& e : two_step_entries()) {
    const auto spec = build_scalable_lattice(e.algebra);
    const auto group = check_group_closure(spec);
    EXPECT_TRUE(group.ok) << e.id();
    EXPECT_EQ(group.pairs_checked, e.algebra.dim() * e.algebra.dim());
    EXPECT_TRUE(check_scaling_closure(spec).ok) << e.id();
  }
}

TEST(Lattice, GeneratorBracketsStayInside) {
  for (const auto& e : two_step_entries()) {
    const auto spec = build_scalable_lattice(e.algebra);
    for (const auto& a : spec.generators())
      for (const auto& b : spec.generators())
        EXPECT_TRUE(spec.contains(Rational(1, 2) * bracket(e.algebra, a, b))) << e.id();
  }
}

TEST(Lattice, ThreadCountDoesNotChangeResult) {
  const auto spec = build_scalable_lattice(build_heisenberg_o(1).algebra);
  const auto a = check_group_closure(spec, 1), b = check_group_closure(spec, 4);
  EXPECT_EQ(a.ok, b.ok);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
}

TEST(Lattice, CorruptedScaling) {
  // s_2(j1 + K/3) = 2 j1 + 4K/3 is not an integer combination of j1 + K/3, k1 and K/2.
  const auto g = build_heisenberg_c(1).algebra;
  const LatticeSpec spec(g, {g.unit("j1") + Rational(1, 3) * g.unit("K"), g.unit("k1"), Rational(1, 2) * g.unit("K")});
  const auto r = check_scaling_closure(spec);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.violating_generator.has_value());
  EXPECT_EQ(*r.violating_generator, 0u);
}

TEST(Lattice, DividingCentralGeneratorKeepsScalingClosure) {
  // Dividing a V2 generator by 3 rescales a sublattice of the center; s_2 multiplies it by 4, which stays integral.
  const auto g = build_heisenberg_c(1).algebra;
  const LatticeSpec spec(g, {g.unit("j1"), g.unit("k1"), Rational(1, 6) * g.unit("K")});
  EXPECT_TRUE(check_scaling_closure(spec).ok);
}

TEST(Lattice, CorruptedGroupClosure) {
  const auto g = build_heisenberg_c(1).algebra;
  const LatticeSpec spec(g, {g.unit("j1"), g.unit("k1"), g.unit("K")});
  const auto r = check_group_closure(spec);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.violating_pair.has_value());
  EXPECT_EQ(*r.violating_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Lattice, RejectsSingularGenerators) {
  const auto g = build_heisenberg_c(1).algebra;
  EXPECT_THROW(LatticeSpec(g, {g.unit("j1"), g.unit("j1"), g.unit("K")}), input_error);
  EXPECT_THROW(LatticeSpec(g, {g.unit("j1")}), input_error);
}
