#include <doctest.h>

#include "gcat/diagram.hpp"

using namespace gcat;

namespace {

CatPtr freeze_cat(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

GSSet point_with_trivial_action(const FinGroup &g, int trunc) {
  return GSSet::with_trivial_action(freeze(point_sset(trunc)), g);
}

} // namespace

TEST_CASE("constant point diagram is a valid right G-functor") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f = point_diagram(c, a, 3, Variance::Covariant);
  CHECK(validate_diagram(f).ok());
}

TEST_CASE("eta with eta_{1,X} != id cites Def.1 axiom 1") {
  CatPtr c = freeze_cat(discrete_category(2));
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  // corrupt the unit
  f.eta[0][0].at[0] = {1, 0};
  f.eta[0][0].at[1] = {1, 0};
  f.eta[0][0].at[2] = {1, 0};
  ValidationReport report = validate_diagram(f);
  REQUIRE(!report.ok());
  bool cites = false;
  for (const auto &v : report.items)
    if (v.rule.find("Def.1 axiom 1") != std::string::npos)
      cites = true;
  CHECK(cites);
}

TEST_CASE("induced diagram from Z/2 <= Z/4 on a point validates") {
  FinGroup z4 = FinGroup::cyclic(4);
  Subgroup h = subgroup_closure(z4, {2});
  GSSet z = point_with_trivial_action(subgroup_as_group(z4, h), 3);
  InducedDiagram ind = induced_diagram(z4, h, z);
  CHECK(validate_diagram(ind.diagram).ok());
  CHECK(ind.diagram.cat->object_count == 2);
  // generator swaps the two cosets, its square fixes them
  CHECK(ind.diagram.action.on_obj[1] == std::vector<int>{1, 0});
  CHECK(ind.diagram.action.on_obj[2] == std::vector<int>{0, 1});
}

TEST_CASE("restrict_action at the identity coset recovers h acting on Z") {
  // Example 5 with H = Z/2 inside Z/4 and Z = two swapped points.
  FinGroup z4 = FinGroup::cyclic(4);
  Subgroup h = subgroup_closure(z4, {2});
  GSSet z = GSSet::with_trivial_action(freeze(constant_sset(2, 2)),
                                       subgroup_as_group(z4, h));
  for (int n = 0; n <= 2; ++n)
    z.act[1][n] = {1, 0};
  REQUIRE(validate_gsset(z).ok());
  InducedDiagram ind = induced_diagram(z4, h, z);
  REQUIRE(validate_diagram(ind.diagram).ok());
  ObjectAction oa = restrict_action(ind.diagram, 0);
  CHECK(oa.stab.elements == h.elements);
  // g=2 lies in H and must act on F(identity coset) exactly as h does on Z.
  CHECK(oa.maps[1].at == z.act[1]);
  GSSet recovered = value_as_gsset(ind.diagram, 0);
  CHECK(validate_gsset(recovered).ok());
}

TEST_CASE("restrict_action with trivial stabilizer keeps only the identity") {
  FinGroup z2 = FinGroup::cyclic(2);
  GSSet z = point_with_trivial_action(FinGroup::trivial(), 2);
  InducedDiagram ind = induced_diagram(z2, Subgroup{{0}}, z);
  ObjectAction oa = restrict_action(ind.diagram, 0);
  CHECK(oa.stab.order() == 1);
}

TEST_CASE("precompose along the identity leaves the diagram unchanged") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f = point_diagram(c, a, 2, Variance::Covariant);
  SSetDiagram g = precompose(f, identity_functor(c), a);
  CHECK(validate_diagram(g).ok());
  CHECK(g.values.size() == f.values.size());
}

TEST_CASE("precompose rejects a non-equivariant functor naming (g, C)") {
  CatPtr d2 = freeze_cat(discrete_category(2));
  GCatAction swap = trivial_action(FinGroup::cyclic(2), d2);
  swap.on_obj[1] = {1, 0};
  swap.on_mor[1] = {1, 0};
  SSetDiagram f =
      constant_diagram(d2, swap, freeze(point_sset(2)), Variance::Covariant);
  // constant functor to object 0 is not equivariant for the swap
  FinFunctor s;
  s.source = d2;
  s.target = d2;
  s.obj = {0, 0};
  s.mor = {0, 0};
  CHECK_THROWS_WITH_AS(precompose(f, s, swap), doctest::Contains("g=1"),
                       Error);
}

TEST_CASE("postcompose with product functor keeps validity; counts constant "
          "on orbits") {
  FinGroup z4 = FinGroup::cyclic(4);
  Subgroup h = subgroup_closure(z4, {2});
  GSSet z = GSSet::with_trivial_action(freeze(constant_sset(2, 2)),
                                       subgroup_as_group(z4, h));
  for (int n = 0; n <= 2; ++n)
    z.act[1][n] = {1, 0};
  InducedDiagram ind = induced_diagram(z4, h, z);
  ProductWithFunctor functor(freeze(standard_simplex(1, 2)));
  SSetDiagram composed = postcompose(functor, ind.diagram);
  CHECK(validate_diagram(composed).ok());
  for (const auto &orbit : orbits(composed.action)) {
    auto reference = nondegenerate_counts(*composed.values[orbit.front()]);
    for (int x : orbit)
      CHECK(nondegenerate_counts(*composed.values[x]) == reference);
  }
}

TEST_CASE("hom diagrams over [1] validate and have the right sizes") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  HomDiagram from0 = hom_from_object(c, a, 0, 2);
  CHECK(validate_diagram(from0.diagram).ok());
  CHECK(from0.diagram.values[0]->counts[0] == 1); // hom(0,0) = {1_0}
  CHECK(from0.diagram.values[1]->counts[0] == 1); // hom(0,1) = {f}
  HomDiagram into0 = hom_into_object(c, a, 0, 2);
  CHECK(validate_diagram(into0.diagram).ok());
  CHECK(into0.diagram.values[1]->counts[0] == 0); // hom(1,0) empty
}

TEST_CASE("hom bifunctor of the identity on a swapped pair") {
  CatPtr d2 = freeze_cat(discrete_category(2));
  GCatAction swap = trivial_action(FinGroup::cyclic(2), d2);
  swap.on_obj[1] = {1, 0};
  swap.on_mor[1] = {1, 0};
  HomBifunctor hb = hom_bifunctor(identity_functor(d2), swap, swap, 2);
  CHECK(validate_bidiagram(hb.z).ok());
  // hom(0,0) -> hom(1,1) bijectively under g
  CHECK(hb.z.values[0][0]->counts[0] == 1);
  CHECK(hb.z.values[1][1]->counts[0] == 1);
  CHECK(hb.z.eta[1][0][0].at[0][0] == 0);
  // hom(0,1): value(cov=1, contra=0) = hom(F0,F1) is empty in a discrete pair
  CHECK(hb.z.values[1][0]->counts[0] == 0);
}

TEST_CASE("product bidiagram F x T validates") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BiDiagram z = product_bidiagram(f, t);
  CHECK(validate_bidiagram(z).ok());
}

TEST_CASE("thickening validates and projects naturally") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  Thickening th = thicken(f);
  CHECK(validate_diagram(th.thick).ok());
  CHECK(validate_diagram_morphism(th.thick, f, th.projection).ok());
}

TEST_CASE("bidiagram thickening validates with its projection") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f = point_diagram(c, a, 2, Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BiDiagram z = product_bidiagram(f, t);
  BiThickening th = thicken_bidiagram(z);
  CHECK(validate_bidiagram(th.thick).ok());
  CHECK(validate_bidiagram_morphism(th.thick, z, th.projection).ok());
}

TEST_CASE("mixed hom bifunctor over an inclusion validates") {
  CatPtr c = freeze_cat(chain_category(2));
  GCatAction ac = trivial_action(FinGroup::cyclic(2), c);
  auto sub = full_subcategory(c, {0, 2});
  GCatAction ad = action_on_subcategory(ac, sub);
  HomMixed hm = hom_mixed(sub.inclusion, ad, ac, 2);
  CHECK(validate_mixed_bidiagram(hm.t).ok());
  // T(X, Y) = hom(X, S Y): hom(1, obj 2) is a single morphism
  CHECK(hm.t.values[1][1]->counts[0] == 1);
  SSetDiagram fixed = mixed_fix_cov(hm.t, 0);
  CHECK(validate_diagram(fixed).ok());
}
