#include <doctest.h>

#include <memory>

#include "gcat/category.hpp"

using namespace gcat;

namespace {

CatPtr freeze(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// Z/2 swapping two discrete objects.
GCatAction swap_action(CatPtr discrete2) {
  GCatAction a = trivial_action(FinGroup::cyclic(2), discrete2);
  a.on_obj[1] = {1, 0};
  a.on_mor[1] = {1, 0};
  return a;
}

// S3 permuting three discrete objects.
GCatAction s3_on_three_points(CatPtr discrete3) {
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  GCatAction a;
  a.group = FinGroup::symmetric3();
  a.cat = discrete3;
  a.on_obj = perms;
  a.on_mor = perms;
  return a;
}

} // namespace

TEST_CASE("interval category [1] validates") {
  FinCategory c = interval_category();
  CHECK(c.object_count == 2);
  CHECK(c.morphism_count() == 3);
  CHECK(validate_category(c).ok());
}

TEST_CASE("group as one-object category validates") {
  FinCategory bz2 = group_as_category(FinGroup::cyclic(2));
  CHECK(bz2.object_count == 1);
  CHECK(bz2.morphism_count() == 2);
  CHECK(validate_category(bz2).ok());
}

TEST_CASE("associativity violation names the offending triple") {
  // One-object monoid {1,a,b} with a∘a=b, a∘b=a, b∘a=b, b∘b=b:
  // (a∘a)∘a = b while a∘(a∘a) = a.
  FinCategory c = make_category(1, {{"a", 0, 0}, {"b", 0, 0}},
                                {{0, 0, 2}, // a∘a = b
                                 {0, 1, 1}, // a∘b = a
                                 {1, 0, 2}, // b∘a = b
                                 {1, 1, 2}});
  ValidationReport report = validate_category(c);
  REQUIRE(!report.ok());
  bool names_triple = false;
  for (const auto &v : report.items)
    if (v.rule == "category.associativity" &&
        v.where.find("a∘a") != std::string::npos)
      names_triple = true;
  CHECK(names_triple);

  FinCategory d = interval_category();
  d.comp[2][0] = 0; // f∘1_0 := 1_0, breaking the unit law
  CHECK(!validate_category(d).ok());
}

TEST_CASE("missing composite on a composable pair is an axiom violation") {
  FinCategory c = chain_category(2);
  // remove the composite of 0->1 and 1->2
  int f01 = c.morphism_by_name("f0_1");
  int f12 = c.morphism_by_name("f1_2");
  REQUIRE(f01 >= 0);
  REQUIRE(f12 >= 0);
  c.comp[f12][f01] = -1;
  ValidationReport report = validate_category(c);
  bool found = false;
  for (const auto &v : report.items)
    if (v.rule == "category.comp-total")
      found = true;
  CHECK(found);
}

TEST_CASE("opposite and product categories validate") {
  FinCategory c = chain_category(2);
  CHECK(validate_category(opposite_category(c)).ok());
  auto prod = product_category(c, opposite_category(c));
  CHECK(validate_category(*prod.cat).ok());
  CHECK(prod.cat->object_count == 9);
}

TEST_CASE("full subcategory keeps composition") {
  CatPtr c = freeze(chain_category(3));
  auto sub = full_subcategory(c, {0, 2, 3});
  CHECK(validate_category(*sub.cat).ok());
  CHECK(validate_functor(sub.inclusion).ok());
  CHECK(sub.cat->object_count == 3);
}

TEST_CASE("stabilizer of a point under S3 has order 2") {
  CatPtr d3 = freeze(discrete_category(3));
  GCatAction a = s3_on_three_points(d3);
  REQUIRE(validate_action(a).ok());
  CHECK(stabilizer(a, 0).order() == 2);
}

TEST_CASE("trivial action stabilizer is the whole group") {
  CatPtr c = freeze(chain_category(1));
  GCatAction a = trivial_action(FinGroup::cyclic(4), c);
  CHECK(stabilizer(a, 0).order() == 4);
}

TEST_CASE("swap action stabilizer is trivial, orbit is everything") {
  CatPtr d2 = freeze(discrete_category(2));
  GCatAction a = swap_action(d2);
  REQUIRE(validate_action(a).ok());
  CHECK(stabilizer(a, 0).order() == 1);
  auto orbs = orbits(a);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0] == std::vector<int>{0, 1});
}

TEST_CASE("trivial action on 3 objects gives three singleton orbits") {
  CatPtr d3 = freeze(discrete_category(3));
  GCatAction a = trivial_action(FinGroup::cyclic(2), d3);
  CHECK(orbits(a).size() == 3);
}

TEST_CASE("Z/4 cyclic shift on 4 objects is one orbit") {
  CatPtr d4 = freeze(discrete_category(4));
  GCatAction a = trivial_action(FinGroup::cyclic(4), d4);
  for (int g = 1; g < 4; ++g) {
    for (int x = 0; x < 4; ++x) {
      a.on_obj[g][x] = (x + g) % 4;
      a.on_mor[g][x] = (x + g) % 4;
    }
  }
  REQUIRE(validate_action(a).ok());
  CHECK(orbits(a).size() == 1);
}

TEST_CASE("orbit-stabilizer: |orbit(X)| * |G_X| = |G|") {
  CatPtr d3 = freeze(discrete_category(3));
  GCatAction a = s3_on_three_points(d3);
  auto orbs = orbits(a);
  for (const auto &orbit : orbs)
    for (int x : orbit)
      CHECK(static_cast<int>(orbit.size()) * stabilizer(a, x).order() ==
            a.group.order);
}

TEST_CASE("non-functorial action is rejected") {
  CatPtr c = freeze(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  a.on_obj[1] = {1, 0}; // swap objects but keep morphisms fixed: breaks src/tgt
  CHECK(!validate_action(a).ok());
}

TEST_CASE("equivariance check flags a non-equivariant functor") {
  CatPtr d2 = freeze(discrete_category(2));
  GCatAction swap = swap_action(d2);
  GCatAction triv = trivial_action(FinGroup::cyclic(2), d2);
  FinFunctor id = identity_functor(d2);
  CHECK(check_equivariant(id, swap, swap).ok());
  CHECK(!check_equivariant(id, swap, triv).ok());
}

TEST_CASE("restricting an action to a subgroup keeps validity") {
  CatPtr d2 = freeze(discrete_category(2));
  GCatAction a = swap_action(d2);
  Subgroup h{{0}};
  GCatAction restricted = restrict_action_to_subgroup(a, h);
  CHECK(restricted.group.order == 1);
  CHECK(validate_action(restricted).ok());
}
