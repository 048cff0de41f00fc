#include <doctest.h>

#include <set>

#include "gcat/constructions.hpp"

using namespace gcat;

namespace {

CatPtr freeze_cat(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// Independent oracle: count composable chains of a category by DFS over the
// composability relation, without the ChainTable machinery.
long long chain_count_oracle(const FinCategory &c, int length) {
  if (length == 0)
    return c.object_count;
  long long total = 0;
  std::vector<std::vector<int>> out(c.object_count);
  for (int m = 0; m < c.morphism_count(); ++m)
    out[c.src(m)].push_back(m);
  struct Walk {
    const FinCategory &c;
    const std::vector<std::vector<int>> &out;
    long long count = 0;
    void go(int at, int remaining) {
      if (remaining == 0) {
        ++count;
        return;
      }
      for (int m : out[at])
        go(c.tgt(m), remaining - 1);
    }
  } walk{c, out};
  for (int x = 0; x < c.object_count; ++x)
    walk.go(x, length);
  return walk.count;
}

// Independent quotient oracle: connected components via BFS over relation
// edges on (component, simplex) pairs.
int component_count_oracle(int n_items,
                           const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<int>> adj(n_items);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n_items, false);
  int components = 0;
  for (int i = 0; i < n_items; ++i) {
    if (seen[i])
      continue;
    ++components;
    std::vector<int> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      for (int next : adj[at])
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
    }
  }
  return components;
}

// Z/2 swapping objects 1 and 2 of the poset 0 -> 1, 0 -> 2.
std::pair<CatPtr, GCatAction> swapped_span() {
  CatPtr c = freeze_cat(poset_category(3, {{0, 1}, {0, 2}}));
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  a.on_obj[1] = {0, 2, 1};
  std::vector<int> perm(c->morphism_count());
  for (int m = 0; m < c->morphism_count(); ++m) {
    int s = a.on_obj[1][c->src(m)], t = a.on_obj[1][c->tgt(m)];
    perm[m] = c->hom(s, t).at(0);
  }
  a.on_mor[1] = perm;
  return {c, a};
}

std::pair<CatPtr, GCatAction> swapped_pair() {
  CatPtr c = freeze_cat(discrete_category(2));
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  a.on_obj[1] = {1, 0};
  a.on_mor[1] = {1, 0};
  return {c, a};
}

} // namespace

TEST_CASE("nerve of [1] has simplex counts (2,3,4) and validates") {
  CatPtr c = freeze_cat(interval_category());
  CHECK(chain_count_oracle(*c, 0) == 2);
  CHECK(chain_count_oracle(*c, 1) == 3);
  CHECK(chain_count_oracle(*c, 2) == 4);
  NerveResult n = nerve(c, 2);
  CHECK(n.gsset.space->counts == std::vector<int>{2, 3, 4});
  CHECK(validate_gsset(n.gsset).ok());
}

TEST_CASE("nerve of the one-object identity category is a point") {
  CatPtr c = freeze_cat(discrete_category(1));
  NerveResult n = nerve(c, 3);
  for (int d = 0; d <= 3; ++d)
    CHECK(n.gsset.space->counts[d] == 1);
}

TEST_CASE("nerve of a swapped pair exchanges the two 0-simplices") {
  auto [c, a] = swapped_pair();
  NerveResult n = nerve(c, a, 2);
  REQUIRE(validate_gsset(n.gsset).ok());
  CHECK(n.gsset.space->counts[0] == 2);
  CHECK(n.gsset.act[1][0] == std::vector<int>{1, 0});
}

TEST_CASE("nerve of BZ/2 has one nondegenerate simplex per degree") {
  CatPtr c = freeze_cat(group_as_category(FinGroup::cyclic(2)));
  NerveResult n = nerve(c, 3);
  CHECK(validate_gsset(n.gsset).ok());
  // counts are 2^k; exactly one nondegenerate chain (g,g,...,g) per degree
  CHECK(n.gsset.space->counts == std::vector<int>{1, 2, 4, 8});
  CHECK(nondegenerate_counts(*n.gsset.space) ==
        std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("nerve of BZ/2 carries the classifying-space homology") {
  CatPtr c = freeze_cat(group_as_category(FinGroup::cyclic(2)));
  NerveResult n = nerve(c, 4);
  ChainComplex cc = chain_complex(*n.gsset.space);
  HomologyProfile f2 = homology(cc, CoeffSystem::fp(2));
  CHECK(f2.betti == std::vector<long long>{1, 1, 1, 1});
  HomologyProfile integral = homology(cc, CoeffSystem::integral());
  CHECK(integral.betti == std::vector<long long>{1, 0, 0, 0});
  REQUIRE(integral.torsion.size() == 4);
  CHECK(integral.torsion[0].empty());
  REQUIRE(integral.torsion[1].size() == 1);
  CHECK(integral.torsion[1][0] == 2);
  CHECK(integral.torsion[2].empty());
  REQUIRE(integral.torsion[3].size() == 1);
  CHECK(integral.torsion[3][0] == 2);
}

TEST_CASE("comma under the identity of [1] at 0 and its initial object") {
  CatPtr c = freeze_cat(interval_category());
  CommaResult comma = comma_under(identity_functor(c), 0);
  CHECK(comma.objs.size() == 2);
  CHECK(comma.cat->morphism_count() == 3); // two identities + one map
  CHECK(validate_category(*comma.cat).ok());
  // initial object (0, 1_0): exactly one morphism to every object
  int init = comma.object_id({c->identity_of(0), 0, -1});
  for (int o = 0; o < comma.cat->object_count; ++o) {
    int arrows = 0;
    for (int m = 0; m < comma.cat->morphism_count(); ++m)
      if (comma.cat->src(m) == init && comma.cat->tgt(m) == o)
        ++arrows;
    CHECK(arrows == 1);
  }
}

TEST_CASE("two-sided comma of the identity on the point category") {
  CatPtr c = freeze_cat(discrete_category(1));
  CommaResult comma = comma_two_sided(identity_functor(c), 0, 0);
  CHECK(comma.objs.size() == 1);
  CHECK(comma.cat->morphism_count() == 1);
  CHECK(validate_category(*comma.cat).ok());
}

TEST_CASE("comma nerve diagram is a valid right G-functor") {
  auto [c, a] = swapped_span();
  REQUIRE(validate_action(a).ok());
  CommaNerveDiagram d =
      comma_nerve_diagram(identity_functor(c), a, a, 3);
  CHECK(validate_diagram(d.diagram).ok());
  // 0 down C has three objects, 1 down C and 2 down C one each
  CHECK(d.commas[0].objs.size() == 3);
  CHECK(d.commas[1].objs.size() == 1);
  CHECK(d.commas[2].objs.size() == 1);
}

TEST_CASE("colim over a discrete category is the disjoint union") {
  auto [c, a] = swapped_pair();
  SSetDiagram f =
      constant_diagram(c, a, freeze(point_sset(2)), Variance::Covariant);
  ColimResult result = colim(f);
  CHECK(validate_gsset(result.gsset()).ok());
  CHECK(result.gsset().space->counts[0] == 2);
  CHECK(result.gsset().act[1][0] == std::vector<int>{1, 0});
}

TEST_CASE("colim of a collapse over [1] is a point, matching the BFS oracle") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  SSetDiagram f;
  f.cat = c;
  f.action = a;
  f.variance = Variance::Covariant;
  SSetPtr two = freeze(constant_sset(2, 2));
  SSetPtr one = freeze(point_sset(2));
  f.values = {two, one};
  f.maps = {identity_map(two), identity_map(one), constant_map(two, one, 0)};
  f.eta.assign(1, {identity_map(two), identity_map(one)});
  REQUIRE(validate_diagram(f).ok());

  // oracle: degree-0 items are {two:0, two:1, one:0}; the map glues all
  std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 2}};
  CHECK(component_count_oracle(3, edges) == 1);

  ColimResult result = colim(f);
  CHECK(result.gsset().space->counts[0] == 1);
  CHECK(validate_gsset(result.gsset()).ok());
  for (const auto &rho : result.rho())
    CHECK(validate_map(rho).ok());
}

TEST_CASE("colim of the constant point over a connected category is a point") {
  CatPtr c = freeze_cat(chain_category(2));
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  ColimResult result = colim(point_diagram(c, a, 2, Variance::Covariant));
  for (int n = 0; n <= 2; ++n)
    CHECK(result.gsset().space->counts[n] == 1);
}

TEST_CASE("colim factorization satisfies the universal property") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::cyclic(2), c);
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  ColimResult result = colim(f);
  SSetPtr pt = freeze(point_sset(2));
  std::vector<SimplicialMap> cone = {constant_map(f.values[0], pt, 0),
                                     constant_map(f.values[1], pt, 0)};
  SimplicialMap factor = colim_factorize(result, f, cone);
  CHECK(validate_map(factor).ok());
  // unique on generators: factor o rho_X = sigma_X
  for (int x = 0; x < 2; ++x)
    CHECK(compose_maps(factor, result.rho()[x]).at == cone[x].at);
  // equivariant cone (trivial target action): the induced map is equivariant
  GSSet target = GSSet::with_trivial_action(pt, a.group);
  CHECK(check_equivariant_map(factor, result.gsset(), target).ok());

  // incompatible cone: distinguish the two points of F(0) glued by F(f)
  SSetDiagram g;
  g.cat = c;
  g.action = trivial_action(FinGroup::trivial(), c);
  g.variance = Variance::Covariant;
  SSetPtr two = freeze(constant_sset(2, 2));
  SSetPtr one = freeze(point_sset(2));
  g.values = {two, one};
  g.maps = {identity_map(two), identity_map(one), constant_map(two, one, 0)};
  g.eta.assign(1, {identity_map(two), identity_map(one)});
  ColimResult gres = colim(g);
  SimplicialMap embed = identity_map(two);
  std::vector<SimplicialMap> bad = {embed, constant_map(one, two, 1)};
  CHECK_THROWS_AS(colim_factorize(gres, g, bad), Error);
}

TEST_CASE("induce with H = G returns Z itself") {
  FinGroup z2 = FinGroup::cyclic(2);
  GSSet z = GSSet::with_trivial_action(freeze(constant_sset(2, 2)), z2);
  for (int n = 0; n <= 2; ++n)
    z.act[1][n] = {1, 0};
  InduceResult r = induce(z2, Subgroup{{0, 1}}, z);
  CHECK(validate_gsset(r.gsset).ok());
  CHECK(r.gsset.space->counts == z.space->counts);
  CHECK(r.gsset.act == z.act);
}

TEST_CASE("induce from the trivial subgroup of Z/2 doubles a point") {
  FinGroup z2 = FinGroup::cyclic(2);
  GSSet z = GSSet::with_trivial_action(freeze(point_sset(2)),
                                       FinGroup::trivial());
  InduceResult r = induce(z2, Subgroup{{0}}, z);
  CHECK(r.gsset.space->counts[0] == 2);
  CHECK(r.gsset.act[1][0] == std::vector<int>{1, 0});
}

TEST_CASE("induce of a point from Z/2 <= Z/4: generator swaps, square fixes") {
  FinGroup z4 = FinGroup::cyclic(4);
  Subgroup h = subgroup_closure(z4, {2});
  GSSet z = GSSet::with_trivial_action(freeze(point_sset(2)),
                                       subgroup_as_group(z4, h));
  InduceResult r = induce(z4, h, z);
  REQUIRE(validate_gsset(r.gsset).ok());
  CHECK(r.gsset.space->counts[0] == 2);
  CHECK(r.gsset.act[1][0] == std::vector<int>{1, 0});
  CHECK(r.gsset.act[2][0] == std::vector<int>{0, 1});
  // restricting to H on the identity-coset copy recovers Z: the copy embeds
  CHECK(validate_map(r.colimit.rho()[0]).ok());
}

TEST_CASE("fixed subcomplex of an induced point under the full group is empty") {
  FinGroup z2 = FinGroup::cyclic(2);
  GSSet z = GSSet::with_trivial_action(freeze(point_sset(2)),
                                       FinGroup::trivial());
  InduceResult r = induce(z2, Subgroup{{0}}, z);
  FixedSubcomplex fix = fixed_subcomplex(r.gsset, Subgroup{{0, 1}});
  for (int n = 0; n <= 2; ++n)
    CHECK(fix.space->counts[n] == 0);
}

TEST_CASE("coend over a discrete category adds up the diagonal products") {
  auto [c, a] = swapped_pair();
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BiDiagram z = product_bidiagram(f, t);
  ColimResult ce = coend(z);
  CHECK(validate_gsset(ce.gsset()).ok());
  CHECK(ce.gsset().space->counts[0] == 4); // two objects x (2x1 points)
}

TEST_CASE("tensor with the constant point recovers colim") {
  auto [c, a] = swapped_span();
  HomDiagram from0 = hom_from_object(c, trivial_action(a.group, c), 0, 3);
  SSetDiagram f = from0.diagram; // covariant, nontrivial values
  f.action = trivial_action(a.group, c);
  SSetDiagram t = point_diagram(c, trivial_action(a.group, c), 3,
                                Variance::Contravariant);
  TensorResult tens = tensor(f, t);
  ColimResult cl = colim(f);
  REQUIRE(validate_gsset(tens.gsset()).ok());
  REQUIRE(validate_gsset(cl.gsset()).ok());
  // canonical comparison map [(a,*) at X] -> rho_X(a)
  SimplicialMap cmp;
  cmp.src = tens.gsset().space;
  cmp.tgt = cl.gsset().space;
  cmp.at.resize(4);
  for (int n = 0; n <= 3; ++n) {
    cmp.at[n].resize(cmp.src->counts[n]);
    for (int cls = 0; cls < cmp.src->counts[n]; ++cls) {
      auto [x, pair_id] = tens.quotient.reps[n][cls];
      auto [aidx, bidx] = tens.products[x].pair_of(n, pair_id);
      cmp.at[n][cls] = cl.rho()[x].at[n][aidx];
    }
  }
  CHECK(validate_map(cmp).ok());
  CHECK(is_isomorphism(cmp).iso);
}

TEST_CASE("hocolim of the constant point over [1] is Delta1") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  HocolimResult h = hocolim(point_diagram(c, a, 3, Variance::Covariant), 3);
  NerveResult n = nerve(c, 3);
  CHECK(validate_gsset(h.gsset()).ok());
  CHECK(h.gsset().space->counts == n.gsset.space->counts);
  CHECK(nondegenerate_counts(*h.gsset().space) ==
        std::vector<long long>{2, 1, 0, 0});
}

TEST_CASE("hocolim over a swapped pair is two points with the swap action") {
  auto [c, a] = swapped_pair();
  HocolimResult h = hocolim(point_diagram(c, a, 2, Variance::Covariant), 2);
  REQUIRE(validate_gsset(h.gsset()).ok());
  CHECK(h.gsset().space->counts[0] == 2);
  CHECK(h.gsset().act[1][0] == std::vector<int>{1, 0});
}

TEST_CASE("hocolim induced map of a thickening projection is equivariant") {
  auto [c, a] = swapped_span();
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 3)), Variance::Covariant);
  REQUIRE(validate_diagram(f).ok());
  Thickening th = thicken(f);
  HocolimResult from = hocolim(th.thick, 3);
  HocolimResult to = hocolim(f, 3);
  SimplicialMap induced =
      hocolim_induced_map(from, to, th.thick, f, th.projection);
  CHECK(validate_map(induced).ok());
  CHECK(check_equivariant_map(induced, from.gsset(), to.gsset()).ok());
}

TEST_CASE("bar with constant point Z equals the nerve") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  SSetDiagram f = point_diagram(c, a, 2, Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BarFTResult b = bar_ft(f, t, 2);
  NerveResult n = nerve(c, 2);
  CHECK(validate_gsset(b.bar.gsset).ok());
  CHECK(b.bar.gsset.space->counts == n.gsset.space->counts);
  CHECK(b.bar.gsset.space->counts[2] == 4);
}

TEST_CASE("bar over the point category is the product F x T") {
  CatPtr c = freeze_cat(discrete_category(1));
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  SSetDiagram t = constant_diagram(c, a, freeze(standard_simplex(1, 2)),
                                   Variance::Contravariant);
  BarFTResult b = bar_ft(f, t, 2);
  ProductResult p = product(f.values[0], t.values[0]);
  CHECK(b.bar.gsset.space->counts == p.space->counts);
  CHECK(validate_gsset(b.bar.gsset).ok());
}

TEST_CASE("bisimplicial bar validates; its diagonal is the bar construction") {
  auto [c, a] = swapped_span();
  SSetDiagram f =
      constant_diagram(c, a, freeze(constant_sset(2, 2)), Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BiDiagram z = product_bidiagram(f, t);
  BarBiResult bb = bar_bi(z, 2);
  CHECK(validate_bisset(bb.bisset).ok());
  BarResult b = bar(z, 2);
  GSSet diag = diagonal(bb.bisset);
  REQUIRE(diag.space->counts == b.gsset.space->counts);
  // both enumerate (chain, z) blocks in one order; identity is the iso
  SimplicialMap ident;
  ident.src = diag.space;
  ident.tgt = b.gsset.space;
  ident.at.resize(diag.space->trunc + 1);
  for (int n = 0; n <= diag.space->trunc; ++n)
    for (int s = 0; s < diag.space->counts[n]; ++s)
      ident.at[n].push_back(s);
  CHECK(validate_map(ident).ok());
  CHECK(is_isomorphism(ident, &diag, &b.gsset).iso);
}

TEST_CASE("bisimplicial bar over [1] with point Z has 3 simplices at (1,1)") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  SSetDiagram f = point_diagram(c, a, 2, Variance::Covariant);
  SSetDiagram t = point_diagram(c, a, 2, Variance::Contravariant);
  BarBiResult bb = bar_bi(product_bidiagram(f, t), 2);
  NerveResult n = nerve(c, 2);
  CHECK(bb.bisset.counts[1][1] == n.gsset.space->counts[1]);
  CHECK(bb.bisset.counts[1][1] == 3);
}

TEST_CASE("grothendieck over the point category returns the fiber") {
  CatPtr c = freeze_cat(discrete_category(1));
  CatPtr d = freeze_cat(interval_category());
  CatDiagram f;
  f.cat = c;
  f.action = trivial_action(FinGroup::trivial(), c);
  f.values = {d};
  f.maps = {identity_functor(d)};
  f.eta = {{identity_functor(d)}};
  REQUIRE(validate_cat_diagram(f).ok());
  GrothendieckResult g = grothendieck(f);
  CHECK(validate_category(*g.cat).ok());
  CHECK(g.cat->object_count == d->object_count);
  CHECK(g.cat->morphism_count() == d->morphism_count());
}

TEST_CASE("grothendieck of the constant point diagram returns the base") {
  auto [c, a] = swapped_span();
  CatPtr pt = freeze_cat(discrete_category(1));
  CatDiagram f;
  f.cat = c;
  f.action = a;
  f.values.assign(c->object_count, pt);
  f.maps.assign(c->morphism_count(), identity_functor(pt));
  f.eta.assign(a.group.order,
               std::vector<FinFunctor>(c->object_count, identity_functor(pt)));
  REQUIRE(validate_cat_diagram(f).ok());
  GrothendieckResult g = grothendieck(f);
  CHECK(validate_category(*g.cat).ok());
  CHECK(validate_action(g.action).ok());
  CHECK(g.cat->object_count == c->object_count);
  CHECK(g.cat->morphism_count() == c->morphism_count());
}

TEST_CASE("grothendieck with swapped discrete fibers has no fixed object") {
  auto [c, a] = swapped_pair();
  CatPtr two = freeze_cat(discrete_category(2));
  CatDiagram f;
  f.cat = c;
  f.action = a;
  f.values = {two, two};
  f.maps = {identity_functor(two), identity_functor(two)};
  FinFunctor swapf;
  swapf.source = two;
  swapf.target = two;
  swapf.obj = {1, 0};
  swapf.mor = {1, 0};
  f.eta.resize(2);
  f.eta[0] = {identity_functor(two), identity_functor(two)};
  f.eta[1] = {swapf, swapf};
  REQUIRE(validate_cat_diagram(f).ok());
  GrothendieckResult g = grothendieck(f);
  CHECK(g.cat->object_count == 4);
  REQUIRE(validate_action(g.action).ok());
  for (int o = 0; o < 4; ++o)
    CHECK(g.action.on_obj[1][o] != o);
}

TEST_CASE("pushdown along the identity produces comma-over nerves") {
  CatPtr c = freeze_cat(interval_category());
  GCatAction a = trivial_action(FinGroup::trivial(), c);
  SSetDiagram f = point_diagram(c, a, 2, Variance::Covariant);
  PushdownResult push = pushdown(identity_functor(c), a, a, f, 2);
  CHECK(validate_diagram(push.diagram).ok());
  for (int c0 = 0; c0 < 2; ++c0) {
    CommaResult over = comma_over(identity_functor(c), c0);
    NerveResult n = nerve(over.cat, 2);
    CHECK(push.diagram.values[c0]->counts == n.gsset.space->counts);
  }
}

TEST_CASE("pushdown over a swapped span is a valid right G-functor") {
  auto [c, a] = swapped_span();
  auto sub = full_subcategory(c, {0});
  GCatAction ad = action_on_subcategory(a, sub);
  SSetDiagram f = point_diagram(sub.cat, ad, 2, Variance::Covariant);
  PushdownResult push = pushdown(sub.inclusion, ad, a, f, 2);
  CHECK(validate_diagram(push.diagram).ok());
}
