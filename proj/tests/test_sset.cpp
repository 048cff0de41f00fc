#include <doctest.h>

#include "gcat/sset.hpp"

using namespace gcat;

namespace {

// Independent oracle for nondegenerate simplices of a product of standard
// simplices: a degree-n pair of monotone tuples is nondegenerate iff no two
// consecutive columns coincide.
int product_nondegenerate_oracle(int dim_a, int dim_b, int degree) {
  std::vector<std::vector<int>> ta, tb;
  std::vector<int> cur;
  auto gen = [&](auto &&self, int dim, int len,
                 std::vector<std::vector<int>> &out) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = cur.empty() ? 0 : cur.back(); v <= dim; ++v) {
      cur.push_back(v);
      self(self, dim, len, out);
      cur.pop_back();
    }
  };
  gen(gen, dim_a, degree + 1, ta);
  gen(gen, dim_b, degree + 1, tb);
  int count = 0;
  for (const auto &a : ta)
    for (const auto &b : tb) {
      bool nondeg = true;
      for (int i = 0; i < degree; ++i)
        if (a[i] == a[i + 1] && b[i] == b[i + 1])
          nondeg = false;
      if (nondeg)
        ++count;
    }
  return count;
}

GSSet two_swapped_points(int trunc) {
  GSSet x = GSSet::with_trivial_action(freeze(constant_sset(2, trunc)),
                                       FinGroup::cyclic(2));
  for (int n = 0; n <= trunc; ++n)
    x.act[1][n] = {1, 0};
  return x;
}

// Bisimplicial set constant in the horizontal direction with vertical
// structure copied from x.
BiSSet constant_horizontal(const TruncatedSSet &x) {
  BiSSet b;
  b.trunc_m = x.trunc;
  b.trunc_n = x.trunc;
  const int N = x.trunc;
  b.counts.assign(N + 1, std::vector<int>(N + 1, 0));
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      b.counts[m][n] = x.counts[n];
  auto alloc = [&](auto &table, bool lowers_m, bool is_face) {
    table.assign(N + 1, {});
    for (int m = 0; m <= N; ++m) {
      table[m].assign(N + 1, {});
      for (int n = 0; n <= N; ++n) {
        int arity = (lowers_m ? m : n) + 1;
        bool defined = lowers_m ? (is_face ? m >= 1 : m < N)
                                : (is_face ? n >= 1 : n < N);
        if (defined)
          table[m][n].assign(arity, std::vector<int>(b.counts[m][n], -1));
      }
    }
  };
  alloc(b.hface, true, true);
  alloc(b.hdegen, true, false);
  alloc(b.vface, false, true);
  alloc(b.vdegen, false, false);
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (int s = 0; s < b.counts[m][n]; ++s) {
        if (m >= 1)
          for (int i = 0; i <= m; ++i)
            b.hface[m][n][i][s] = s;
        if (m < N)
          for (int i = 0; i <= m; ++i)
            b.hdegen[m][n][i][s] = s;
        if (n >= 1)
          for (int j = 0; j <= n; ++j)
            b.vface[m][n][j][s] = x.face[n][j][s];
        if (n < N)
          for (int j = 0; j <= n; ++j)
            b.vdegen[m][n][j][s] = x.degen[n][j][s];
      }
  return b;
}

} // namespace

TEST_CASE("standard complexes validate") {
  CHECK(validate_sset(point_sset(4)).ok());
  CHECK(validate_sset(standard_simplex(1, 2)).ok());
  CHECK(validate_sset(standard_simplex(2, 4)).ok());
  CHECK(validate_sset(boundary_delta2(4)).ok());
  CHECK(validate_sset(constant_sset(3, 3)).ok());
  CHECK(validate_sset(empty_sset(2)).ok());
}

TEST_CASE("corrupted face table names degree and simplex") {
  TruncatedSSet x = standard_simplex(2, 3);
  x.face[2][0][0] = (x.face[2][0][0] + 1) % x.counts[1];
  ValidationReport report = validate_sset(x);
  REQUIRE(!report.ok());
  bool located = false;
  for (const auto &v : report.items)
    if (v.where.find("degree 2") != std::string::npos)
      located = true;
  CHECK(located);
}

TEST_CASE("coproduct of two points") {
  auto parts = std::vector<SSetPtr>{freeze(point_sset(2)), freeze(point_sset(2))};
  CoproductResult co = coproduct(parts);
  CHECK(validate_sset(*co.space).ok());
  CHECK(co.space->counts[0] == 2);
  CHECK(co.space->counts[1] == 2);
  auto nd = nondegenerate_counts(*co.space);
  CHECK(nd[0] == 2);
  CHECK(nd[1] == 0);
  for (const auto &inj : co.injections)
    CHECK(validate_map(inj).ok());
}

TEST_CASE("product with a point is isomorphic to the other factor") {
  SSetPtr x = freeze(standard_simplex(1, 3));
  ProductResult prod = product(freeze(point_sset(3)), x);
  CHECK(validate_sset(*prod.space).ok());
  CHECK(validate_map(prod.proj_right).ok());
  CHECK(is_isomorphism(prod.proj_right).iso);
}

TEST_CASE("Delta1 x Delta1 has two nondegenerate 2-simplices") {
  REQUIRE(product_nondegenerate_oracle(1, 1, 2) == 2);
  ProductResult prod =
      product(freeze(standard_simplex(1, 2)), freeze(standard_simplex(1, 2)));
  CHECK(validate_sset(*prod.space).ok());
  auto nd = nondegenerate_counts(*prod.space);
  CHECK(nd[2] == 2);
  CHECK(nd[1] == product_nondegenerate_oracle(1, 1, 1));
}

TEST_CASE("nondegenerate counts for Delta1 and the point") {
  auto nd1 = nondegenerate_counts(standard_simplex(1, 3));
  CHECK(nd1 == std::vector<long long>{2, 1, 0, 0});
  auto ndp = nondegenerate_counts(point_sset(3));
  CHECK(ndp == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("simplicial map validation catches a broken commutation") {
  SSetPtr d1 = freeze(standard_simplex(1, 2));
  SimplicialMap f = identity_map(d1);
  f.at[1][0] = (f.at[1][0] + 1) % d1->counts[1];
  CHECK(!validate_map(f).ok());
}

TEST_CASE("identity is an isomorphism, point into Delta1 is not") {
  SSetPtr d1 = freeze(standard_simplex(1, 2));
  CHECK(is_isomorphism(identity_map(d1)).iso);
  SimplicialMap inc = constant_map(freeze(point_sset(2)), d1, 0);
  REQUIRE(validate_map(inc).ok());
  IsoResult r = is_isomorphism(inc);
  CHECK(!r.iso);
  CHECK(r.witness.find("degree 0") != std::string::npos);
}

TEST_CASE("two swapped points form a valid GSSet") {
  GSSet x = two_swapped_points(3);
  CHECK(validate_gsset(x).ok());
}

TEST_CASE("fixed subcomplex of the trivial subgroup is everything") {
  GSSet x = two_swapped_points(3);
  FixedSubcomplex fix = fixed_subcomplex(x, Subgroup{{0}});
  CHECK(validate_map(fix.inclusion).ok());
  CHECK(is_isomorphism(fix.inclusion).iso);
}

TEST_CASE("swapped points have empty Z/2-fixed subcomplex") {
  GSSet x = two_swapped_points(3);
  FixedSubcomplex fix = fixed_subcomplex(x, Subgroup{{0, 1}});
  for (int n = 0; n <= 3; ++n)
    CHECK(fix.space->counts[n] == 0);
}

TEST_CASE("fixed subcomplex is monotone in the subgroup") {
  // Z/2 acting on three points by swapping the first two.
  GSSet x = GSSet::with_trivial_action(freeze(constant_sset(3, 2)),
                                       FinGroup::cyclic(2));
  for (int n = 0; n <= 2; ++n)
    x.act[1][n] = {1, 0, 2};
  REQUIRE(validate_gsset(x).ok());
  FixedSubcomplex full = fixed_subcomplex(x, Subgroup{{0}});
  FixedSubcomplex half = fixed_subcomplex(x, Subgroup{{0, 1}});
  for (int n = 0; n <= 2; ++n)
    CHECK(half.space->counts[n] <= full.space->counts[n]);
  CHECK(half.space->counts[0] == 1);
}

TEST_CASE("action maps are bijections with inverse given by the inverse element") {
  GSSet x = two_swapped_points(2);
  SimplicialMap g = x.action_map(1);
  SimplicialMap ginv = x.action_map(x.group.inverse(1));
  SimplicialMap composite = compose_maps(ginv, g);
  for (int n = 0; n <= 2; ++n)
    for (int s = 0; s < x.space->counts[n]; ++s)
      CHECK(composite.at[n][s] == s);
}

TEST_CASE("bisimplicial set constant in one direction diagonals to the other") {
  TruncatedSSet x = standard_simplex(1, 2);
  BiSSet b = constant_horizontal(x);
  CHECK(validate_bisset(b).ok());
  GSSet diag = diagonal(b);
  CHECK(validate_sset(*diag.space).ok());
  REQUIRE(diag.space->counts == x.counts);
  // Identity on ids is an isomorphism of complexes.
  SimplicialMap ident;
  ident.src = diag.space;
  ident.tgt = freeze(x);
  ident.at.resize(x.trunc + 1);
  for (int n = 0; n <= x.trunc; ++n)
    for (int s = 0; s < x.counts[n]; ++s)
      ident.at[n].push_back(s);
  CHECK(validate_map(ident).ok());
  CHECK(is_isomorphism(ident).iso);
}

TEST_CASE("bisimplicial validation catches a broken hv commutation") {
  TruncatedSSet x = standard_simplex(1, 2);
  BiSSet b = constant_horizontal(x);
  b.hface[1][1][0][0] = (b.hface[1][1][0][0] + 1) % b.counts[0][1];
  CHECK(!validate_bisset(b).ok());
}
