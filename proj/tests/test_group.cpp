#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcat/group.hpp"

using namespace gcat;

namespace {

// Independent oracle: enumerate all subsets closed under multiplication and
// containing the identity. Only usable for small orders.
int brute_force_subgroup_count(const FinGroup &g) {
  int count = 0;
  for (unsigned mask = 1; mask < (1u << g.order); ++mask) {
    if (!(mask & 1u))
      continue;
    std::vector<int> elems;
    for (int i = 0; i < g.order; ++i)
      if (mask & (1u << i))
        elems.push_back(i);
    if (is_subgroup(g, elems))
      ++count;
  }
  return count;
}

} // namespace

TEST_CASE("Z/2 multiplication table is valid") {
  FinGroup z2 = FinGroup::cyclic(2);
  CHECK(validate_group(z2).ok());
  CHECK(z2.inverse(1) == 1);
}

TEST_CASE("constructed associativity violation is reported with its triple") {
  FinGroup bad = FinGroup::cyclic(3);
  bad.mul[1][1] = 1; // breaks associativity and inverses
  ValidationReport report = validate_group(bad);
  CHECK(!report.ok());
  bool names_assoc = false;
  for (const auto &v : report.items)
    if (v.rule == "group.associativity")
      names_assoc = true;
  CHECK(names_assoc);
}

TEST_CASE("malformed table is a format error, not an axiom violation") {
  FinGroup bad;
  bad.order = 3;
  bad.mul = {{0, 1}, {1, 2}}; // wrong shape
  ValidationReport report = validate_group(bad);
  CHECK(report.has_format_errors());
}

TEST_CASE("group catalog validates") {
  for (const FinGroup &g :
       {FinGroup::trivial(), FinGroup::cyclic(4), FinGroup::cyclic(6),
        FinGroup::klein4(), FinGroup::symmetric3()})
    CHECK(validate_group(g).ok());
}

TEST_CASE("subgroup counts match brute-force oracle") {
  // Frozen expectations computed by the subset-closure oracle below.
  FinGroup z2 = FinGroup::cyclic(2);
  FinGroup z4 = FinGroup::cyclic(4);
  FinGroup s3 = FinGroup::symmetric3();

  CHECK(brute_force_subgroup_count(z2) == 2);
  CHECK(brute_force_subgroup_count(z4) == 3);
  CHECK(brute_force_subgroup_count(s3) == 6);

  CHECK(subgroups(z2).size() == 2);
  CHECK(subgroups(z4).size() == 3);
  CHECK(subgroups(s3).size() == 6);

  FinGroup v4 = FinGroup::klein4();
  CHECK(static_cast<int>(subgroups(v4).size()) ==
        brute_force_subgroup_count(v4));
}

TEST_CASE("subgroups are sorted, include trivial and full, and are closed") {
  FinGroup s3 = FinGroup::symmetric3();
  auto subs = subgroups(s3);
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 6);
  for (size_t i = 1; i < subs.size(); ++i)
    CHECK(subs[i - 1].order() <= subs[i].order());
  for (const auto &h : subs)
    CHECK(is_subgroup(s3, h.elements));
}

TEST_CASE("subgroup list is closed under conjugation") {
  FinGroup s3 = FinGroup::symmetric3();
  auto subs = subgroups(s3);
  std::set<std::vector<int>> all;
  for (const auto &h : subs)
    all.insert(h.elements);
  for (const auto &h : subs)
    for (int g = 0; g < s3.order; ++g)
      CHECK(all.count(conjugate_subgroup(s3, h, g).elements) == 1);
}

TEST_CASE("subgroup enumeration refuses above the cap") {
  Limits limits;
  limits.max_group_order = 4;
  CHECK_THROWS_AS(subgroups(FinGroup::symmetric3(), limits), Error);
}

TEST_CASE("left cosets partition the group, identity coset first") {
  FinGroup z4 = FinGroup::cyclic(4);
  Subgroup h = subgroup_closure(z4, {2});
  auto cosets = left_cosets(z4, h);
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0] == std::vector<int>{0, 2});
  CHECK(cosets[1] == std::vector<int>{1, 3});
}

TEST_CASE("subgroup as group reindexes the table") {
  FinGroup s3 = FinGroup::symmetric3();
  Subgroup h = subgroup_closure(s3, {1}); // the 3-cycle subgroup
  REQUIRE(h.order() == 3);
  FinGroup c3 = subgroup_as_group(s3, h);
  CHECK(validate_group(c3).ok());
  CHECK(c3.order == 3);
}
