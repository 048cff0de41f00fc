#ifndef GCAT_GROUP_HPP
#define GCAT_GROUP_HPP

#include <string>
#include <vector>

#include "gcat/base.hpp"

namespace gcat {

// Finite group as a full multiplication table. Index 0 is the identity.
struct FinGroup {
  int order = 1;
  std::vector<std::vector<int>> mul; // mul[a][b] = a*b

  FinGroup() : mul{{0}} {}
  explicit FinGroup(std::vector<std::vector<int>> table)
      : order(static_cast<int>(table.size())), mul(std::move(table)) {}

  int op(int a, int b) const { return mul[a][b]; }

  int inverse(int a) const {
    for (int b = 0; b < order; ++b)
      if (mul[a][b] == 0 && mul[b][a] == 0)
        return b;
    throw Error(str("group element ", a, " has no two-sided inverse"));
  }

  bool operator==(const FinGroup &other) const = default;

  static FinGroup trivial() { return FinGroup(); }
  static FinGroup cyclic(int n);
  static FinGroup symmetric3();
  static FinGroup klein4();
  static FinGroup direct(const FinGroup &a, const FinGroup &b);
};

ValidationReport validate_group(const FinGroup &g);

// Subset of a parent group's element indices, sorted, containing 0.
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  // Position of g within elements, or -1.
  int position_of(int g) const;

  bool operator==(const Subgroup &other) const = default;
  bool operator<(const Subgroup &other) const;

  std::string to_string() const;
};

bool is_subgroup(const FinGroup &g, const std::vector<int> &elements);

// Closure of the given elements under multiplication (0 always included).
Subgroup subgroup_closure(const FinGroup &g, const std::vector<int> &gens);

// All subgroups, sorted by order then lexicographically by elements.
// Refuses groups above limits.max_group_order.
std::vector<Subgroup> subgroups(const FinGroup &g, const Limits &limits = {});

Subgroup conjugate_subgroup(const FinGroup &g, const Subgroup &h, int by);

// Left cosets aH as sorted element lists; the identity coset comes first,
// the rest ordered by least element. Representative = least element.
std::vector<std::vector<int>> left_cosets(const FinGroup &g, const Subgroup &h);

// The subgroup as a group in its own right; element i of the result is
// h.elements[i] in the parent.
FinGroup subgroup_as_group(const FinGroup &g, const Subgroup &h);

} // namespace gcat

#endif
