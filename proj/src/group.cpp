#include "gcat/group.hpp"

#include <algorithm>
#include <set>

namespace gcat {

FinGroup FinGroup::cyclic(int n) {
  if (n < 1)
    throw Error("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = (a + b) % n;
  return FinGroup(std::move(table));
}

FinGroup FinGroup::symmetric3() {
  // Elements as permutations of {0,1,2}; index 0 = identity, 1..2 the
  // 3-cycles, 3..5 the transpositions. Composition: (a*b)(x) = a(b(x)).
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto find = [&](const std::vector<int> &p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p)
        return i;
    throw Error("symmetric3: permutation lookup failed");
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x)
        c[x] = perms[a][perms[b][x]];
      table[a][b] = find(c);
    }
  return FinGroup(std::move(table));
}

FinGroup FinGroup::klein4() {
  return direct(cyclic(2), cyclic(2));
}

FinGroup FinGroup::direct(const FinGroup &a, const FinGroup &b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table[enc(x1, y1)][enc(x2, y2)] =
              enc(a.mul[x1][x2], b.mul[y1][y2]);
  return FinGroup(std::move(table));
}

ValidationReport validate_group(const FinGroup &g) {
  ValidationReport report;
  const int n = g.order;
  if (n < 1) {
    report.format("group.order", "order must be positive");
    return report;
  }
  if (static_cast<int>(g.mul.size()) != n) {
    report.format("group.table-shape",
                  str("expected ", n, " rows, got ", g.mul.size()));
    return report;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.mul[a].size()) != n) {
      report.format("group.table-shape",
                    str("row ", a, " has ", g.mul[a].size(), " entries"));
      return report;
    }
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] < 0 || g.mul[a][b] >= n) {
        report.format("group.table-range",
                      str("entry (", a, ",", b, ") = ", g.mul[a][b]));
        return report;
      }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul[0][a] != a)
      report.axiom("group.identity", str("0*", a, " = ", g.mul[0][a]));
    if (g.mul[a][0] != a)
      report.axiom("group.identity", str(a, "*0 = ", g.mul[a][0]));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          report.axiom("group.associativity",
                       str("(", a, "*", b, ")*", c, " != ", a, "*(", b, "*",
                           c, ")"));
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == 0 && g.mul[b][a] == 0)
        has_inverse = true;
    if (!has_inverse)
      report.axiom("group.inverse", str("element ", a));
  }
  return report;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

int Subgroup::position_of(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g)
    return -1;
  return static_cast<int>(it - elements.begin());
}

bool Subgroup::operator<(const Subgroup &other) const {
  if (elements.size() != other.elements.size())
    return elements.size() < other.elements.size();
  return elements < other.elements;
}

std::string Subgroup::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < elements.size(); ++i)
    s += (i ? "," : "") + std::to_string(elements[i]);
  return s + "}";
}

bool is_subgroup(const FinGroup &g, const std::vector<int> &elements) {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.front() != 0)
    return false;
  for (int a : sorted)
    for (int b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.mul[a][b]))
        return false;
  return true;
}

Subgroup subgroup_closure(const FinGroup &g, const std::vector<int> &gens) {
  std::set<int> result{0};
  for (int x : gens) {
    if (x < 0 || x >= g.order)
      throw Error(str("generator ", x, " out of range"));
    result.insert(x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> current(result.begin(), result.end());
    for (int a : current)
      for (int b : current)
        if (result.insert(g.mul[a][b]).second)
          changed = true;
  }
  return Subgroup{std::vector<int>(result.begin(), result.end())};
}

std::vector<Subgroup> subgroups(const FinGroup &g, const Limits &limits) {
  if (g.order > limits.max_group_order)
    throw Error(str("subgroup enumeration refused: group order ", g.order,
                    " exceeds cap ", limits.max_group_order));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  const std::vector<int> trivial{0};
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<int> h = queue.back();
    queue.pop_back();
    for (int x = 1; x < g.order; ++x) {
      if (std::binary_search(h.begin(), h.end(), x))
        continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      Subgroup bigger = subgroup_closure(g, gens);
      if (seen.insert(bigger.elements).second)
        queue.push_back(bigger.elements);
    }
  }
  std::vector<Subgroup> result;
  for (const auto &elems : seen)
    result.push_back(Subgroup{elems});
  std::sort(result.begin(), result.end());
  return result;
}

Subgroup conjugate_subgroup(const FinGroup &g, const Subgroup &h, int by) {
  std::vector<int> elems;
  const int inv = g.inverse(by);
  for (int x : h.elements)
    elems.push_back(g.mul[g.mul[by][x]][inv]);
  std::sort(elems.begin(), elems.end());
  return Subgroup{elems};
}

std::vector<std::vector<int>> left_cosets(const FinGroup &g,
                                          const Subgroup &h) {
  std::vector<bool> placed(g.order, false);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < g.order; ++a) {
    if (placed[a])
      continue;
    std::vector<int> coset;
    for (int x : h.elements) {
      int y = g.mul[a][x];
      coset.push_back(y);
      placed[y] = true;
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

FinGroup subgroup_as_group(const FinGroup &g, const Subgroup &h) {
  if (!is_subgroup(g, h.elements))
    throw Error(str("not a subgroup: ", h.to_string()));
  const int n = h.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int pos = h.position_of(g.mul[h.elements[i]][h.elements[j]]);
      if (pos < 0)
        throw Error("subgroup not closed");
      table[i][j] = pos;
    }
  return FinGroup(std::move(table));
}

} // namespace gcat
