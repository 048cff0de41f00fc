#include "gcat/category.hpp"

#include <algorithm>
#include <map>

namespace gcat {

int FinCategory::morphism_by_name(const std::string &name) const {
  for (int m = 0; m < morphism_count(); ++m)
    if (morphs[m].name == name)
      return m;
  return -1;
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> result;
  for (int m = 0; m < morphism_count(); ++m)
    if (morphs[m].src == x && morphs[m].tgt == y)
      result.push_back(m);
  return result;
}

ValidationReport validate_category(const FinCategory &c) {
  ValidationReport report;
  const int n = c.object_count;
  const int m = c.morphism_count();
  if (n < 0) {
    report.format("category.objects", "negative object count");
    return report;
  }
  if (m < n) {
    report.format("category.identities",
                  str("fewer morphisms (", m, ") than objects (", n, ")"));
    return report;
  }
  if (static_cast<int>(c.comp.size()) != m) {
    report.format("category.table-shape",
                  str("comp table has ", c.comp.size(), " rows, expected ", m));
    return report;
  }
  for (int g = 0; g < m; ++g)
    if (static_cast<int>(c.comp[g].size()) != m) {
      report.format("category.table-shape", str("comp row ", g));
      return report;
    }
  for (int k = 0; k < m; ++k)
    if (c.morphs[k].src < 0 || c.morphs[k].src >= n || c.morphs[k].tgt < 0 ||
        c.morphs[k].tgt >= n) {
      report.format("category.morphism-range", c.morphs[k].name);
      return report;
    }
  for (int i = 0; i < n; ++i)
    if (c.morphs[i].src != i || c.morphs[i].tgt != i)
      report.axiom("category.identity-placement",
                   str("morphism ", i, " is not an endomorphism of object ", i));

  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int h = c.comp[g][f];
      if (!c.composable(g, f)) {
        if (h != -1)
          report.axiom("category.comp-domain",
                       str("comp(", c.morphs[g].name, ",", c.morphs[f].name,
                           ") defined on non-composable pair"));
        continue;
      }
      if (h == -1) {
        report.axiom("category.comp-total",
                     str("missing composite comp(", c.morphs[g].name, ",",
                         c.morphs[f].name, ")"));
        continue;
      }
      if (h < 0 || h >= m) {
        report.format("category.table-range",
                      str("comp(", g, ",", f, ") = ", h));
        continue;
      }
      if (c.morphs[h].src != c.morphs[f].src ||
          c.morphs[h].tgt != c.morphs[g].tgt)
        report.axiom("category.comp-endpoints",
                     str(c.morphs[g].name, "∘", c.morphs[f].name, " = ",
                         c.morphs[h].name));
    }

  // Two-sided unit laws.
  for (int f = 0; f < m; ++f) {
    int left = c.comp[c.morphs[f].tgt][f];
    int right = c.comp[f][c.morphs[f].src];
    if (left != f)
      report.axiom("category.unit", str("1∘", c.morphs[f].name));
    if (right != f)
      report.axiom("category.unit", str(c.morphs[f].name, "∘1"));
  }

  // Associativity over all composable triples.
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!c.composable(h, g) || c.comp[h][g] < 0)
        continue;
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f) || c.comp[g][f] < 0)
          continue;
        int hg = c.comp[h][g];
        int gf = c.comp[g][f];
        if (c.comp[hg][f] != c.comp[h][gf])
          report.axiom("category.associativity",
                       str("(", c.morphs[h].name, "∘", c.morphs[g].name,
                           ")∘", c.morphs[f].name, " != ", c.morphs[h].name,
                           "∘(", c.morphs[g].name, "∘", c.morphs[f].name,
                           ")"));
      }
    }
  return report;
}

FinCategory make_category(int n_objects, const std::vector<MorphSpec> &morphs,
                          const std::vector<CompSpec> &comps,
                          std::vector<std::string> object_names) {
  FinCategory c;
  c.object_count = n_objects;
  c.object_names = std::move(object_names);
  for (int i = 0; i < n_objects; ++i)
    c.morphs.push_back({i, i, str("1_", i)});
  for (const auto &ms : morphs) {
    if (ms.src < 0 || ms.src >= n_objects || ms.tgt < 0 ||
        ms.tgt >= n_objects)
      throw Error(str("morphism ", ms.name, " endpoints out of range"));
    c.morphs.push_back({ms.src, ms.tgt, ms.name});
  }
  const int m = c.morphism_count();
  c.comp.assign(m, std::vector<int>(m, -1));
  // Identity composites are forced.
  for (int f = 0; f < m; ++f) {
    c.comp[c.morphs[f].tgt][f] = f;
    c.comp[f][c.morphs[f].src] = f;
  }
  for (const auto &cs : comps) {
    int g = cs.after + n_objects;
    int f = cs.first + n_objects;
    int h = cs.result;
    if (g >= m || f >= m || h < 0 || h >= m)
      throw Error("comp entry out of range");
    c.comp[g][f] = h;
  }
  return c;
}

FinCategory poset_category(int n_objects,
                           const std::vector<std::pair<int, int>> &edges,
                           std::vector<std::string> object_names) {
  std::vector<std::vector<bool>> leq(n_objects,
                                     std::vector<bool>(n_objects, false));
  for (int i = 0; i < n_objects; ++i)
    leq[i][i] = true;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n_objects || b < 0 || b >= n_objects)
      throw Error("poset edge out of range");
    leq[a][b] = true;
  }
  for (int k = 0; k < n_objects; ++k)
    for (int i = 0; i < n_objects; ++i)
      for (int j = 0; j < n_objects; ++j)
        if (leq[i][k] && leq[k][j])
          leq[i][j] = true;
  for (int i = 0; i < n_objects; ++i)
    for (int j = 0; j < n_objects; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw Error(str("poset relation has a cycle through ", i, " and ", j));

  FinCategory c;
  c.object_count = n_objects;
  c.object_names = std::move(object_names);
  for (int i = 0; i < n_objects; ++i)
    c.morphs.push_back({i, i, str("1_", i)});
  std::vector<std::vector<int>> arrow(n_objects,
                                      std::vector<int>(n_objects, -1));
  for (int i = 0; i < n_objects; ++i)
    arrow[i][i] = i;
  for (int i = 0; i < n_objects; ++i)
    for (int j = 0; j < n_objects; ++j)
      if (i != j && leq[i][j]) {
        arrow[i][j] = c.morphism_count();
        c.morphs.push_back({i, j, str("f", i, "_", j)});
      }
  const int m = c.morphism_count();
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.composable(g, f))
        c.comp[g][f] = arrow[c.morphs[f].src][c.morphs[g].tgt];
  return c;
}

FinCategory group_as_category(const FinGroup &g) {
  FinCategory c;
  c.object_count = 1;
  c.morphs.push_back({0, 0, "1_0"});
  for (int i = 1; i < g.order; ++i)
    c.morphs.push_back({0, 0, str("g", i)});
  c.comp.assign(g.order, std::vector<int>(g.order, -1));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      c.comp[a][b] = g.mul[a][b];
  return c;
}

FinCategory chain_category(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, i + 1});
  return poset_category(n + 1, edges);
}

FinCategory discrete_category(int n_objects) {
  return poset_category(n_objects, {});
}

FinCategory opposite_category(const FinCategory &c) {
  FinCategory op;
  op.object_count = c.object_count;
  op.object_names = c.object_names;
  for (const auto &mo : c.morphs)
    op.morphs.push_back({mo.tgt, mo.src, mo.name});
  const int m = c.morphism_count();
  op.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      op.comp[g][f] = c.comp[f][g];
  return op;
}

ProductCategory product_category(const FinCategory &a, const FinCategory &b) {
  ProductCategory result;
  FinCategory p;
  p.object_count = a.object_count * b.object_count;
  result.object_of.assign(a.object_count,
                          std::vector<int>(b.object_count, -1));
  for (int x = 0; x < a.object_count; ++x)
    for (int y = 0; y < b.object_count; ++y) {
      result.object_of[x][y] = x * b.object_count + y;
      result.object_pair.push_back({x, y});
      p.object_names.push_back(
          str("(", a.object_name(x), ",", b.object_name(y), ")"));
    }
  const int ma = a.morphism_count();
  const int mb = b.morphism_count();
  result.morphism_of.assign(ma, std::vector<int>(mb, -1));
  // Identities of (x,y) first, then remaining pairs in lex order.
  for (int x = 0; x < a.object_count; ++x)
    for (int y = 0; y < b.object_count; ++y) {
      int id = result.object_of[x][y];
      result.morphism_of[x][y] = id;
      result.morphism_pair.push_back({x, y});
      p.morphs.push_back({id, id, str("1_", id)});
    }
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g) {
      if (f < a.object_count && g < b.object_count)
        continue; // identity pair already placed
      result.morphism_of[f][g] = p.morphism_count();
      result.morphism_pair.push_back({f, g});
      p.morphs.push_back(
          {result.object_of[a.morphs[f].src][b.morphs[g].src],
           result.object_of[a.morphs[f].tgt][b.morphs[g].tgt],
           str("(", a.morphs[f].name, ",", b.morphs[g].name, ")")});
    }
  const int mp = p.morphism_count();
  p.comp.assign(mp, std::vector<int>(mp, -1));
  for (int i = 0; i < mp; ++i)
    for (int j = 0; j < mp; ++j) {
      auto [f1, g1] = result.morphism_pair[i];
      auto [f2, g2] = result.morphism_pair[j];
      if (a.composable(f1, f2) && b.composable(g1, g2)) {
        int cf = a.comp[f1][f2];
        int cg = b.comp[g1][g2];
        if (cf >= 0 && cg >= 0)
          p.comp[i][j] = result.morphism_of[cf][cg];
      }
    }
  result.cat = std::make_shared<const FinCategory>(std::move(p));
  return result;
}

ValidationReport validate_functor(const FinFunctor &f) {
  ValidationReport report;
  const FinCategory &s = *f.source;
  const FinCategory &t = *f.target;
  if (static_cast<int>(f.obj.size()) != s.object_count ||
      static_cast<int>(f.mor.size()) != s.morphism_count()) {
    report.format("functor.table-shape", "object or morphism map size");
    return report;
  }
  for (int x = 0; x < s.object_count; ++x)
    if (f.obj[x] < 0 || f.obj[x] >= t.object_count) {
      report.format("functor.object-range", str("object ", x));
      return report;
    }
  for (int m = 0; m < s.morphism_count(); ++m)
    if (f.mor[m] < 0 || f.mor[m] >= t.morphism_count()) {
      report.format("functor.morphism-range", s.morphs[m].name);
      return report;
    }
  for (int m = 0; m < s.morphism_count(); ++m) {
    if (t.morphs[f.mor[m]].src != f.obj[s.morphs[m].src] ||
        t.morphs[f.mor[m]].tgt != f.obj[s.morphs[m].tgt])
      report.axiom("functor.endpoints", s.morphs[m].name);
  }
  for (int x = 0; x < s.object_count; ++x)
    if (f.mor[x] != t.identity_of(f.obj[x]))
      report.axiom("functor.identity", str("object ", x));
  for (int g = 0; g < s.morphism_count(); ++g)
    for (int h = 0; h < s.morphism_count(); ++h) {
      if (!s.composable(g, h) || s.comp[g][h] < 0)
        continue;
      if (!t.composable(f.mor[g], f.mor[h]) ||
          t.comp[f.mor[g]][f.mor[h]] != f.mor[s.comp[g][h]])
        report.axiom("functor.composition",
                     str(s.morphs[g].name, "∘", s.morphs[h].name));
    }
  return report;
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  f.obj.resize(c->object_count);
  for (int i = 0; i < c->object_count; ++i)
    f.obj[i] = i;
  f.mor.resize(c->morphism_count());
  for (int i = 0; i < c->morphism_count(); ++i)
    f.mor[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor &g, const FinFunctor &f) {
  if (!(*f.target == *g.source))
    throw Error("functor composition: middle categories differ");
  FinFunctor r;
  r.source = f.source;
  r.target = g.target;
  for (int x : f.obj)
    r.obj.push_back(g.obj[x]);
  for (int m : f.mor)
    r.mor.push_back(g.mor[m]);
  return r;
}

SubcategoryResult full_subcategory(CatPtr c, const std::vector<int> &objects) {
  SubcategoryResult result;
  result.object_map = objects;
  std::vector<int> newobj(c->object_count, -1);
  for (size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] < 0 || objects[i] >= c->object_count)
      throw Error("subcategory object out of range");
    newobj[objects[i]] = static_cast<int>(i);
  }
  FinCategory sub;
  sub.object_count = static_cast<int>(objects.size());
  for (int o : objects)
    sub.object_names.push_back(c->object_name(o));
  std::vector<int> mor_map(c->morphism_count(), -1); // old -> new
  std::vector<int> kept;                             // new -> old
  for (int i : objects) {
    mor_map[i] = static_cast<int>(kept.size());
    kept.push_back(i);
    sub.morphs.push_back({newobj[i], newobj[i], str("1_", newobj[i])});
  }
  for (int m = 0; m < c->morphism_count(); ++m) {
    if (c->is_identity(m))
      continue;
    if (newobj[c->src(m)] >= 0 && newobj[c->tgt(m)] >= 0) {
      mor_map[m] = static_cast<int>(kept.size());
      kept.push_back(m);
      sub.morphs.push_back(
          {newobj[c->src(m)], newobj[c->tgt(m)], c->morphs[m].name});
    }
  }
  const int ms = static_cast<int>(kept.size());
  sub.comp.assign(ms, std::vector<int>(ms, -1));
  for (int g = 0; g < ms; ++g)
    for (int f = 0; f < ms; ++f) {
      if (!sub.composable(g, f))
        continue;
      int old = c->comp[kept[g]][kept[f]];
      sub.comp[g][f] = old < 0 ? -1 : mor_map[old];
    }
  result.cat = std::make_shared<const FinCategory>(std::move(sub));
  FinFunctor inc;
  inc.source = result.cat;
  inc.target = c;
  inc.obj = objects;
  inc.mor = kept;
  result.inclusion = std::move(inc);
  return result;
}

FinFunctor GCatAction::as_functor(int g) const {
  FinFunctor f;
  f.source = cat;
  f.target = cat;
  f.obj = on_obj[g];
  f.mor = on_mor[g];
  return f;
}

ValidationReport validate_action(const GCatAction &a) {
  ValidationReport report;
  const FinCategory &c = *a.cat;
  const int n = a.group.order;
  if (static_cast<int>(a.on_obj.size()) != n ||
      static_cast<int>(a.on_mor.size()) != n) {
    report.format("action.table-shape", "one row per group element required");
    return report;
  }
  for (int g = 0; g < n; ++g)
    if (static_cast<int>(a.on_obj[g].size()) != c.object_count ||
        static_cast<int>(a.on_mor[g].size()) != c.morphism_count()) {
      report.format("action.table-shape", str("element ", g));
      return report;
    }
  for (int x = 0; x < c.object_count; ++x)
    if (a.on_obj[0][x] != x)
      report.axiom("action.identity-element", str("object ", x));
  for (int m = 0; m < c.morphism_count(); ++m)
    if (a.on_mor[0][m] != m)
      report.axiom("action.identity-element", c.morphs[m].name);
  for (int g = 1; g < n; ++g) {
    ValidationReport fr = validate_functor(a.as_functor(g));
    report.merge(fr, str("action.g", g, "."));
  }
  // (g1*g2)·x = g1·(g2·x)
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      int g12 = a.group.mul[g1][g2];
      for (int x = 0; x < c.object_count; ++x)
        if (a.on_obj[g12][x] != a.on_obj[g1][a.on_obj[g2][x]]) {
          report.axiom("action.homomorphism",
                       str("(", g1, "*", g2, ") on object ", x));
          break;
        }
      for (int m = 0; m < c.morphism_count(); ++m)
        if (a.on_mor[g12][m] != a.on_mor[g1][a.on_mor[g2][m]]) {
          report.axiom("action.homomorphism",
                       str("(", g1, "*", g2, ") on ", c.morphs[m].name));
          break;
        }
    }
  return report;
}

GCatAction trivial_action(const FinGroup &g, CatPtr c) {
  GCatAction a;
  a.group = g;
  a.cat = c;
  std::vector<int> ido(c->object_count), idm(c->morphism_count());
  for (int i = 0; i < c->object_count; ++i)
    ido[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i)
    idm[i] = i;
  a.on_obj.assign(g.order, ido);
  a.on_mor.assign(g.order, idm);
  return a;
}

GCatAction action_on_opposite(const GCatAction &a, CatPtr op) {
  GCatAction r = a;
  r.cat = std::move(op);
  return r;
}

GCatAction action_on_product(const GCatAction &a, const GCatAction &b,
                             const ProductCategory &prod) {
  if (!(a.group == b.group))
    throw Error("product action requires one group on both factors");
  GCatAction r;
  r.group = a.group;
  r.cat = prod.cat;
  const int n = r.group.order;
  for (int g = 0; g < n; ++g) {
    std::vector<int> oo(prod.object_pair.size());
    for (size_t i = 0; i < prod.object_pair.size(); ++i) {
      auto [x, y] = prod.object_pair[i];
      oo[i] = prod.object_of[a.on_obj[g][x]][b.on_obj[g][y]];
    }
    std::vector<int> om(prod.morphism_pair.size());
    for (size_t i = 0; i < prod.morphism_pair.size(); ++i) {
      auto [f1, g1] = prod.morphism_pair[i];
      om[i] = prod.morphism_of[a.on_mor[g][f1]][b.on_mor[g][g1]];
    }
    r.on_obj.push_back(std::move(oo));
    r.on_mor.push_back(std::move(om));
  }
  return r;
}

GCatAction action_on_subcategory(const GCatAction &a,
                                 const SubcategoryResult &sub) {
  const FinCategory &c = *a.cat;
  std::vector<int> newobj(c.object_count, -1);
  for (size_t i = 0; i < sub.object_map.size(); ++i)
    newobj[sub.object_map[i]] = static_cast<int>(i);
  std::vector<int> newmor(c.morphism_count(), -1);
  for (size_t i = 0; i < sub.inclusion.mor.size(); ++i)
    newmor[sub.inclusion.mor[i]] = static_cast<int>(i);
  GCatAction r;
  r.group = a.group;
  r.cat = sub.cat;
  for (int g = 0; g < a.group.order; ++g) {
    std::vector<int> oo, om;
    for (int old : sub.object_map) {
      int img = newobj[a.on_obj[g][old]];
      if (img < 0)
        throw Error(str("object set not stable: element ", g, " moves object ",
                        old, " outside the subcategory"));
      oo.push_back(img);
    }
    for (int old : sub.inclusion.mor) {
      int img = newmor[a.on_mor[g][old]];
      if (img < 0)
        throw Error(str("morphism set not stable under element ", g));
      om.push_back(img);
    }
    r.on_obj.push_back(std::move(oo));
    r.on_mor.push_back(std::move(om));
  }
  return r;
}

GCatAction restrict_action_to_subgroup(const GCatAction &a,
                                       const Subgroup &h) {
  GCatAction r;
  r.group = subgroup_as_group(a.group, h);
  r.cat = a.cat;
  for (int g : h.elements) {
    r.on_obj.push_back(a.on_obj[g]);
    r.on_mor.push_back(a.on_mor[g]);
  }
  return r;
}

Subgroup stabilizer(const GCatAction &a, int object) {
  if (object < 0 || object >= a.cat->object_count)
    throw Error(str("stabilizer: object ", object, " out of range"));
  std::vector<int> elems;
  for (int g = 0; g < a.group.order; ++g)
    if (a.on_obj[g][object] == object)
      elems.push_back(g);
  return Subgroup{elems};
}

Subgroup morphism_stabilizer(const GCatAction &a, int morphism) {
  if (morphism < 0 || morphism >= a.cat->morphism_count())
    throw Error("morphism_stabilizer: out of range");
  std::vector<int> elems;
  for (int g = 0; g < a.group.order; ++g)
    if (a.on_mor[g][morphism] == morphism)
      elems.push_back(g);
  return Subgroup{elems};
}

static std::vector<std::vector<int>>
orbit_partition(const std::vector<std::vector<int>> &tables, int count,
                int order) {
  std::vector<bool> seen(count, false);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < count; ++x) {
    if (seen[x])
      continue;
    std::vector<int> orbit;
    for (int g = 0; g < order; ++g) {
      int y = tables[g][x];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<std::vector<int>> orbits(const GCatAction &a) {
  return orbit_partition(a.on_obj, a.cat->object_count, a.group.order);
}

std::vector<std::vector<int>> morphism_orbits(const GCatAction &a) {
  return orbit_partition(a.on_mor, a.cat->morphism_count(), a.group.order);
}

ValidationReport check_equivariant(const FinFunctor &f, const GCatAction &src,
                                   const GCatAction &tgt) {
  ValidationReport report;
  if (!(src.group == tgt.group)) {
    report.format("equivariance.group", "actions over different groups");
    return report;
  }
  for (int g = 0; g < src.group.order; ++g) {
    for (int x = 0; x < src.cat->object_count; ++x)
      if (f.obj[src.on_obj[g][x]] != tgt.on_obj[g][f.obj[x]])
        report.axiom("equivariance.objects", str("(g=", g, ", X=", x, ")"));
    for (int m = 0; m < src.cat->morphism_count(); ++m)
      if (f.mor[src.on_mor[g][m]] != tgt.on_mor[g][f.mor[m]])
        report.axiom("equivariance.morphisms",
                     str("(g=", g, ", f=", src.cat->morphs[m].name, ")"));
  }
  return report;
}

} // namespace gcat
