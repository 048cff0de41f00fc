#include "gcat/diagram.hpp"

#include <algorithm>

namespace gcat {

namespace {

bool same_space(const SSetPtr &a, const SSetPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return a->trunc == b->trunc && a->counts == b->counts &&
         a->face == b->face && a->degen == b->degen;
}

// h == g after f on tables
bool composes_to(const std::vector<std::vector<int>> &g,
                 const std::vector<std::vector<int>> &f,
                 const std::vector<std::vector<int>> &h) {
  for (size_t n = 0; n < f.size(); ++n)
    for (size_t s = 0; s < f[n].size(); ++s)
      if (h[n][s] != g[n][f[n][s]])
        return false;
  return true;
}

bool is_identity_table(const std::vector<std::vector<int>> &t) {
  for (const auto &row : t)
    for (size_t s = 0; s < row.size(); ++s)
      if (row[s] != static_cast<int>(s))
        return false;
  return true;
}

int index_in(const std::vector<int> &list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end())
    throw Error(str("hom set lookup failed for morphism ", value));
  return static_cast<int>(it - list.begin());
}

SimplicialMap constant_sset_map(SSetPtr src, SSetPtr tgt,
                                const std::vector<int> &fn) {
  SimplicialMap m;
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  m.at.resize(m.src->trunc + 1);
  for (int n = 0; n <= m.src->trunc; ++n)
    m.at[n] = fn;
  return m;
}

} // namespace

ValidationReport validate_diagram(const SSetDiagram &f) {
  ValidationReport report;
  const FinCategory &c = *f.cat;
  const int nobj = c.object_count;
  const int nmor = c.morphism_count();
  const int order = f.action.group.order;
  if (static_cast<int>(f.values.size()) != nobj ||
      static_cast<int>(f.maps.size()) != nmor ||
      static_cast<int>(f.eta.size()) != order) {
    report.format("gfunctor.shape", "values/maps/eta sizes");
    return report;
  }
  for (int g = 0; g < order; ++g)
    if (static_cast<int>(f.eta[g].size()) != nobj) {
      report.format("gfunctor.shape", str("eta row for element ", g));
      return report;
    }
  const int N = f.trunc();
  for (int x = 0; x < nobj; ++x)
    if (!f.values[x] || f.values[x]->trunc != N) {
      report.format("gfunctor.truncation", str("object ", x));
      return report;
    }
  const bool cov = f.variance == Variance::Covariant;
  for (int m = 0; m < nmor; ++m) {
    int a = cov ? c.src(m) : c.tgt(m);
    int b = cov ? c.tgt(m) : c.src(m);
    if (!same_space(f.maps[m].src, f.values[a]) ||
        !same_space(f.maps[m].tgt, f.values[b])) {
      report.format("gfunctor.map-endpoints", c.morphs[m].name);
      return report;
    }
    ValidationReport mr = validate_map(f.maps[m]);
    report.merge(mr, str("gfunctor.map(", c.morphs[m].name, ")."));
  }
  if (!report.ok())
    return report;
  for (int x = 0; x < nobj; ++x)
    if (!is_identity_table(f.maps[c.identity_of(x)].at))
      report.axiom("functor.identity", str("object ", x));
  for (int g = 0; g < nmor; ++g)
    for (int h = 0; h < nmor; ++h) {
      if (!c.composable(g, h) || c.comp[g][h] < 0)
        continue;
      bool good =
          cov ? composes_to(f.maps[g].at, f.maps[h].at, f.maps[c.comp[g][h]].at)
              : composes_to(f.maps[h].at, f.maps[g].at,
                            f.maps[c.comp[g][h]].at);
      if (!good)
        report.axiom("functor.composition",
                     str(c.morphs[g].name, "∘", c.morphs[h].name));
    }
  // Def. 1 (1): eta_{1,X} = id
  for (int x = 0; x < nobj; ++x) {
    if (!same_space(f.eta[0][x].src, f.values[x]) ||
        !is_identity_table(f.eta[0][x].at))
      report.axiom("action-on-functor.unit (Def.1 axiom 1)",
                   str("object ", x));
  }
  // endpoints + simplicial validity of each eta
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < nobj; ++x) {
      int gx = f.action.on_obj[g][x];
      if (!same_space(f.eta[g][x].src, f.values[x]) ||
          !same_space(f.eta[g][x].tgt, f.values[gx])) {
        report.format("gfunctor.eta-endpoints", str("(g=", g, ", X=", x, ")"));
        return report;
      }
      ValidationReport er = validate_map(f.eta[g][x]);
      report.merge(er, str("gfunctor.eta(g=", g, ",X=", x, ")."));
    }
  if (!report.ok())
    return report;
  // Def. 1 (2): eta_{g1,g2 X} o eta_{g2,X} = eta_{g1 g2,X}
  for (int g1 = 0; g1 < order; ++g1)
    for (int g2 = 0; g2 < order; ++g2)
      for (int x = 0; x < nobj; ++x) {
        int g2x = f.action.on_obj[g2][x];
        if (!composes_to(f.eta[g1][g2x].at, f.eta[g2][x].at,
                         f.eta[f.action.group.mul[g1][g2]][x].at))
          report.axiom("action-on-functor.cocycle (Def.1 axiom 2)",
                       str("(g1=", g1, ", g2=", g2, ", X=", x, ")"));
      }
  // Def. 1 (3): naturality against every morphism
  for (int g = 0; g < order; ++g)
    for (int m = 0; m < nmor; ++m) {
      int gm = f.action.on_mor[g][m];
      bool good;
      if (cov) {
        // eta_{g,Y} o F(f) = F(gf) o eta_{g,X}
        int x = c.src(m), y = c.tgt(m);
        SimplicialMap lhs = compose_maps(f.eta[g][y], f.maps[m]);
        SimplicialMap rhs = compose_maps(f.maps[gm], f.eta[g][x]);
        good = lhs.at == rhs.at;
      } else {
        int x = c.src(m), y = c.tgt(m);
        // F(f): F(Y)->F(X); eta_{g,X} o F(f) = F(gf) o eta_{g,Y}
        SimplicialMap lhs = compose_maps(f.eta[g][x], f.maps[m]);
        SimplicialMap rhs = compose_maps(f.maps[gm], f.eta[g][y]);
        good = lhs.at == rhs.at;
      }
      if (!good)
        report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                     str("(g=", g, ", f=", c.morphs[m].name, ")"));
    }
  return report;
}

ValidationReport validate_cat_diagram(const CatDiagram &f) {
  ValidationReport report;
  const FinCategory &c = *f.cat;
  const int nobj = c.object_count;
  const int nmor = c.morphism_count();
  const int order = f.action.group.order;
  if (static_cast<int>(f.values.size()) != nobj ||
      static_cast<int>(f.maps.size()) != nmor ||
      static_cast<int>(f.eta.size()) != order) {
    report.format("gfunctor.shape", "values/maps/eta sizes");
    return report;
  }
  for (int m = 0; m < nmor; ++m) {
    ValidationReport mr = validate_functor(f.maps[m]);
    report.merge(mr, str("gfunctor.map(", c.morphs[m].name, ")."));
    if (!(*f.maps[m].source == *f.values[c.src(m)]) ||
        !(*f.maps[m].target == *f.values[c.tgt(m)]))
      report.format("gfunctor.map-endpoints", c.morphs[m].name);
  }
  if (!report.ok())
    return report;
  for (int x = 0; x < nobj; ++x) {
    const FinFunctor &idm = f.maps[c.identity_of(x)];
    FinFunctor expect = identity_functor(f.values[x]);
    if (idm.obj != expect.obj || idm.mor != expect.mor)
      report.axiom("functor.identity", str("object ", x));
  }
  for (int g = 0; g < nmor; ++g)
    for (int h = 0; h < nmor; ++h) {
      if (!c.composable(g, h) || c.comp[g][h] < 0)
        continue;
      FinFunctor both = compose_functors(f.maps[g], f.maps[h]);
      if (both.obj != f.maps[c.comp[g][h]].obj ||
          both.mor != f.maps[c.comp[g][h]].mor)
        report.axiom("functor.composition",
                     str(c.morphs[g].name, "∘", c.morphs[h].name));
    }
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < nobj; ++x) {
      int gx = f.action.on_obj[g][x];
      const FinFunctor &e = f.eta[g][x];
      if (!(*e.source == *f.values[x]) || !(*e.target == *f.values[gx])) {
        report.format("gfunctor.eta-endpoints", str("(g=", g, ", X=", x, ")"));
        return report;
      }
      ValidationReport er = validate_functor(e);
      report.merge(er, str("gfunctor.eta(g=", g, ",X=", x, ")."));
    }
  if (!report.ok())
    return report;
  for (int x = 0; x < nobj; ++x) {
    FinFunctor expect = identity_functor(f.values[x]);
    if (f.eta[0][x].obj != expect.obj || f.eta[0][x].mor != expect.mor)
      report.axiom("action-on-functor.unit (Def.1 axiom 1)",
                   str("object ", x));
  }
  for (int g1 = 0; g1 < order; ++g1)
    for (int g2 = 0; g2 < order; ++g2)
      for (int x = 0; x < nobj; ++x) {
        int g2x = f.action.on_obj[g2][x];
        FinFunctor lhs = compose_functors(f.eta[g1][g2x], f.eta[g2][x]);
        const FinFunctor &rhs = f.eta[f.action.group.mul[g1][g2]][x];
        if (lhs.obj != rhs.obj || lhs.mor != rhs.mor)
          report.axiom("action-on-functor.cocycle (Def.1 axiom 2)",
                       str("(g1=", g1, ", g2=", g2, ", X=", x, ")"));
      }
  for (int g = 0; g < order; ++g)
    for (int m = 0; m < nmor; ++m) {
      int gm = f.action.on_mor[g][m];
      int x = c.src(m), y = c.tgt(m);
      FinFunctor lhs = compose_functors(f.eta[g][y], f.maps[m]);
      FinFunctor rhs = compose_functors(f.maps[gm], f.eta[g][x]);
      if (lhs.obj != rhs.obj || lhs.mor != rhs.mor)
        report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                     str("(g=", g, ", f=", c.morphs[m].name, ")"));
    }
  return report;
}

ValidationReport validate_bidiagram(const BiDiagram &z) {
  ValidationReport report;
  const FinCategory &c = *z.cat;
  const int nobj = c.object_count;
  const int nmor = c.morphism_count();
  const int order = z.action.group.order;
  if (static_cast<int>(z.values.size()) != nobj ||
      static_cast<int>(z.left.size()) != nmor ||
      static_cast<int>(z.right.size()) != nobj ||
      static_cast<int>(z.eta.size()) != order) {
    report.format("bifunctor.shape", "values/left/right/eta sizes");
    return report;
  }
  for (int m = 0; m < nmor; ++m)
    for (int b = 0; b < nobj; ++b) {
      if (!same_space(z.left[m][b].src, z.values[c.src(m)][b]) ||
          !same_space(z.left[m][b].tgt, z.values[c.tgt(m)][b]))
        report.format("bifunctor.left-endpoints",
                      str("(", c.morphs[m].name, ", B=", b, ")"));
      ValidationReport lr = validate_map(z.left[m][b]);
      report.merge(lr, str("bifunctor.left(", c.morphs[m].name, ",", b, ")."));
    }
  for (int a = 0; a < nobj; ++a)
    for (int m = 0; m < nmor; ++m) {
      if (!same_space(z.right[a][m].src, z.values[a][c.tgt(m)]) ||
          !same_space(z.right[a][m].tgt, z.values[a][c.src(m)]))
        report.format("bifunctor.right-endpoints",
                      str("(A=", a, ", ", c.morphs[m].name, ")"));
      ValidationReport rr = validate_map(z.right[a][m]);
      report.merge(rr, str("bifunctor.right(", a, ",", c.morphs[m].name, ")."));
    }
  if (!report.ok())
    return report;
  for (int x = 0; x < nobj; ++x)
    for (int b = 0; b < nobj; ++b) {
      if (!is_identity_table(z.left[c.identity_of(x)][b].at))
        report.axiom("bifunctor.identity", str("left at (1_", x, ", ", b, ")"));
      if (!is_identity_table(z.right[b][c.identity_of(x)].at))
        report.axiom("bifunctor.identity", str("right at (", b, ", 1_", x, ")"));
    }
  for (int g = 0; g < nmor; ++g)
    for (int h = 0; h < nmor; ++h) {
      if (!c.composable(g, h) || c.comp[g][h] < 0)
        continue;
      for (int b = 0; b < nobj; ++b)
        if (!composes_to(z.left[g][b].at, z.left[h][b].at,
                         z.left[c.comp[g][h]][b].at))
          report.axiom("bifunctor.left-composition",
                       str(c.morphs[g].name, "∘", c.morphs[h].name));
      for (int a = 0; a < nobj; ++a)
        if (!composes_to(z.right[a][h].at, z.right[a][g].at,
                         z.right[a][c.comp[g][h]].at))
          report.axiom("bifunctor.right-composition",
                       str(c.morphs[g].name, "∘", c.morphs[h].name));
    }
  for (int f = 0; f < nmor; ++f)
    for (int h = 0; h < nmor; ++h) {
      // two routes value(src f, tgt h) -> value(tgt f, src h)
      SimplicialMap r1 =
          compose_maps(z.left[f][c.src(h)], z.right[c.src(f)][h]);
      SimplicialMap r2 =
          compose_maps(z.right[c.tgt(f)][h], z.left[f][c.tgt(h)]);
      if (r1.at != r2.at)
        report.axiom("bifunctor.slots-commute",
                     str("(", c.morphs[f].name, ", ", c.morphs[h].name, ")"));
    }
  for (int x = 0; x < nobj; ++x)
    for (int b = 0; b < nobj; ++b)
      if (!is_identity_table(z.eta[0][x][b].at))
        report.axiom("action-on-functor.unit (Def.1 axiom 1)",
                     str("(", x, ",", b, ")"));
  for (int g = 0; g < order; ++g)
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b) {
        int ga = z.action.on_obj[g][a], gb = z.action.on_obj[g][b];
        if (!same_space(z.eta[g][a][b].src, z.values[a][b]) ||
            !same_space(z.eta[g][a][b].tgt, z.values[ga][gb])) {
          report.format("bifunctor.eta-endpoints",
                        str("(g=", g, ", ", a, ",", b, ")"));
          return report;
        }
        ValidationReport er = validate_map(z.eta[g][a][b]);
        report.merge(er, str("bifunctor.eta(", g, ",", a, ",", b, ")."));
      }
  if (!report.ok())
    return report;
  for (int g1 = 0; g1 < order; ++g1)
    for (int g2 = 0; g2 < order; ++g2)
      for (int a = 0; a < nobj; ++a)
        for (int b = 0; b < nobj; ++b) {
          int g2a = z.action.on_obj[g2][a], g2b = z.action.on_obj[g2][b];
          if (!composes_to(z.eta[g1][g2a][g2b].at, z.eta[g2][a][b].at,
                           z.eta[z.action.group.mul[g1][g2]][a][b].at))
            report.axiom("action-on-functor.cocycle (Def.1 axiom 2)",
                         str("(g1=", g1, ", g2=", g2, ", A=", a, ", B=", b,
                             ")"));
        }
  for (int g = 0; g < order; ++g)
    for (int m = 0; m < nmor; ++m) {
      int gm = z.action.on_mor[g][m];
      for (int b = 0; b < nobj; ++b) {
        SimplicialMap lhs =
            compose_maps(z.eta[g][c.tgt(m)][b], z.left[m][b]);
        SimplicialMap rhs = compose_maps(z.left[gm][z.action.on_obj[g][b]],
                                         z.eta[g][c.src(m)][b]);
        if (lhs.at != rhs.at)
          report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                       str("left (g=", g, ", f=", c.morphs[m].name, ")"));
      }
      for (int a = 0; a < nobj; ++a) {
        SimplicialMap lhs = compose_maps(z.eta[g][a][c.src(m)], z.right[a][m]);
        SimplicialMap rhs = compose_maps(z.right[z.action.on_obj[g][a]][gm],
                                         z.eta[g][a][c.tgt(m)]);
        if (lhs.at != rhs.at)
          report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                       str("right (g=", g, ", f=", c.morphs[m].name, ")"));
      }
    }
  return report;
}

ValidationReport validate_mixed_bidiagram(const MixedBiDiagram &t) {
  ValidationReport report;
  const FinCategory &cc = *t.cat_contra;
  const FinCategory &cd = *t.cat_cov;
  const int nc = cc.object_count, nd = cd.object_count;
  const int mc = cc.morphism_count(), md = cd.morphism_count();
  const int order = t.action_contra.group.order;
  if (!(t.action_contra.group == t.action_cov.group)) {
    report.format("mixed.group", "two different groups");
    return report;
  }
  for (int f = 0; f < mc; ++f)
    for (int y = 0; y < nd; ++y) {
      if (!same_space(t.cmap[f][y].src, t.values[cc.tgt(f)][y]) ||
          !same_space(t.cmap[f][y].tgt, t.values[cc.src(f)][y]))
        report.format("mixed.cmap-endpoints",
                      str("(", cc.morphs[f].name, ",", y, ")"));
      report.merge(validate_map(t.cmap[f][y]),
                   str("mixed.cmap(", cc.morphs[f].name, ",", y, ")."));
    }
  for (int x = 0; x < nc; ++x)
    for (int g = 0; g < md; ++g) {
      if (!same_space(t.dmap[x][g].src, t.values[x][cd.src(g)]) ||
          !same_space(t.dmap[x][g].tgt, t.values[x][cd.tgt(g)]))
        report.format("mixed.dmap-endpoints",
                      str("(", x, ",", cd.morphs[g].name, ")"));
      report.merge(validate_map(t.dmap[x][g]),
                   str("mixed.dmap(", x, ",", cd.morphs[g].name, ")."));
    }
  if (!report.ok())
    return report;
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nd; ++y) {
      if (!is_identity_table(t.cmap[cc.identity_of(x)][y].at) ||
          !is_identity_table(t.dmap[x][cd.identity_of(y)].at))
        report.axiom("mixed.identity", str("(", x, ",", y, ")"));
    }
  for (int g = 0; g < mc; ++g)
    for (int h = 0; h < mc; ++h) {
      if (!cc.composable(g, h) || cc.comp[g][h] < 0)
        continue;
      for (int y = 0; y < nd; ++y)
        if (!composes_to(t.cmap[h][y].at, t.cmap[g][y].at,
                         t.cmap[cc.comp[g][h]][y].at))
          report.axiom("mixed.contra-composition",
                       str(cc.morphs[g].name, "∘", cc.morphs[h].name));
    }
  for (int g = 0; g < md; ++g)
    for (int h = 0; h < md; ++h) {
      if (!cd.composable(g, h) || cd.comp[g][h] < 0)
        continue;
      for (int x = 0; x < nc; ++x)
        if (!composes_to(t.dmap[x][g].at, t.dmap[x][h].at,
                         t.dmap[x][cd.comp[g][h]].at))
          report.axiom("mixed.cov-composition",
                       str(cd.morphs[g].name, "∘", cd.morphs[h].name));
    }
  for (int f = 0; f < mc; ++f)
    for (int g = 0; g < md; ++g) {
      SimplicialMap r1 = compose_maps(t.dmap[cc.src(f)][g], t.cmap[f][cd.src(g)]);
      SimplicialMap r2 = compose_maps(t.cmap[f][cd.tgt(g)], t.dmap[cc.tgt(f)][g]);
      if (r1.at != r2.at)
        report.axiom("mixed.slots-commute",
                     str("(", cc.morphs[f].name, ",", cd.morphs[g].name, ")"));
    }
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nd; ++y)
      if (!is_identity_table(t.eta[0][x][y].at))
        report.axiom("action-on-functor.unit (Def.1 axiom 1)",
                     str("(", x, ",", y, ")"));
  for (int g1 = 0; g1 < order; ++g1)
    for (int g2 = 0; g2 < order; ++g2)
      for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nd; ++y) {
          int g2x = t.action_contra.on_obj[g2][x];
          int g2y = t.action_cov.on_obj[g2][y];
          if (!composes_to(t.eta[g1][g2x][g2y].at, t.eta[g2][x][y].at,
                           t.eta[t.action_contra.group.mul[g1][g2]][x][y].at))
            report.axiom("action-on-functor.cocycle (Def.1 axiom 2)",
                         str("(g1=", g1, ", g2=", g2, ", X=", x, ", Y=", y,
                             ")"));
        }
  for (int g = 0; g < order; ++g) {
    for (int f = 0; f < mc; ++f) {
      int gf = t.action_contra.on_mor[g][f];
      for (int y = 0; y < nd; ++y) {
        int gy = t.action_cov.on_obj[g][y];
        SimplicialMap lhs = compose_maps(t.eta[g][cc.src(f)][y], t.cmap[f][y]);
        SimplicialMap rhs = compose_maps(t.cmap[gf][gy],
                                         t.eta[g][cc.tgt(f)][y]);
        if (lhs.at != rhs.at)
          report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                       str("contra (g=", g, ", f=", cc.morphs[f].name, ")"));
      }
    }
    for (int d = 0; d < md; ++d) {
      int gd = t.action_cov.on_mor[g][d];
      for (int x = 0; x < nc; ++x) {
        int gx = t.action_contra.on_obj[g][x];
        SimplicialMap lhs = compose_maps(t.eta[g][x][cd.tgt(d)], t.dmap[x][d]);
        SimplicialMap rhs = compose_maps(t.dmap[gx][gd], t.eta[g][x][cd.src(d)]);
        if (lhs.at != rhs.at)
          report.axiom("action-on-functor.naturality (Def.1 axiom 3)",
                       str("cov (g=", g, ", f=", cd.morphs[d].name, ")"));
      }
    }
  }
  return report;
}

ValidationReport validate_diagram_morphism(const SSetDiagram &from,
                                           const SSetDiagram &to,
                                           const DiagramMorphism &m) {
  ValidationReport report;
  const FinCategory &c = *from.cat;
  if (from.variance != to.variance) {
    report.format("gfunctor-morphism.variance", "mixed variance");
    return report;
  }
  if (static_cast<int>(m.components.size()) != c.object_count) {
    report.format("gfunctor-morphism.shape", "one component per object");
    return report;
  }
  for (int x = 0; x < c.object_count; ++x) {
    if (!same_space(m.components[x].src, from.values[x]) ||
        !same_space(m.components[x].tgt, to.values[x]))
      report.format("gfunctor-morphism.endpoints", str("object ", x));
    report.merge(validate_map(m.components[x]), str("component(", x, ")."));
  }
  if (!report.ok())
    return report;
  const bool cov = from.variance == Variance::Covariant;
  for (int mor = 0; mor < c.morphism_count(); ++mor) {
    int x = c.src(mor), y = c.tgt(mor);
    SimplicialMap lhs, rhs;
    if (cov) {
      lhs = compose_maps(m.components[y], from.maps[mor]);
      rhs = compose_maps(to.maps[mor], m.components[x]);
    } else {
      lhs = compose_maps(m.components[x], from.maps[mor]);
      rhs = compose_maps(to.maps[mor], m.components[y]);
    }
    if (lhs.at != rhs.at)
      report.axiom("natural-transformation.square", c.morphs[mor].name);
  }
  for (int g = 0; g < from.action.group.order; ++g)
    for (int x = 0; x < c.object_count; ++x) {
      int gx = from.action.on_obj[g][x];
      SimplicialMap lhs = compose_maps(to.eta[g][x], m.components[x]);
      SimplicialMap rhs = compose_maps(m.components[gx], from.eta[g][x]);
      if (lhs.at != rhs.at)
        report.axiom("gfunctor-morphism.square (Def.2)",
                     str("(g=", g, ", X=", x, ")"));
    }
  return report;
}

ValidationReport validate_bidiagram_morphism(const BiDiagram &from,
                                             const BiDiagram &to,
                                             const BiDiagramMorphism &m) {
  ValidationReport report;
  const FinCategory &c = *from.cat;
  const int nobj = c.object_count;
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      if (!same_space(m.components[a][b].src, from.values[a][b]) ||
          !same_space(m.components[a][b].tgt, to.values[a][b]))
        report.format("bifunctor-morphism.endpoints", str("(", a, ",", b, ")"));
      report.merge(validate_map(m.components[a][b]),
                   str("component(", a, ",", b, ")."));
    }
  if (!report.ok())
    return report;
  for (int mor = 0; mor < c.morphism_count(); ++mor) {
    for (int b = 0; b < nobj; ++b) {
      SimplicialMap lhs =
          compose_maps(m.components[c.tgt(mor)][b], from.left[mor][b]);
      SimplicialMap rhs = compose_maps(to.left[mor][b],
                                       m.components[c.src(mor)][b]);
      if (lhs.at != rhs.at)
        report.axiom("natural-transformation.square",
                     str("left ", c.morphs[mor].name));
    }
    for (int a = 0; a < nobj; ++a) {
      SimplicialMap lhs =
          compose_maps(m.components[a][c.src(mor)], from.right[a][mor]);
      SimplicialMap rhs =
          compose_maps(to.right[a][mor], m.components[a][c.tgt(mor)]);
      if (lhs.at != rhs.at)
        report.axiom("natural-transformation.square",
                     str("right ", c.morphs[mor].name));
    }
  }
  for (int g = 0; g < from.action.group.order; ++g)
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b) {
        int ga = from.action.on_obj[g][a], gb = from.action.on_obj[g][b];
        SimplicialMap lhs = compose_maps(to.eta[g][a][b], m.components[a][b]);
        SimplicialMap rhs =
            compose_maps(m.components[ga][gb], from.eta[g][a][b]);
        if (lhs.at != rhs.at)
          report.axiom("gfunctor-morphism.square (Def.2)",
                       str("(g=", g, ", A=", a, ", B=", b, ")"));
      }
  return report;
}

ObjectAction restrict_action(const SSetDiagram &f, int object) {
  if (object < 0 || object >= f.cat->object_count)
    throw Error("restrict_action: object out of range");
  ObjectAction result;
  result.stab = stabilizer(f.action, object);
  result.group = subgroup_as_group(f.action.group, result.stab);
  for (int g : result.stab.elements)
    result.maps.push_back(f.eta[g][object]);
  return result;
}

GSSet value_as_gsset(const SSetDiagram &f, int object) {
  ObjectAction oa = restrict_action(f, object);
  GSSet x;
  x.space = f.values[object];
  x.group = oa.group;
  for (const auto &m : oa.maps)
    x.act.push_back(m.at);
  return x;
}

SSetDiagram precompose(const SSetDiagram &f, const FinFunctor &s,
                       const GCatAction &action_src) {
  ValidationReport eq = check_equivariant(s, action_src, f.action);
  if (!eq.ok())
    throw Error(str("precompose: functor is not equivariant at ",
                    eq.items.front().where));
  SSetDiagram r;
  r.cat = s.source;
  r.action = action_src;
  r.variance = f.variance;
  for (int x = 0; x < s.source->object_count; ++x)
    r.values.push_back(f.values[s.obj[x]]);
  for (int m = 0; m < s.source->morphism_count(); ++m)
    r.maps.push_back(f.maps[s.mor[m]]);
  r.eta.resize(action_src.group.order);
  for (int g = 0; g < action_src.group.order; ++g)
    for (int x = 0; x < s.source->object_count; ++x)
      r.eta[g].push_back(f.eta[g][s.obj[x]]);
  return r;
}

SSetDiagram postcompose(const SSetEndofunctor &t, const SSetDiagram &f) {
  SSetDiagram r;
  r.cat = f.cat;
  r.action = f.action;
  r.variance = f.variance;
  for (const auto &v : f.values)
    r.values.push_back(t.apply(v));
  for (const auto &m : f.maps)
    r.maps.push_back(t.apply_map(m));
  r.eta.resize(f.eta.size());
  for (size_t g = 0; g < f.eta.size(); ++g)
    for (const auto &e : f.eta[g])
      r.eta[g].push_back(t.apply_map(e));
  return r;
}

SSetPtr ProductWithFunctor::apply(SSetPtr x) const {
  for (const auto &[src, img] : memo)
    if (src == x)
      return img;
  ProductResult prod = product(x, factor);
  memo.push_back({x, prod.space});
  return prod.space;
}

SimplicialMap ProductWithFunctor::apply_map(const SimplicialMap &f) const {
  SSetPtr src = apply(f.src);
  SSetPtr tgt = apply(f.tgt);
  SimplicialMap r;
  r.src = src;
  r.tgt = tgt;
  r.at.resize(src->trunc + 1);
  for (int n = 0; n <= src->trunc; ++n) {
    const int rc = factor->counts[n];
    r.at[n].resize(src->counts[n]);
    for (int s = 0; s < src->counts[n]; ++s)
      r.at[n][s] = f.at[n][s / rc] * rc + s % rc;
  }
  return r;
}

SSetDiagram constant_diagram(CatPtr cat, const GCatAction &action,
                             SSetPtr value, Variance variance) {
  SSetDiagram f;
  f.cat = cat;
  f.action = action;
  f.variance = variance;
  f.values.assign(cat->object_count, value);
  SimplicialMap id = identity_map(value);
  f.maps.assign(cat->morphism_count(), id);
  f.eta.assign(action.group.order,
               std::vector<SimplicialMap>(cat->object_count, id));
  return f;
}

SSetDiagram point_diagram(CatPtr cat, const GCatAction &action, int trunc,
                          Variance variance) {
  return constant_diagram(cat, action, freeze(point_sset(trunc)), variance);
}

HomDiagram hom_from_object(CatPtr cat, const GCatAction &action, int c0,
                           int trunc) {
  for (int g = 0; g < action.group.order; ++g)
    if (action.on_obj[g][c0] != c0)
      throw Error(str("hom_from_object: group element ", g,
                      " does not fix object ", c0));
  HomDiagram result;
  SSetDiagram &f = result.diagram;
  f.cat = cat;
  f.action = action;
  f.variance = Variance::Covariant;
  for (int x = 0; x < cat->object_count; ++x) {
    result.hom_ids.push_back(cat->hom(c0, x));
    std::vector<std::string> names;
    for (int m : result.hom_ids.back())
      names.push_back(cat->morphs[m].name);
    f.values.push_back(
        freeze(constant_sset(static_cast<int>(names.size()), trunc, names)));
  }
  for (int m = 0; m < cat->morphism_count(); ++m) {
    int x = cat->src(m), y = cat->tgt(m);
    std::vector<int> fn;
    for (int u : result.hom_ids[x])
      fn.push_back(index_in(result.hom_ids[y], cat->compose(m, u)));
    f.maps.push_back(constant_sset_map(f.values[x], f.values[y], fn));
  }
  f.eta.resize(action.group.order);
  for (int g = 0; g < action.group.order; ++g)
    for (int x = 0; x < cat->object_count; ++x) {
      int gx = action.on_obj[g][x];
      std::vector<int> fn;
      for (int u : result.hom_ids[x])
        fn.push_back(index_in(result.hom_ids[gx], action.on_mor[g][u]));
      f.eta[g].push_back(constant_sset_map(f.values[x], f.values[gx], fn));
    }
  return result;
}

HomDiagram hom_into_object(CatPtr cat, const GCatAction &action, int d0,
                           int trunc) {
  for (int g = 0; g < action.group.order; ++g)
    if (action.on_obj[g][d0] != d0)
      throw Error(str("hom_into_object: group element ", g,
                      " does not fix object ", d0));
  HomDiagram result;
  SSetDiagram &f = result.diagram;
  f.cat = cat;
  f.action = action;
  f.variance = Variance::Contravariant;
  for (int x = 0; x < cat->object_count; ++x) {
    result.hom_ids.push_back(cat->hom(x, d0));
    std::vector<std::string> names;
    for (int m : result.hom_ids.back())
      names.push_back(cat->morphs[m].name);
    f.values.push_back(
        freeze(constant_sset(static_cast<int>(names.size()), trunc, names)));
  }
  for (int m = 0; m < cat->morphism_count(); ++m) {
    // F(m): hom(Y,d0) -> hom(X,d0), u -> u o m
    int x = cat->src(m), y = cat->tgt(m);
    std::vector<int> fn;
    for (int u : result.hom_ids[y])
      fn.push_back(index_in(result.hom_ids[x], cat->compose(u, m)));
    f.maps.push_back(constant_sset_map(f.values[y], f.values[x], fn));
  }
  f.eta.resize(action.group.order);
  for (int g = 0; g < action.group.order; ++g)
    for (int x = 0; x < cat->object_count; ++x) {
      int gx = action.on_obj[g][x];
      std::vector<int> fn;
      for (int u : result.hom_ids[x])
        fn.push_back(index_in(result.hom_ids[gx], action.on_mor[g][u]));
      f.eta[g].push_back(constant_sset_map(f.values[x], f.values[gx], fn));
    }
  return result;
}

HomBifunctor hom_bifunctor(const FinFunctor &f, const GCatAction &action_src,
                           const GCatAction &action_tgt, int trunc) {
  ValidationReport eq = check_equivariant(f, action_src, action_tgt);
  if (!eq.ok())
    throw Error(str("hom_bifunctor: functor is not equivariant at ",
                    eq.items.front().where));
  const FinCategory &c = *f.source;
  const FinCategory &d = *f.target;
  HomBifunctor result;
  BiDiagram &z = result.z;
  z.cat = f.source;
  z.action = action_src;
  const int nobj = c.object_count;
  result.hom_ids.assign(nobj, std::vector<std::vector<int>>(nobj));
  z.values.assign(nobj, std::vector<SSetPtr>(nobj));
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      // value(cov=a, contra=b) = hom_D(F b, F a)
      result.hom_ids[a][b] = d.hom(f.obj[b], f.obj[a]);
      std::vector<std::string> names;
      for (int m : result.hom_ids[a][b])
        names.push_back(d.morphs[m].name);
      z.values[a][b] =
          freeze(constant_sset(static_cast<int>(names.size()), trunc, names));
    }
  z.left.assign(c.morphism_count(), std::vector<SimplicialMap>(nobj));
  z.right.assign(nobj, std::vector<SimplicialMap>(c.morphism_count()));
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int b = 0; b < nobj; ++b) {
      int a0 = c.src(m), a1 = c.tgt(m);
      std::vector<int> fn;
      for (int u : result.hom_ids[a0][b])
        fn.push_back(index_in(result.hom_ids[a1][b], d.compose(f.mor[m], u)));
      z.left[m][b] = constant_sset_map(z.values[a0][b], z.values[a1][b], fn);
    }
  for (int a = 0; a < nobj; ++a)
    for (int m = 0; m < c.morphism_count(); ++m) {
      int b1 = c.tgt(m), b0 = c.src(m);
      std::vector<int> fn;
      for (int u : result.hom_ids[a][b1])
        fn.push_back(index_in(result.hom_ids[a][b0], d.compose(u, f.mor[m])));
      z.right[a][m] = constant_sset_map(z.values[a][b1], z.values[a][b0], fn);
    }
  const int order = action_src.group.order;
  z.eta.assign(order, {});
  for (int g = 0; g < order; ++g) {
    z.eta[g].assign(nobj, std::vector<SimplicialMap>(nobj));
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b) {
        int ga = action_src.on_obj[g][a], gb = action_src.on_obj[g][b];
        std::vector<int> fn;
        for (int u : result.hom_ids[a][b])
          fn.push_back(
              index_in(result.hom_ids[ga][gb], action_tgt.on_mor[g][u]));
        z.eta[g][a][b] =
            constant_sset_map(z.values[a][b], z.values[ga][gb], fn);
      }
  }
  return result;
}

BiDiagram product_bidiagram(const SSetDiagram &f, const SSetDiagram &t) {
  if (f.variance != Variance::Covariant || t.variance != Variance::Contravariant)
    throw Error("product_bidiagram: expected covariant F and contravariant T");
  if (!(*f.cat == *t.cat))
    throw Error("product_bidiagram: F and T live over different categories");
  if (f.trunc() != t.trunc())
    throw Error("product_bidiagram: truncation mismatch");
  const FinCategory &c = *f.cat;
  const int nobj = c.object_count;
  const int N = f.trunc();
  BiDiagram z;
  z.cat = f.cat;
  z.action = f.action;
  z.values.assign(nobj, std::vector<SSetPtr>(nobj));
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b)
      z.values[a][b] = product(f.values[a], t.values[b]).space;
  auto pair_map = [&](SSetPtr src, SSetPtr tgt,
                      const std::vector<std::vector<int>> &fa,
                      const std::vector<std::vector<int>> &fb,
                      const SSetPtr &tb_src, const SSetPtr &tb_tgt) {
    SimplicialMap m;
    m.src = src;
    m.tgt = tgt;
    m.at.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      const int rc_src = tb_src->counts[n];
      const int rc_tgt = tb_tgt->counts[n];
      m.at[n].resize(src->counts[n]);
      for (int s = 0; s < src->counts[n]; ++s)
        m.at[n][s] = fa[n][s / rc_src] * rc_tgt + fb[n][s % rc_src];
    }
    return m;
  };
  auto identity_table = [&](const SSetPtr &v) {
    std::vector<std::vector<int>> tab(N + 1);
    for (int n = 0; n <= N; ++n) {
      tab[n].resize(v->counts[n]);
      for (int s = 0; s < v->counts[n]; ++s)
        tab[n][s] = s;
    }
    return tab;
  };
  z.left.assign(c.morphism_count(), std::vector<SimplicialMap>(nobj));
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int b = 0; b < nobj; ++b)
      z.left[m][b] = pair_map(z.values[c.src(m)][b], z.values[c.tgt(m)][b],
                              f.maps[m].at, identity_table(t.values[b]),
                              t.values[b], t.values[b]);
  z.right.assign(nobj, std::vector<SimplicialMap>(c.morphism_count()));
  for (int a = 0; a < nobj; ++a)
    for (int m = 0; m < c.morphism_count(); ++m)
      z.right[a][m] = pair_map(z.values[a][c.tgt(m)], z.values[a][c.src(m)],
                               identity_table(f.values[a]), t.maps[m].at,
                               t.values[c.tgt(m)], t.values[c.src(m)]);
  const int order = f.action.group.order;
  z.eta.assign(order, {});
  for (int g = 0; g < order; ++g) {
    z.eta[g].assign(nobj, std::vector<SimplicialMap>(nobj));
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b) {
        int ga = f.action.on_obj[g][a], gb = f.action.on_obj[g][b];
        z.eta[g][a][b] =
            pair_map(z.values[a][b], z.values[ga][gb], f.eta[g][a].at,
                     t.eta[g][b].at, t.values[b], t.values[gb]);
      }
  }
  return z;
}

HomMixed hom_mixed(const FinFunctor &s, const GCatAction &action_d,
                   const GCatAction &action_c, int trunc) {
  ValidationReport eq = check_equivariant(s, action_d, action_c);
  if (!eq.ok())
    throw Error(str("hom_mixed: functor is not equivariant at ",
                    eq.items.front().where));
  const FinCategory &c = *s.target;
  const FinCategory &d = *s.source;
  HomMixed result;
  MixedBiDiagram &t = result.t;
  t.cat_contra = s.target;
  t.cat_cov = s.source;
  t.action_contra = action_c;
  t.action_cov = action_d;
  const int nc = c.object_count, nd = d.object_count;
  result.hom_ids.assign(nc, std::vector<std::vector<int>>(nd));
  t.values.assign(nc, std::vector<SSetPtr>(nd));
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nd; ++y) {
      result.hom_ids[x][y] = c.hom(x, s.obj[y]);
      std::vector<std::string> names;
      for (int m : result.hom_ids[x][y])
        names.push_back(c.morphs[m].name);
      t.values[x][y] =
          freeze(constant_sset(static_cast<int>(names.size()), trunc, names));
    }
  t.cmap.assign(c.morphism_count(), std::vector<SimplicialMap>(nd));
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int y = 0; y < nd; ++y) {
      int x0 = c.src(f), x1 = c.tgt(f);
      std::vector<int> fn;
      for (int u : result.hom_ids[x1][y])
        fn.push_back(index_in(result.hom_ids[x0][y], c.compose(u, f)));
      t.cmap[f][y] = constant_sset_map(t.values[x1][y], t.values[x0][y], fn);
    }
  t.dmap.assign(nc, std::vector<SimplicialMap>(d.morphism_count()));
  for (int x = 0; x < nc; ++x)
    for (int g = 0; g < d.morphism_count(); ++g) {
      int y0 = d.src(g), y1 = d.tgt(g);
      std::vector<int> fn;
      for (int u : result.hom_ids[x][y0])
        fn.push_back(index_in(result.hom_ids[x][y1], c.compose(s.mor[g], u)));
      t.dmap[x][g] = constant_sset_map(t.values[x][y0], t.values[x][y1], fn);
    }
  const int order = action_c.group.order;
  t.eta.assign(order, {});
  for (int g = 0; g < order; ++g) {
    t.eta[g].assign(nc, std::vector<SimplicialMap>(nd));
    for (int x = 0; x < nc; ++x)
      for (int y = 0; y < nd; ++y) {
        int gx = action_c.on_obj[g][x], gy = action_d.on_obj[g][y];
        std::vector<int> fn;
        for (int u : result.hom_ids[x][y])
          fn.push_back(
              index_in(result.hom_ids[gx][gy], action_c.on_mor[g][u]));
        t.eta[g][x][y] =
            constant_sset_map(t.values[x][y], t.values[gx][gy], fn);
      }
  }
  return result;
}

SSetDiagram mixed_fix_cov(const MixedBiDiagram &t, int y0) {
  SSetDiagram f;
  f.cat = t.cat_contra;
  f.action = trivial_action(FinGroup::trivial(), t.cat_contra);
  f.variance = Variance::Contravariant;
  for (int x = 0; x < t.cat_contra->object_count; ++x)
    f.values.push_back(t.values[x][y0]);
  for (int m = 0; m < t.cat_contra->morphism_count(); ++m)
    f.maps.push_back(t.cmap[m][y0]);
  f.eta.resize(1);
  for (int x = 0; x < t.cat_contra->object_count; ++x)
    f.eta[0].push_back(identity_map(f.values[x]));
  return f;
}

InducedDiagram induced_diagram(const FinGroup &g, const Subgroup &h,
                               const GSSet &z) {
  if (z.group.order != h.order())
    throw Error("induced_diagram: value action does not match the subgroup");
  InducedDiagram result;
  result.cosets = left_cosets(g, h);
  const int k = static_cast<int>(result.cosets.size());
  std::vector<int> coset_of(g.order, -1);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    result.reps.push_back(result.cosets[i].front());
    for (int x : result.cosets[i])
      coset_of[x] = i;
    names.push_back(str("a", result.cosets[i].front(), "H"));
  }
  CatPtr cat =
      std::make_shared<const FinCategory>(discrete_category(k));
  SSetDiagram &f = result.diagram;
  f.cat = cat;
  f.variance = Variance::Covariant;
  f.action.group = g;
  f.action.cat = cat;
  for (int e = 0; e < g.order; ++e) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i)
      perm[i] = coset_of[g.mul[e][result.reps[i]]];
    f.action.on_obj.push_back(perm);
    f.action.on_mor.push_back(perm);
  }
  f.values.assign(k, z.space);
  SimplicialMap id = identity_map(z.space);
  f.maps.assign(k, id);
  f.eta.resize(g.order);
  for (int e = 0; e < g.order; ++e)
    for (int i = 0; i < k; ++i) {
      // e * a_i = a_j * hh with j the coset of e*a_i
      int j = coset_of[g.mul[e][result.reps[i]]];
      int hh = g.mul[g.inverse(result.reps[j])][g.mul[e][result.reps[i]]];
      int pos = h.position_of(hh);
      if (pos < 0)
        throw Error("induced_diagram: coset arithmetic left the subgroup");
      SimplicialMap m;
      m.src = z.space;
      m.tgt = z.space;
      m.at = z.act[pos];
      f.eta[e].push_back(std::move(m));
    }
  return result;
}

Thickening thicken(const SSetDiagram &f) {
  Thickening result;
  const int N = f.trunc();
  SSetPtr delta1 = freeze(standard_simplex(1, N));
  ProductWithFunctor functor(delta1);
  result.thick = postcompose(functor, f);
  for (int x = 0; x < f.cat->object_count; ++x) {
    ProductResult prod = product(f.values[x], delta1);
    SimplicialMap proj = prod.proj_left;
    proj.src = result.thick.values[x]; // structurally identical product
    result.projection.components.push_back(std::move(proj));
  }
  return result;
}

BiThickening thicken_bidiagram(const BiDiagram &z) {
  BiThickening result;
  const int N = z.trunc();
  SSetPtr delta1 = freeze(standard_simplex(1, N));
  ProductWithFunctor functor(delta1);
  BiDiagram &t = result.thick;
  t.cat = z.cat;
  t.action = z.action;
  const int nobj = z.cat->object_count;
  t.values.assign(nobj, std::vector<SSetPtr>(nobj));
  result.projection.components.assign(nobj, std::vector<SimplicialMap>(nobj));
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      t.values[a][b] = functor.apply(z.values[a][b]);
      ProductResult prod = product(z.values[a][b], delta1);
      SimplicialMap proj = prod.proj_left;
      proj.src = t.values[a][b];
      result.projection.components[a][b] = std::move(proj);
    }
  t.left.assign(z.left.size(), {});
  for (size_t m = 0; m < z.left.size(); ++m)
    for (int b = 0; b < nobj; ++b)
      t.left[m].push_back(functor.apply_map(z.left[m][b]));
  t.right.assign(nobj, {});
  for (int a = 0; a < nobj; ++a)
    for (size_t m = 0; m < z.right[a].size(); ++m)
      t.right[a].push_back(functor.apply_map(z.right[a][m]));
  t.eta.assign(z.eta.size(), {});
  for (size_t g = 0; g < z.eta.size(); ++g) {
    t.eta[g].assign(nobj, {});
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b)
        t.eta[g][a].push_back(functor.apply_map(z.eta[g][a][b]));
  }
  return result;
}

} // namespace gcat
