#include "gcat/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace gcat {

namespace {

int find_index(const std::vector<int> &list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end())
    throw Error(str("hom set lookup failed for morphism ", value));
  return static_cast<int>(it - list.begin());
}

} // namespace

// --- chains ---------------------------------------------------------------

int ChainTable::id_of(const Chain &c) const {
  int n = c.length();
  const auto &idx = index[n];
  auto it = idx.find(n == 0 ? c.objects : c.morphs);
  if (it == idx.end())
    throw Error(str("chain lookup failed: ", label(c)));
  return it->second;
}

Chain ChainTable::face(const Chain &c, int i) const {
  Chain r = c;
  const int n = c.length();
  if (n < 1 || i < 0 || i > n)
    throw Error("chain face out of range");
  if (i == 0) {
    r.objects.erase(r.objects.begin());
    r.morphs.erase(r.morphs.begin());
  } else if (i == n) {
    r.objects.pop_back();
    r.morphs.pop_back();
  } else {
    r.morphs[i - 1] = cat->compose(r.morphs[i], r.morphs[i - 1]);
    r.morphs.erase(r.morphs.begin() + i);
    r.objects.erase(r.objects.begin() + i);
  }
  return r;
}

Chain ChainTable::degen(const Chain &c, int i) const {
  Chain r = c;
  if (i < 0 || i > c.length())
    throw Error("chain degeneracy out of range");
  r.morphs.insert(r.morphs.begin() + i, cat->identity_of(c.objects[i]));
  r.objects.insert(r.objects.begin() + i, c.objects[i]);
  return r;
}

Chain ChainTable::translate(const Chain &c, const std::vector<int> &on_obj,
                            const std::vector<int> &on_mor) const {
  Chain r;
  for (int x : c.objects)
    r.objects.push_back(on_obj[x]);
  for (int m : c.morphs)
    r.morphs.push_back(on_mor[m]);
  return r;
}

std::string ChainTable::label(const Chain &c) const {
  if (c.length() == 0)
    return cat->object_name(c.objects[0]);
  std::string s = "[";
  for (int i = 0; i < c.length(); ++i)
    s += (i ? "|" : "") + cat->morphs[c.morphs[i]].name;
  return s + "]";
}

ChainTable enumerate_chains(CatPtr cat, int max_len) {
  ChainTable table;
  table.cat = cat;
  table.max_len = max_len;
  table.chains.resize(max_len + 1);
  table.index.resize(max_len + 1);
  for (int x = 0; x < cat->object_count; ++x) {
    Chain c;
    c.objects = {x};
    table.index[0][c.objects] = static_cast<int>(table.chains[0].size());
    table.chains[0].push_back(std::move(c));
  }
  for (int n = 1; n <= max_len; ++n)
    for (const Chain &base : table.chains[n - 1])
      for (int m = 0; m < cat->morphism_count(); ++m) {
        if (cat->src(m) != base.objects.back())
          continue;
        Chain c = base;
        c.morphs.push_back(m);
        c.objects.push_back(cat->tgt(m));
        table.index[n][c.morphs] = static_cast<int>(table.chains[n].size());
        table.chains[n].push_back(std::move(c));
      }
  return table;
}

// --- nerve -----------------------------------------------------------------

NerveResult nerve(CatPtr cat, const GCatAction &action, int trunc) {
  NerveResult result;
  result.table = enumerate_chains(cat, trunc);
  const ChainTable &tab = result.table;
  TruncatedSSet x;
  x.trunc = trunc;
  x.counts.resize(trunc + 1);
  for (int n = 0; n <= trunc; ++n)
    x.counts[n] = static_cast<int>(tab.chains[n].size());
  x.ensure_shape();
  x.labels.assign(trunc + 1, {});
  for (int n = 0; n <= trunc; ++n)
    for (const Chain &c : tab.chains[n])
      x.labels[n].push_back(tab.label(c));
  for (int n = 1; n <= trunc; ++n)
    for (int s = 0; s < x.counts[n]; ++s)
      for (int i = 0; i <= n; ++i)
        x.face[n][i][s] = tab.id_of(tab.face(tab.chains[n][s], i));
  for (int n = 0; n < trunc; ++n)
    for (int s = 0; s < x.counts[n]; ++s)
      for (int i = 0; i <= n; ++i)
        x.degen[n][i][s] = tab.id_of(tab.degen(tab.chains[n][s], i));
  result.gsset.space = freeze(std::move(x));
  result.gsset.group = action.group;
  result.gsset.act.assign(action.group.order, {});
  for (int g = 0; g < action.group.order; ++g) {
    result.gsset.act[g].resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
      result.gsset.act[g][n].resize(result.gsset.space->counts[n]);
      for (int s = 0; s < result.gsset.space->counts[n]; ++s)
        result.gsset.act[g][n][s] = tab.id_of(
            tab.translate(tab.chains[n][s], action.on_obj[g], action.on_mor[g]));
    }
  }
  return result;
}

NerveResult nerve(CatPtr cat, int trunc) {
  return nerve(cat, trivial_action(FinGroup::trivial(), cat), trunc);
}

SimplicialMap nerve_map(const NerveResult &src, const NerveResult &tgt,
                        const FinFunctor &f) {
  SimplicialMap m;
  m.src = src.gsset.space;
  m.tgt = tgt.gsset.space;
  const int N = m.src->trunc;
  m.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    m.at[n].resize(m.src->counts[n]);
    for (int s = 0; s < m.src->counts[n]; ++s)
      m.at[n][s] = tgt.table.id_of(
          src.table.translate(src.table.chains[n][s], f.obj, f.mor));
  }
  return m;
}

// --- comma categories --------------------------------------------------------

int CommaResult::object_id(const CommaObj &o) const {
  auto it = obj_index.find(o);
  if (it == obj_index.end())
    throw Error("comma object lookup failed");
  return it->second;
}

int CommaResult::morphism_id(int src_obj, int tgt_obj, int p) const {
  auto it = mor_index.find(
      {src_obj * static_cast<int>(objs.size()) + tgt_obj, p});
  if (it == mor_index.end())
    return -1;
  return it->second;
}

namespace {

// mode: 0 = under (u only), 1 = over (v only), 2 = two-sided
CommaResult build_comma(const FinFunctor &s, int anchor_u, int anchor_v,
                        int mode) {
  const FinCategory &dom = *s.source;
  const FinCategory &cod = *s.target;
  CommaResult result;
  FinCategory cat;
  std::vector<std::string> obj_names;
  for (int mid = 0; mid < dom.object_count; ++mid) {
    std::vector<int> us, vs;
    if (mode == 0 || mode == 2)
      us = cod.hom(anchor_u, s.obj[mid]);
    else
      us = {-1};
    if (mode == 1)
      vs = cod.hom(s.obj[mid], anchor_v);
    else if (mode == 2)
      vs = cod.hom(s.obj[mid], anchor_v);
    else
      vs = {-1};
    for (int u : us)
      for (int v : vs) {
        CommaObj o{u, mid, v};
        result.obj_index[o] = static_cast<int>(result.objs.size());
        result.objs.push_back(o);
        std::string name = "(";
        if (u >= 0)
          name += cod.morphs[u].name + ",";
        name += dom.object_name(mid);
        if (v >= 0)
          name += "," + cod.morphs[v].name;
        obj_names.push_back(name + ")");
      }
  }
  const int nobj = static_cast<int>(result.objs.size());
  cat.object_count = nobj;
  cat.object_names = std::move(obj_names);
  // comma morphism = (source object, target object, p); stored as
  // (src, tgt, p) but keyed by (src, p) plus explicit targets below.
  struct PendingMor {
    int src, tgt, p;
  };
  std::vector<PendingMor> pending;
  for (int o = 0; o < nobj; ++o) {
    cat.morphs.push_back({o, o, str("1_", o)});
    result.proj.push_back(dom.identity_of(result.objs[o].mid));
  }
  auto condition_ok = [&](const CommaObj &from, const CommaObj &to, int p) {
    if (dom.src(p) != from.mid || dom.tgt(p) != to.mid)
      return false;
    if (mode == 0 || mode == 2) {
      // S(p) o u = u'
      if (cod.compose(s.mor[p], from.u) != to.u)
        return false;
    }
    if (mode == 1 || mode == 2) {
      // v' o S(p) = v
      if (cod.compose(to.v, s.mor[p]) != from.v)
        return false;
    }
    return true;
  };
  for (int o1 = 0; o1 < nobj; ++o1)
    for (int p = 0; p < dom.morphism_count(); ++p) {
      if (dom.src(p) != result.objs[o1].mid)
        continue;
      for (int o2 = 0; o2 < nobj; ++o2) {
        if (!condition_ok(result.objs[o1], result.objs[o2], p))
          continue;
        if (dom.is_identity(p) && o1 == o2)
          continue; // already placed
        pending.push_back({o1, o2, p});
      }
    }
  for (const auto &pm : pending) {
    int id = cat.morphism_count();
    cat.morphs.push_back(
        {pm.src, pm.tgt, str("p", id, "<", dom.morphs[pm.p].name, ">")});
    result.proj.push_back(pm.p);
  }
  // key (src obj, tgt obj, p) -> id; stored as pair key ((src*nobj+tgt), p)
  for (int m = 0; m < cat.morphism_count(); ++m)
    result.mor_index[{cat.morphs[m].src * nobj + cat.morphs[m].tgt,
                      result.proj[m]}] = m;
  const int nmor = cat.morphism_count();
  cat.comp.assign(nmor, std::vector<int>(nmor, -1));
  for (int m2 = 0; m2 < nmor; ++m2)
    for (int m1 = 0; m1 < nmor; ++m1) {
      if (!cat.composable(m2, m1))
        continue;
      int p = dom.comp[result.proj[m2]][result.proj[m1]];
      if (p < 0)
        throw Error("comma category: base composite missing");
      auto it = result.mor_index.find(
          {cat.morphs[m1].src * nobj + cat.morphs[m2].tgt, p});
      if (it == result.mor_index.end())
        throw Error("comma category: composite not found");
      cat.comp[m2][m1] = it->second;
    }
  result.cat = std::make_shared<const FinCategory>(std::move(cat));
  return result;
}

int comma_morphism(const CommaResult &c, int src_obj, int tgt_obj, int p) {
  auto it = c.mor_index.find(
      {src_obj * static_cast<int>(c.objs.size()) + tgt_obj, p});
  if (it == c.mor_index.end())
    throw Error("comma morphism lookup failed");
  return it->second;
}

} // namespace

CommaResult comma_under(const FinFunctor &s, int c) {
  return build_comma(s, c, -1, 0);
}
CommaResult comma_over(const FinFunctor &s, int c) {
  return build_comma(s, -1, c, 1);
}
CommaResult comma_two_sided(const FinFunctor &f, int d, int d2) {
  return build_comma(f, d, d2, 2);
}

FinFunctor comma_under_precompose(const FinFunctor &s, const CommaResult &from,
                                  const CommaResult &to, int f) {
  const FinCategory &cod = *s.target;
  FinFunctor r;
  r.source = from.cat;
  r.target = to.cat;
  for (const CommaObj &o : from.objs)
    r.obj.push_back(to.object_id({cod.compose(o.u, f), o.mid, -1}));
  for (int m = 0; m < from.cat->morphism_count(); ++m)
    r.mor.push_back(comma_morphism(to, r.obj[from.cat->src(m)],
                                   r.obj[from.cat->tgt(m)], from.proj[m]));
  return r;
}

FinFunctor comma_under_translate(const FinFunctor &s, const CommaResult &from,
                                 const CommaResult &to,
                                 const GCatAction &action_src,
                                 const GCatAction &action_tgt, int g) {
  FinFunctor r;
  r.source = from.cat;
  r.target = to.cat;
  for (const CommaObj &o : from.objs)
    r.obj.push_back(to.object_id(
        {action_tgt.on_mor[g][o.u], action_src.on_obj[g][o.mid], -1}));
  for (int m = 0; m < from.cat->morphism_count(); ++m)
    r.mor.push_back(comma_morphism(to, r.obj[from.cat->src(m)],
                                   r.obj[from.cat->tgt(m)],
                                   action_src.on_mor[g][from.proj[m]]));
  return r;
}

FinFunctor comma_two_sided_map(const FinFunctor &f, const CommaResult &from,
                               const CommaResult &to, int phi, int psi) {
  const FinCategory &cod = *f.target;
  FinFunctor r;
  r.source = from.cat;
  r.target = to.cat;
  for (const CommaObj &o : from.objs)
    r.obj.push_back(
        to.object_id({cod.compose(o.u, phi), o.mid, cod.compose(psi, o.v)}));
  for (int m = 0; m < from.cat->morphism_count(); ++m)
    r.mor.push_back(comma_morphism(to, r.obj[from.cat->src(m)],
                                   r.obj[from.cat->tgt(m)], from.proj[m]));
  return r;
}

FinFunctor comma_two_sided_translate(const FinFunctor &f,
                                     const CommaResult &from,
                                     const CommaResult &to,
                                     const GCatAction &action_src,
                                     const GCatAction &action_tgt, int g) {
  FinFunctor r;
  r.source = from.cat;
  r.target = to.cat;
  for (const CommaObj &o : from.objs)
    r.obj.push_back(to.object_id({action_tgt.on_mor[g][o.u],
                                  action_src.on_obj[g][o.mid],
                                  action_tgt.on_mor[g][o.v]}));
  for (int m = 0; m < from.cat->morphism_count(); ++m)
    r.mor.push_back(comma_morphism(to, r.obj[from.cat->src(m)],
                                   r.obj[from.cat->tgt(m)],
                                   action_src.on_mor[g][from.proj[m]]));
  return r;
}

FinFunctor comma_forget(const CommaResult &comma, CatPtr mid) {
  FinFunctor r;
  r.source = comma.cat;
  r.target = mid;
  for (const CommaObj &o : comma.objs)
    r.obj.push_back(o.mid);
  r.mor = comma.proj;
  return r;
}

CommaNerveDiagram comma_nerve_diagram(const FinFunctor &s,
                                      const GCatAction &action_src,
                                      const GCatAction &action_tgt, int trunc) {
  ValidationReport eq = check_equivariant(s, action_src, action_tgt);
  if (!eq.ok())
    throw Error(str("comma_nerve_diagram: functor not equivariant at ",
                    eq.items.front().where));
  CommaNerveDiagram result;
  CatPtr c = s.target;
  const int nobj = c->object_count;
  for (int x = 0; x < nobj; ++x) {
    result.commas.push_back(comma_under(s, x));
    result.nerves.push_back(nerve(result.commas.back().cat, trunc));
  }
  SSetDiagram &d = result.diagram;
  d.cat = c;
  d.action = action_tgt;
  d.variance = Variance::Contravariant;
  for (int x = 0; x < nobj; ++x)
    d.values.push_back(result.nerves[x].gsset.space);
  for (int m = 0; m < c->morphism_count(); ++m) {
    int x = c->src(m), y = c->tgt(m);
    FinFunctor functor = comma_under_precompose(s, result.commas[y],
                                                result.commas[x], m);
    d.maps.push_back(nerve_map(result.nerves[y], result.nerves[x], functor));
  }
  const int order = action_tgt.group.order;
  d.eta.resize(order);
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < nobj; ++x) {
      int gx = action_tgt.on_obj[g][x];
      FinFunctor functor = comma_under_translate(
          s, result.commas[x], result.commas[gx], action_src, action_tgt, g);
      d.eta[g].push_back(nerve_map(result.nerves[x], result.nerves[gx],
                                   functor));
    }
  return result;
}

// --- quotients -----------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b); // least id wins
  }
};

using RelationEmitter = std::function<void(int, int, int, int, int)>;

QuotientResult build_quotient(
    const std::vector<SSetPtr> &components, const FinGroup &group,
    const std::function<void(const RelationEmitter &)> &emit_relations,
    const std::function<std::pair<int, int>(int, int, int, int)> &action,
    const std::vector<std::string> &tags) {
  if (components.empty())
    throw Error("quotient of zero components");
  const int N = components[0]->trunc;
  const int ncomp = static_cast<int>(components.size());
  std::vector<std::vector<int>> offsets(ncomp, std::vector<int>(N + 1, 0));
  std::vector<int> totals(N + 1, 0);
  for (int k = 0; k < ncomp; ++k)
    for (int n = 0; n <= N; ++n) {
      offsets[k][n] = totals[n];
      totals[n] += components[k]->counts[n];
    }
  std::vector<UnionFind> uf;
  uf.reserve(N + 1);
  for (int n = 0; n <= N; ++n)
    uf.emplace_back(totals[n]);
  emit_relations([&](int degree, int c1, int s1, int c2, int s2) {
    uf[degree].unite(offsets[c1][degree] + s1, offsets[c2][degree] + s2);
  });
  // classes ordered by least global id
  std::vector<std::vector<int>> class_of(N + 1);
  std::vector<std::vector<std::pair<int, int>>> reps(N + 1);
  QuotientResult result;
  TruncatedSSet q;
  q.trunc = N;
  q.counts.assign(N + 1, 0);
  q.labels.assign(N + 1, {});
  auto component_of = [&](int degree, int global) {
    int k = ncomp - 1;
    while (offsets[k][degree] > global)
      --k;
    return std::make_pair(k, global - offsets[k][degree]);
  };
  for (int n = 0; n <= N; ++n) {
    class_of[n].assign(totals[n], -1);
    for (int i = 0; i < totals[n]; ++i) {
      int root = uf[n].find(i);
      if (class_of[n][root] == -1) {
        class_of[n][root] = q.counts[n]++;
        auto [k, local] = component_of(n, root);
        reps[n].push_back({k, local});
        q.labels[n].push_back(
            str("[", tags[k], "/", components[k]->label(n, local), "]"));
      }
      class_of[n][i] = class_of[n][root];
    }
  }
  q.ensure_shape();
  for (int n = 1; n <= N; ++n)
    for (int c = 0; c < q.counts[n]; ++c) {
      auto [k, local] = reps[n][c];
      for (int i = 0; i <= n; ++i)
        q.face[n][i][c] =
            class_of[n - 1][offsets[k][n - 1] + components[k]->face[n][i][local]];
    }
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < q.counts[n]; ++c) {
      auto [k, local] = reps[n][c];
      for (int i = 0; i <= n; ++i)
        q.degen[n][i][c] =
            class_of[n + 1][offsets[k][n + 1] + components[k]->degen[n][i][local]];
    }
  result.gsset.space = freeze(std::move(q));
  result.gsset.group = group;
  result.gsset.act.assign(group.order, {});
  for (int g = 0; g < group.order; ++g) {
    result.gsset.act[g].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      result.gsset.act[g][n].resize(result.gsset.space->counts[n]);
      for (int c = 0; c < result.gsset.space->counts[n]; ++c) {
        auto [k, local] = reps[n][c];
        auto [k2, local2] = action(g, k, n, local);
        result.gsset.act[g][n][c] = class_of[n][offsets[k2][n] + local2];
      }
    }
  }
  for (int k = 0; k < ncomp; ++k) {
    SimplicialMap cm;
    cm.src = components[k];
    cm.tgt = result.gsset.space;
    cm.at.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      cm.at[n].resize(components[k]->counts[n]);
      for (int s = 0; s < components[k]->counts[n]; ++s)
        cm.at[n][s] = class_of[n][offsets[k][n] + s];
    }
    result.class_maps.push_back(std::move(cm));
  }
  result.reps = std::move(reps);
  return result;
}

std::vector<std::string> object_tags(const FinCategory &c) {
  std::vector<std::string> tags;
  for (int x = 0; x < c.object_count; ++x)
    tags.push_back(c.object_name(x));
  return tags;
}

} // namespace

ColimResult colim(const SSetDiagram &f) {
  if (f.variance != Variance::Covariant)
    throw Error("colim expects a covariant diagram");
  const FinCategory &c = *f.cat;
  const int N = f.trunc();
  ColimResult result;
  result.quotient = build_quotient(
      f.values, f.action.group,
      [&](const RelationEmitter &relate) {
        for (int m = 0; m < c.morphism_count(); ++m) {
          int x = c.src(m), y = c.tgt(m);
          for (int n = 0; n <= N; ++n)
            for (int s = 0; s < f.values[x]->counts[n]; ++s)
              relate(n, y, f.maps[m].at[n][s], x, s);
        }
      },
      [&](int g, int k, int n, int s) {
        return std::make_pair(f.action.on_obj[g][k], f.eta[g][k].at[n][s]);
      },
      object_tags(c));
  return result;
}

SimplicialMap colim_factorize(const ColimResult &c, const SSetDiagram &f,
                              const std::vector<SimplicialMap> &cone) {
  const FinCategory &cat = *f.cat;
  const int N = f.trunc();
  // cone compatibility: sigma_Y o F(m) = sigma_X
  for (int m = 0; m < cat.morphism_count(); ++m) {
    int x = cat.src(m), y = cat.tgt(m);
    for (int n = 0; n <= N; ++n)
      for (int s = 0; s < f.values[x]->counts[n]; ++s)
        if (cone[y].at[n][f.maps[m].at[n][s]] != cone[x].at[n][s])
          throw Error(str("colim_factorize: cone not compatible at ",
                          cat.morphs[m].name));
  }
  const GSSet &q = c.gsset();
  SimplicialMap result;
  result.src = q.space;
  result.tgt = cone[0].tgt;
  result.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    result.at[n].resize(q.space->counts[n]);
    for (int cls = 0; cls < q.space->counts[n]; ++cls) {
      auto [k, local] = c.quotient.reps[n][cls];
      result.at[n][cls] = cone[k].at[n][local];
    }
  }
  // the factorization must agree on every generator, not just representatives
  for (int k = 0; k < cat.object_count; ++k)
    for (int n = 0; n <= N; ++n)
      for (int s = 0; s < f.values[k]->counts[n]; ++s)
        if (result.at[n][c.rho()[k].at[n][s]] != cone[k].at[n][s])
          throw Error("colim_factorize: factorization is not well-defined");
  return result;
}

InduceResult induce(const FinGroup &g, const Subgroup &h, const GSSet &z) {
  InduceResult result;
  result.diagram = induced_diagram(g, h, z);
  result.colimit = colim(result.diagram.diagram);
  result.gsset = result.colimit.gsset();
  return result;
}

ColimResult coend(const BiDiagram &z) {
  const FinCategory &c = *z.cat;
  const int N = z.trunc();
  std::vector<SSetPtr> diag;
  for (int x = 0; x < c.object_count; ++x)
    diag.push_back(z.values[x][x]);
  ColimResult result;
  result.quotient = build_quotient(
      diag, z.action.group,
      [&](const RelationEmitter &relate) {
        for (int m = 0; m < c.morphism_count(); ++m) {
          int a = c.src(m), b = c.tgt(m);
          for (int n = 0; n <= N; ++n)
            for (int s = 0; s < z.values[a][b]->counts[n]; ++s)
              relate(n, b, z.left[m][b].at[n][s], a, z.right[a][m].at[n][s]);
        }
      },
      [&](int g, int k, int n, int s) {
        return std::make_pair(z.action.on_obj[g][k],
                              z.eta[g][k][k].at[n][s]);
      },
      object_tags(c));
  return result;
}

TensorResult tensor(const SSetDiagram &f, const SSetDiagram &t) {
  if (f.variance != Variance::Covariant ||
      t.variance != Variance::Contravariant)
    throw Error("tensor: variance mismatch, expected covariant (x) "
                "contravariant");
  if (!(*f.cat == *t.cat))
    throw Error("tensor: diagrams over different categories");
  if (!(f.action.group == t.action.group))
    throw Error("tensor: diagrams over different groups");
  if (f.trunc() != t.trunc())
    throw Error("tensor: truncation mismatch");
  const FinCategory &c = *f.cat;
  const int N = f.trunc();
  TensorResult result;
  std::vector<SSetPtr> spaces;
  for (int x = 0; x < c.object_count; ++x) {
    result.products.push_back(product(f.values[x], t.values[x]));
    spaces.push_back(result.products.back().space);
  }
  result.quotient = build_quotient(
      spaces, f.action.group,
      [&](const RelationEmitter &relate) {
        for (int m = 0; m < c.morphism_count(); ++m) {
          int x = c.src(m), y = c.tgt(m);
          for (int n = 0; n <= N; ++n)
            for (int a = 0; a < f.values[x]->counts[n]; ++a)
              for (int b = 0; b < t.values[y]->counts[n]; ++b)
                relate(n, y,
                       result.products[y].id_of(n, f.maps[m].at[n][a], b), x,
                       result.products[x].id_of(n, a, t.maps[m].at[n][b]));
        }
      },
      [&](int g, int k, int n, int s) {
        auto [a, b] = result.products[k].pair_of(n, s);
        int gk = f.action.on_obj[g][k];
        return std::make_pair(gk,
                              result.products[gk].id_of(
                                  n, f.eta[g][k].at[n][a], t.eta[g][k].at[n][b]));
      },
      object_tags(c));
  return result;
}

SimplicialMap colim_induced_map(const ColimResult &from, const ColimResult &to,
                                const SSetDiagram &f_from,
                                const SSetDiagram &f_to,
                                const DiagramMorphism &eps) {
  (void)f_to;
  const int N = f_from.trunc();
  SimplicialMap r;
  r.src = from.gsset().space;
  r.tgt = to.gsset().space;
  r.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    r.at[n].resize(r.src->counts[n]);
    for (int cls = 0; cls < r.src->counts[n]; ++cls) {
      auto [k, local] = from.quotient.reps[n][cls];
      r.at[n][cls] = to.rho()[k].at[n][eps.components[k].at[n][local]];
    }
  }
  return r;
}

SimplicialMap tensor_induced_map(const TensorResult &from,
                                 const TensorResult &to,
                                 const SSetDiagram &f_from,
                                 const SSetDiagram &f_to,
                                 const DiagramMorphism &eps,
                                 const SSetDiagram &t_shared) {
  (void)f_to;
  (void)t_shared;
  const int N = f_from.trunc();
  SimplicialMap r;
  r.src = from.gsset().space;
  r.tgt = to.gsset().space;
  r.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    r.at[n].resize(r.src->counts[n]);
    for (int cls = 0; cls < r.src->counts[n]; ++cls) {
      auto [k, local] = from.quotient.reps[n][cls];
      auto [a, b] = from.products[k].pair_of(n, local);
      int image = to.products[k].id_of(n, eps.components[k].at[n][a], b);
      r.at[n][cls] = to.alpha()[k].at[n][image];
    }
  }
  return r;
}

// --- bar construction -------------------------------------------------------------

BarResult bar(const BiDiagram &z, int trunc) {
  BarResult result;
  result.chains = enumerate_chains(z.cat, trunc);
  const ChainTable &tab = result.chains;
  const int N = trunc;
  TruncatedSSet x;
  x.trunc = N;
  x.counts.assign(N + 1, 0);
  result.offsets.assign(N + 1, {});
  result.decode.assign(N + 1, {});
  x.labels.assign(N + 1, {});
  for (int n = 0; n <= N; ++n) {
    result.offsets[n].resize(tab.chains[n].size());
    for (size_t ci = 0; ci < tab.chains[n].size(); ++ci) {
      const Chain &ch = tab.chains[n][ci];
      result.offsets[n][ci] = x.counts[n];
      const SSetPtr &value = z.values[ch.objects.front()][ch.objects.back()];
      for (int zi = 0; zi < value->counts[n]; ++zi) {
        result.decode[n].push_back({static_cast<int>(ci), zi});
        x.labels[n].push_back(
            str("(", tab.label(ch), ";", value->label(n, zi), ")"));
      }
      x.counts[n] += value->counts[n];
    }
  }
  x.ensure_shape();
  for (int n = 1; n <= N; ++n)
    for (int s = 0; s < x.counts[n]; ++s) {
      auto [ci, zi] = result.decode[n][s];
      const Chain &ch = tab.chains[n][ci];
      const int x0 = ch.objects.front(), xn = ch.objects.back();
      for (int i = 0; i <= n; ++i) {
        Chain fch = tab.face(ch, i);
        int fchain = tab.id_of(fch);
        int zimg;
        if (i == 0) {
          // push along phi_1, then vertical d_0
          int pushed = z.left[ch.morphs.front()][xn].at[n][zi];
          zimg = z.values[ch.objects[1]][xn]->face[n][0][pushed];
        } else if (i == n) {
          // pull along phi_n, then vertical d_n
          int pulled = z.right[x0][ch.morphs.back()].at[n][zi];
          zimg = z.values[x0][ch.objects[n - 1]]->face[n][n][pulled];
        } else {
          zimg = z.values[x0][xn]->face[n][i][zi];
        }
        x.face[n][i][s] = result.encode(n - 1, fchain, zimg);
      }
    }
  for (int n = 0; n < N; ++n)
    for (int s = 0; s < x.counts[n]; ++s) {
      auto [ci, zi] = result.decode[n][s];
      const Chain &ch = tab.chains[n][ci];
      const SSetPtr &value = z.values[ch.objects.front()][ch.objects.back()];
      for (int i = 0; i <= n; ++i) {
        int dchain = tab.id_of(tab.degen(ch, i));
        x.degen[n][i][s] = result.encode(n + 1, dchain, value->degen[n][i][zi]);
      }
    }
  result.gsset.space = freeze(std::move(x));
  result.gsset.group = z.action.group;
  const int order = z.action.group.order;
  result.gsset.act.assign(order, {});
  for (int g = 0; g < order; ++g) {
    result.gsset.act[g].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      result.gsset.act[g][n].resize(result.gsset.space->counts[n]);
      for (int s = 0; s < result.gsset.space->counts[n]; ++s) {
        auto [ci, zi] = result.decode[n][s];
        const Chain &ch = tab.chains[n][ci];
        Chain gch = tab.translate(ch, z.action.on_obj[g], z.action.on_mor[g]);
        int zimg =
            z.eta[g][ch.objects.front()][ch.objects.back()].at[n][zi];
        result.gsset.act[g][n][s] =
            result.encode(n, tab.id_of(gch), zimg);
      }
    }
  }
  return result;
}

BarBiResult bar_bi(const BiDiagram &z, int trunc) {
  BarBiResult result;
  result.chains = enumerate_chains(z.cat, trunc);
  const ChainTable &tab = result.chains;
  const int N = trunc;
  BiSSet &b = result.bisset;
  b.trunc_m = N;
  b.trunc_n = N;
  b.counts.assign(N + 1, std::vector<int>(N + 1, 0));
  result.offsets.assign(N + 1, std::vector<std::vector<int>>(N + 1));
  result.decode.assign(
      N + 1, std::vector<std::vector<std::pair<int, int>>>(N + 1));
  b.labels.assign(N + 1, {});
  for (int m = 0; m <= N; ++m) {
    b.labels[m].assign(N + 1, {});
    for (int n = 0; n <= N; ++n) {
      result.offsets[m][n].resize(tab.chains[m].size());
      for (size_t ci = 0; ci < tab.chains[m].size(); ++ci) {
        const Chain &ch = tab.chains[m][ci];
        result.offsets[m][n][ci] = b.counts[m][n];
        const SSetPtr &value =
            z.values[ch.objects.front()][ch.objects.back()];
        for (int zi = 0; zi < value->counts[n]; ++zi) {
          result.decode[m][n].push_back({static_cast<int>(ci), zi});
          b.labels[m][n].push_back(
              str("(", tab.label(ch), ";", value->label(n, zi), ")"));
        }
        b.counts[m][n] += value->counts[n];
      }
    }
  }
  auto alloc = [&](auto &table, bool is_h, bool is_face) {
    table.assign(N + 1, {});
    for (int m = 0; m <= N; ++m) {
      table[m].assign(N + 1, {});
      for (int n = 0; n <= N; ++n) {
        int arity = (is_h ? m : n) + 1;
        bool defined = is_h ? (is_face ? m >= 1 : m < N)
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
  auto encode = [&](int m, int n, int chain, int zi) {
    return result.offsets[m][n][chain] + zi;
  };
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (int s = 0; s < b.counts[m][n]; ++s) {
        auto [ci, zi] = result.decode[m][n][s];
        const Chain &ch = tab.chains[m][ci];
        const int x0 = ch.objects.front(), xm = ch.objects.back();
        if (m >= 1)
          for (int i = 0; i <= m; ++i) {
            Chain fch = tab.face(ch, i);
            int fchain = tab.id_of(fch);
            int zimg;
            if (i == 0)
              zimg = z.left[ch.morphs.front()][xm].at[n][zi];
            else if (i == m)
              zimg = z.right[x0][ch.morphs.back()].at[n][zi];
            else
              zimg = zi;
            b.hface[m][n][i][s] = encode(m - 1, n, fchain, zimg);
          }
        if (m < N)
          for (int i = 0; i <= m; ++i)
            b.hdegen[m][n][i][s] =
                encode(m + 1, n, tab.id_of(tab.degen(ch, i)), zi);
        const SSetPtr &value = z.values[x0][xm];
        if (n >= 1)
          for (int j = 0; j <= n; ++j)
            b.vface[m][n][j][s] = encode(m, n - 1, ci, value->face[n][j][zi]);
        if (n < N)
          for (int j = 0; j <= n; ++j)
            b.vdegen[m][n][j][s] = encode(m, n + 1, ci, value->degen[n][j][zi]);
      }
  const int order = z.action.group.order;
  b.group = z.action.group;
  b.act.assign(order, {});
  for (int g = 0; g < order; ++g) {
    b.act[g].assign(N + 1, {});
    for (int m = 0; m <= N; ++m) {
      b.act[g][m].assign(N + 1, {});
      for (int n = 0; n <= N; ++n) {
        b.act[g][m][n].resize(b.counts[m][n]);
        for (int s = 0; s < b.counts[m][n]; ++s) {
          auto [ci, zi] = result.decode[m][n][s];
          const Chain &ch = tab.chains[m][ci];
          Chain gch =
              tab.translate(ch, z.action.on_obj[g], z.action.on_mor[g]);
          int zimg =
              z.eta[g][ch.objects.front()][ch.objects.back()].at[n][zi];
          b.act[g][m][n][s] = encode(m, n, tab.id_of(gch), zimg);
        }
      }
    }
  }
  return result;
}

BarFTResult bar_ft(const SSetDiagram &f, const SSetDiagram &t, int trunc) {
  BarFTResult result;
  result.z = product_bidiagram(f, t);
  result.bar = bar(result.z, trunc);
  return result;
}

SimplicialMap
bar_map(const BarResult &from, const BarResult &to,
        const FinFunctor &chain_functor,
        const std::function<int(int, int, int, int)> &zmap) {
  const int N = from.gsset.space->trunc;
  SimplicialMap r;
  r.src = from.gsset.space;
  r.tgt = to.gsset.space;
  r.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    r.at[n].resize(r.src->counts[n]);
    for (int s = 0; s < r.src->counts[n]; ++s) {
      auto [ci, zi] = from.decode[n][s];
      const Chain &ch = from.chains.chains[n][ci];
      Chain img = from.chains.translate(ch, chain_functor.obj,
                                        chain_functor.mor);
      int tchain = to.chains.id_of(img);
      int tz = zmap(ch.objects.front(), ch.objects.back(), n, zi);
      r.at[n][s] = to.encode(n, tchain, tz);
    }
  }
  return r;
}

SimplicialMap bar_induced_map(const BarResult &from, const BarResult &to,
                              const BiDiagramMorphism &eps) {
  FinFunctor ident = identity_functor(from.chains.cat);
  return bar_map(from, to, ident, [&](int x0, int xn, int n, int z) {
    return eps.components[x0][xn].at[n][z];
  });
}

// --- homotopy colimit ------------------------------------------------------------

HocolimResult hocolim(const SSetDiagram &f, int trunc) {
  if (f.variance != Variance::Covariant)
    throw Error("hocolim expects a covariant diagram");
  if (f.trunc() != trunc)
    throw Error(str("hocolim: diagram truncation ", f.trunc(),
                    " differs from requested ", trunc));
  HocolimResult result;
  FinFunctor ident = identity_functor(f.cat);
  result.comma = comma_nerve_diagram(ident, f.action, f.action, trunc);
  result.tens = tensor(f, result.comma.diagram);
  return result;
}

SimplicialMap hocolim_induced_map(const HocolimResult &from,
                                  const HocolimResult &to,
                                  const SSetDiagram &f_from,
                                  const SSetDiagram &f_to,
                                  const DiagramMorphism &eps) {
  return tensor_induced_map(from.tens, to.tens, f_from, f_to, eps,
                            from.comma.diagram);
}

// --- Grothendieck construction -------------------------------------------------------

GrothendieckResult grothendieck(const CatDiagram &f) {
  const FinCategory &c = *f.cat;
  GrothendieckResult result;
  FinCategory g;
  result.obj_of.assign(c.object_count, {});
  for (int x = 0; x < c.object_count; ++x) {
    result.obj_of[x].resize(f.values[x]->object_count);
    for (int a = 0; a < f.values[x]->object_count; ++a) {
      result.obj_of[x][a] = static_cast<int>(result.obj_pair.size());
      result.obj_pair.push_back({x, a});
      g.object_names.push_back(
          str("(", c.object_name(x), ",", f.values[x]->object_name(a), ")"));
    }
  }
  g.object_count = static_cast<int>(result.obj_pair.size());
  std::map<std::tuple<int, int, int>, int> mor_index; // (fmor, a, u) -> id
  for (int o = 0; o < g.object_count; ++o) {
    auto [x, a] = result.obj_pair[o];
    g.morphs.push_back({o, o, str("1_", o)});
    result.mor_pair.push_back(
        {c.identity_of(x), f.values[x]->identity_of(a)});
    mor_index[{c.identity_of(x), a, f.values[x]->identity_of(a)}] =
        static_cast<int>(result.mor_pair.size()) - 1;
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    int x = c.src(m), y = c.tgt(m);
    for (int a = 0; a < f.values[x]->object_count; ++a)
      for (int u = 0; u < f.values[y]->morphism_count(); ++u) {
        if (f.values[y]->src(u) != f.maps[m].obj[a])
          continue;
        if (c.is_identity(m) && f.values[y]->is_identity(u))
          continue; // identity of (x,a), already placed
        int id = g.morphism_count();
        mor_index[{m, a, u}] = id;
        g.morphs.push_back({result.obj_of[x][a],
                            result.obj_of[y][f.values[y]->tgt(u)],
                            str("(", c.morphs[m].name, ",",
                                f.values[y]->morphs[u].name, ")")});
        result.mor_pair.push_back({m, u});
      }
  }
  auto lookup = [&](int m, int a, int u) {
    auto it = mor_index.find({m, a, u});
    if (it == mor_index.end())
      throw Error("grothendieck: morphism lookup failed");
    return it->second;
  };
  const int nmor = g.morphism_count();
  g.comp.assign(nmor, std::vector<int>(nmor, -1));
  for (int m2 = 0; m2 < nmor; ++m2)
    for (int m1 = 0; m1 < nmor; ++m1) {
      if (!g.composable(m2, m1))
        continue;
      auto [f2, u2] = result.mor_pair[m2];
      auto [f1, u1] = result.mor_pair[m1];
      auto [x1, a1] = result.obj_pair[g.morphs[m1].src];
      int fcomp = c.compose(f2, f1);
      int z = c.tgt(f2);
      // v o F(f2)(u1)
      int pushed = f.maps[f2].mor[u1];
      int ucomp = f.values[z]->compose(u2, pushed);
      g.comp[m2][m1] = lookup(fcomp, a1, ucomp);
      (void)x1;
    }
  result.cat = std::make_shared<const FinCategory>(std::move(g));
  result.action.group = f.action.group;
  result.action.cat = result.cat;
  const int order = f.action.group.order;
  for (int e = 0; e < order; ++e) {
    std::vector<int> oo(result.obj_pair.size());
    for (size_t o = 0; o < result.obj_pair.size(); ++o) {
      auto [x, a] = result.obj_pair[o];
      oo[o] = result.obj_of[f.action.on_obj[e][x]][f.eta[e][x].obj[a]];
    }
    std::vector<int> om(result.mor_pair.size());
    for (size_t m = 0; m < result.mor_pair.size(); ++m) {
      auto [fm, u] = result.mor_pair[m];
      auto [x, a] = result.obj_pair[result.cat->morphs[m].src];
      int y = c.tgt(fm);
      om[m] = lookup(f.action.on_mor[e][fm], f.eta[e][x].obj[a],
                     f.eta[e][y].mor[u]);
    }
    result.action.on_obj.push_back(std::move(oo));
    result.action.on_mor.push_back(std::move(om));
  }
  return result;
}

// --- homotopy pushdown -----------------------------------------------------------------

HomMixed hom_mixed_from(const FinFunctor &s, const GCatAction &action_d,
                        const GCatAction &action_c, int trunc) {
  ValidationReport eq = check_equivariant(s, action_d, action_c);
  if (!eq.ok())
    throw Error(str("hom_mixed_from: functor not equivariant at ",
                    eq.items.front().where));
  const FinCategory &c = *s.target;
  const FinCategory &d = *s.source;
  HomMixed result;
  MixedBiDiagram &t = result.t;
  t.cat_contra = s.source; // contravariant over D
  t.cat_cov = s.target;    // covariant over C
  t.action_contra = action_d;
  t.action_cov = action_c;
  const int nd = d.object_count, nc = c.object_count;
  result.hom_ids.assign(nd, std::vector<std::vector<int>>(nc));
  t.values.assign(nd, std::vector<SSetPtr>(nc));
  for (int y = 0; y < nd; ++y)
    for (int x = 0; x < nc; ++x) {
      result.hom_ids[y][x] = c.hom(s.obj[y], x);
      std::vector<std::string> names;
      for (int m : result.hom_ids[y][x])
        names.push_back(c.morphs[m].name);
      t.values[y][x] =
          freeze(constant_sset(static_cast<int>(names.size()), trunc, names));
    }
  auto cmap_for = [&](int g, int x) {
    // hom(S tgt(g), x) -> hom(S src(g), x), u -> u o S(g)
    int y1 = d.tgt(g), y0 = d.src(g);
    std::vector<int> fn;
    for (int u : result.hom_ids[y1][x]) {
      fn.push_back(find_index(result.hom_ids[y0][x], c.compose(u, s.mor[g])));
    }
    SimplicialMap m;
    m.src = t.values[y1][x];
    m.tgt = t.values[y0][x];
    m.at.assign(trunc + 1, fn);
    return m;
  };
  t.cmap.assign(d.morphism_count(), std::vector<SimplicialMap>(nc));
  for (int g = 0; g < d.morphism_count(); ++g)
    for (int x = 0; x < nc; ++x)
      t.cmap[g][x] = cmap_for(g, x);
  t.dmap.assign(nd, std::vector<SimplicialMap>(c.morphism_count()));
  for (int y = 0; y < nd; ++y)
    for (int fmor = 0; fmor < c.morphism_count(); ++fmor) {
      int x0 = c.src(fmor), x1 = c.tgt(fmor);
      std::vector<int> fn;
      for (int u : result.hom_ids[y][x0])
        fn.push_back(find_index(result.hom_ids[y][x1], c.compose(fmor, u)));
      SimplicialMap m;
      m.src = t.values[y][x0];
      m.tgt = t.values[y][x1];
      m.at.assign(trunc + 1, fn);
      t.dmap[y][fmor] = std::move(m);
    }
  const int order = action_c.group.order;
  t.eta.assign(order, {});
  for (int g = 0; g < order; ++g) {
    t.eta[g].assign(nd, std::vector<SimplicialMap>(nc));
    for (int y = 0; y < nd; ++y)
      for (int x = 0; x < nc; ++x) {
        int gy = action_d.on_obj[g][y], gx = action_c.on_obj[g][x];
        std::vector<int> fn;
        for (int u : result.hom_ids[y][x])
          fn.push_back(
              find_index(result.hom_ids[gy][gx], action_c.on_mor[g][u]));
        SimplicialMap m;
        m.src = t.values[y][x];
        m.tgt = t.values[gy][gx];
        m.at.assign(trunc + 1, fn);
        t.eta[g][y][x] = std::move(m);
      }
  }
  return result;
}

SSetDiagram mixed_fix_contra(const MixedBiDiagram &t, int x0) {
  SSetDiagram f;
  f.cat = t.cat_cov;
  f.action = trivial_action(FinGroup::trivial(), t.cat_cov);
  f.variance = Variance::Covariant;
  for (int y = 0; y < t.cat_cov->object_count; ++y)
    f.values.push_back(t.values[x0][y]);
  for (int m = 0; m < t.cat_cov->morphism_count(); ++m)
    f.maps.push_back(t.dmap[x0][m]);
  f.eta.resize(1);
  for (int y = 0; y < t.cat_cov->object_count; ++y)
    f.eta[0].push_back(identity_map(f.values[y]));
  return f;
}

SSetDiagram diagram_forget_action(const SSetDiagram &f) {
  SSetDiagram r = f;
  r.action = trivial_action(FinGroup::trivial(), f.cat);
  r.eta.assign(1, {});
  for (const auto &v : f.values)
    r.eta[0].push_back(identity_map(v));
  return r;
}

PushdownResult pushdown(const FinFunctor &s, const GCatAction &action_d,
                        const GCatAction &action_c, const SSetDiagram &f,
                        int trunc) {
  if (!(*f.cat == *s.source))
    throw Error("pushdown: F must live over the source of S");
  PushdownResult result;
  result.hom = hom_mixed_from(s, action_d, action_c, trunc);
  SSetDiagram f_plain = diagram_forget_action(f);
  const FinCategory &c = *s.target;
  const FinCategory &d = *s.source;
  for (int c0 = 0; c0 < c.object_count; ++c0) {
    SSetDiagram t_c0 = mixed_fix_cov(result.hom.t, c0);
    BiDiagram z = product_bidiagram(f_plain, t_c0);
    result.bars.push_back(bar(z, trunc));
  }
  SSetDiagram &diag = result.diagram;
  diag.cat = s.target;
  diag.action = action_c;
  diag.variance = Variance::Covariant;
  for (int c0 = 0; c0 < c.object_count; ++c0)
    diag.values.push_back(result.bars[c0].gsset.space);
  FinFunctor ident_d = identity_functor(s.source);
  auto hom_count = [&](int y, int x, int n) {
    (void)n;
    return static_cast<int>(result.hom.hom_ids[y][x].size());
  };
  for (int m = 0; m < c.morphism_count(); ++m) {
    int c0 = c.src(m), c1 = c.tgt(m);
    diag.maps.push_back(bar_map(
        result.bars[c0], result.bars[c1], ident_d,
        [&, m, c0, c1](int a, int b, int n, int z) {
          int hc0 = hom_count(b, c0, n);
          int hc1 = hom_count(b, c1, n);
          int xidx = z / hc0, uidx = z % hc0;
          int u = result.hom.hom_ids[b][c0][uidx];
          int nidx = find_index(result.hom.hom_ids[b][c1], c.compose(m, u));
          return xidx * hc1 + nidx;
        }));
  }
  const int order = action_c.group.order;
  diag.eta.resize(order);
  for (int g = 0; g < order; ++g)
    for (int c0 = 0; c0 < c.object_count; ++c0) {
      int gc0 = action_c.on_obj[g][c0];
      diag.eta[g].push_back(bar_map(
          result.bars[c0], result.bars[gc0], action_d.as_functor(g),
          [&, g, c0, gc0](int a, int b, int n, int z) {
            int hc0 = hom_count(b, c0, n);
            int xidx = z / hc0, uidx = z % hc0;
            int gx = f.eta[g][a].at[n][xidx];
            int u = result.hom.hom_ids[b][c0][uidx];
            int gb = action_d.on_obj[g][b];
            auto &ids = result.hom.hom_ids[gb][gc0];
            int nidx = find_index(ids, action_c.on_mor[g][u]);
            return gx * static_cast<int>(ids.size()) + nidx;
          }));
    }
  (void)d;
  return result;
}

} // namespace gcat
