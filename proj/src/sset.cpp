#include "gcat/sset.hpp"

#include <algorithm>
#include <map>

namespace gcat {

int TruncatedSSet::total_simplices() const {
  int total = 0;
  for (int c : counts)
    total += c;
  return total;
}

std::string TruncatedSSet::label(int n, int s) const {
  if (n < static_cast<int>(labels.size()) &&
      s < static_cast<int>(labels[n].size()) && !labels[n][s].empty())
    return labels[n][s];
  return str("s", n, ":", s);
}

void TruncatedSSet::ensure_shape() {
  counts.resize(trunc + 1, 0);
  face.assign(trunc + 1, {});
  degen.assign(trunc + 1, {});
  for (int n = 1; n <= trunc; ++n)
    face[n].assign(n + 1, std::vector<int>(counts[n], -1));
  for (int n = 0; n < trunc; ++n)
    degen[n].assign(n + 1, std::vector<int>(counts[n], -1));
}

ValidationReport validate_sset(const TruncatedSSet &x) {
  ValidationReport report;
  const int N = x.trunc;
  if (N < 0 || static_cast<int>(x.counts.size()) != N + 1) {
    report.format("sset.shape", "counts size does not match truncation");
    return report;
  }
  if (static_cast<int>(x.face.size()) != N + 1 ||
      static_cast<int>(x.degen.size()) != N + 1) {
    report.format("sset.shape", "face/degen tables sized differently");
    return report;
  }
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(x.face[n].size()) != n + 1) {
      report.format("sset.shape", str("face table at degree ", n));
      return report;
    }
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(x.face[n][i].size()) != x.counts[n]) {
        report.format("sset.shape", str("face(", n, ",", i, ") row length"));
        return report;
      }
      for (int s = 0; s < x.counts[n]; ++s)
        if (x.face[n][i][s] < 0 || x.face[n][i][s] >= x.counts[n - 1]) {
          report.format("sset.range",
                        str("d_", i, " of degree-", n, " simplex ", s));
          return report;
        }
    }
  }
  for (int n = 0; n < N; ++n) {
    if (static_cast<int>(x.degen[n].size()) != n + 1) {
      report.format("sset.shape", str("degen table at degree ", n));
      return report;
    }
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(x.degen[n][i].size()) != x.counts[n]) {
        report.format("sset.shape", str("degen(", n, ",", i, ") row length"));
        return report;
      }
      for (int s = 0; s < x.counts[n]; ++s)
        if (x.degen[n][i][s] < 0 || x.degen[n][i][s] >= x.counts[n + 1]) {
          report.format("sset.range",
                        str("s_", i, " of degree-", n, " simplex ", s));
          return report;
        }
    }
  }

  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int s = 0; s < x.counts[n]; ++s)
          if (x.face[n - 1][i][x.face[n][j][s]] !=
              x.face[n - 1][j - 1][x.face[n][i][s]])
            report.axiom("sset.face-face",
                         str("d_", i, " d_", j, " at (degree ", n,
                             ", simplex ", s, ")"));

  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int s = 0; s < x.counts[n]; ++s)
          if (x.degen[n + 1][i][x.degen[n][j][s]] !=
              x.degen[n + 1][j + 1][x.degen[n][i][s]])
            report.axiom("sset.degen-degen",
                         str("s_", i, " s_", j, " at (degree ", n,
                             ", simplex ", s, ")"));

  // d_i s_j relations
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int s = 0; s < x.counts[n]; ++s) {
          int lhs = x.face[n + 1][i][x.degen[n][j][s]];
          int rhs;
          if (i == j || i == j + 1)
            rhs = s;
          else if (i < j)
            rhs = x.degen[n - 1][j - 1][x.face[n][i][s]];
          else
            rhs = x.degen[n - 1][j][x.face[n][i - 1][s]];
          if (lhs != rhs)
            report.axiom("sset.face-degen",
                         str("d_", i, " s_", j, " at (degree ", n,
                             ", simplex ", s, ")"));
        }
  return report;
}

// --- standard complexes -----------------------------------------------------

TruncatedSSet point_sset(int trunc) { return constant_sset(1, trunc, {"*"}); }

namespace {

void monotone_tuples(int dim, int len, std::vector<int> &current,
                     std::vector<std::vector<int>> &out) {
  if (static_cast<int>(current.size()) == len) {
    out.push_back(current);
    return;
  }
  int low = current.empty() ? 0 : current.back();
  for (int v = low; v <= dim; ++v) {
    current.push_back(v);
    monotone_tuples(dim, len, current, out);
    current.pop_back();
  }
}

std::string tuple_label(const std::vector<int> &t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

TruncatedSSet from_tuples(
    int trunc, const std::vector<std::vector<std::vector<int>>> &tuples) {
  TruncatedSSet x;
  x.trunc = trunc;
  x.counts.resize(trunc + 1);
  std::vector<std::map<std::vector<int>, int>> index(trunc + 1);
  x.labels.resize(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    x.counts[n] = static_cast<int>(tuples[n].size());
    for (int s = 0; s < x.counts[n]; ++s) {
      index[n][tuples[n][s]] = s;
      x.labels[n].push_back(tuple_label(tuples[n][s]));
    }
  }
  x.ensure_shape();
  for (int n = 1; n <= trunc; ++n)
    for (int s = 0; s < x.counts[n]; ++s)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t = tuples[n][s];
        t.erase(t.begin() + i);
        x.face[n][i][s] = index[n - 1].at(t);
      }
  for (int n = 0; n < trunc; ++n)
    for (int s = 0; s < x.counts[n]; ++s)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t = tuples[n][s];
        t.insert(t.begin() + i, t[i]);
        x.degen[n][i][s] = index[n + 1].at(t);
      }
  return x;
}

} // namespace

TruncatedSSet standard_simplex(int dim, int trunc) {
  std::vector<std::vector<std::vector<int>>> tuples(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    std::vector<int> current;
    monotone_tuples(dim, n + 1, current, tuples[n]);
  }
  return from_tuples(trunc, tuples);
}

TruncatedSSet boundary_delta2(int trunc) {
  std::vector<std::vector<std::vector<int>>> tuples(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> current;
    monotone_tuples(2, n + 1, current, all);
    for (auto &t : all) {
      std::vector<int> distinct = t;
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      if (distinct.size() < 3)
        tuples[n].push_back(t);
    }
  }
  return from_tuples(trunc, tuples);
}

TruncatedSSet constant_sset(int set_size, int trunc,
                            const std::vector<std::string> &names) {
  TruncatedSSet x;
  x.trunc = trunc;
  x.counts.assign(trunc + 1, set_size);
  x.ensure_shape();
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < set_size; ++s)
        x.face[n][i][s] = s;
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < set_size; ++s)
        x.degen[n][i][s] = s;
  if (!names.empty()) {
    x.labels.assign(trunc + 1, {});
    for (int n = 0; n <= trunc; ++n)
      for (int s = 0; s < set_size; ++s)
        x.labels[n].push_back(s < static_cast<int>(names.size()) ? names[s]
                                                                 : str(s));
  }
  return x;
}

TruncatedSSet empty_sset(int trunc) { return constant_sset(0, trunc); }

// --- maps --------------------------------------------------------------------

ValidationReport validate_map(const SimplicialMap &f) {
  ValidationReport report;
  if (!f.src || !f.tgt) {
    report.format("map.endpoints", "missing source or target");
    return report;
  }
  const TruncatedSSet &a = *f.src;
  const TruncatedSSet &b = *f.tgt;
  if (a.trunc != b.trunc) {
    report.format("map.truncation", str(a.trunc, " vs ", b.trunc));
    return report;
  }
  if (static_cast<int>(f.at.size()) != a.trunc + 1) {
    report.format("map.shape", "one row per degree required");
    return report;
  }
  for (int n = 0; n <= a.trunc; ++n) {
    if (static_cast<int>(f.at[n].size()) != a.counts[n]) {
      report.format("map.shape", str("degree ", n, " row length"));
      return report;
    }
    for (int s = 0; s < a.counts[n]; ++s)
      if (f.at[n][s] < 0 || f.at[n][s] >= b.counts[n]) {
        report.format("map.range", str("degree ", n, " simplex ", s));
        return report;
      }
  }
  for (int n = 1; n <= a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < a.counts[n]; ++s)
        if (f.at[n - 1][a.face[n][i][s]] != b.face[n][i][f.at[n][s]])
          report.axiom("map.face",
                       str("d_", i, " at (degree ", n, ", simplex ", s, ")"));
  for (int n = 0; n < a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < a.counts[n]; ++s)
        if (f.at[n + 1][a.degen[n][i][s]] != b.degen[n][i][f.at[n][s]])
          report.axiom("map.degen",
                       str("s_", i, " at (degree ", n, ", simplex ", s, ")"));
  return report;
}

SimplicialMap identity_map(SSetPtr x) {
  SimplicialMap f;
  f.src = x;
  f.tgt = x;
  f.at.resize(x->trunc + 1);
  for (int n = 0; n <= x->trunc; ++n) {
    f.at[n].resize(x->counts[n]);
    for (int s = 0; s < x->counts[n]; ++s)
      f.at[n][s] = s;
  }
  return f;
}

SimplicialMap compose_maps(const SimplicialMap &g, const SimplicialMap &f) {
  if (f.tgt->counts != g.src->counts)
    throw Error("map composition: middle spaces differ");
  SimplicialMap r;
  r.src = f.src;
  r.tgt = g.tgt;
  r.at.resize(f.at.size());
  for (size_t n = 0; n < f.at.size(); ++n) {
    r.at[n].resize(f.at[n].size());
    for (size_t s = 0; s < f.at[n].size(); ++s)
      r.at[n][s] = g.at[n][f.at[n][s]];
  }
  return r;
}

SimplicialMap constant_map(SSetPtr src, SSetPtr tgt, int base_vertex) {
  if (tgt->counts[0] <= base_vertex)
    throw Error("constant_map: base vertex out of range");
  // Degenerate image of the base vertex in each degree.
  std::vector<int> image(tgt->trunc + 1);
  image[0] = base_vertex;
  for (int n = 0; n < tgt->trunc; ++n)
    image[n + 1] = tgt->degen[n][0][image[n]];
  SimplicialMap f;
  f.src = src;
  f.tgt = tgt;
  f.at.resize(src->trunc + 1);
  for (int n = 0; n <= src->trunc; ++n)
    f.at[n].assign(src->counts[n], image[n]);
  return f;
}

SimplicialMap invert_map(const SimplicialMap &f) {
  SimplicialMap r;
  r.src = f.tgt;
  r.tgt = f.src;
  r.at.resize(f.at.size());
  for (size_t n = 0; n < f.at.size(); ++n) {
    r.at[n].assign(f.tgt->counts[n], -1);
    for (size_t s = 0; s < f.at[n].size(); ++s) {
      if (r.at[n][f.at[n][s]] != -1)
        throw Error(str("invert_map: not injective in degree ", n));
      r.at[n][f.at[n][s]] = static_cast<int>(s);
    }
    for (int t = 0; t < f.tgt->counts[n]; ++t)
      if (r.at[n][t] == -1)
        throw Error(str("invert_map: not surjective in degree ", n));
  }
  return r;
}

// --- G-simplicial sets --------------------------------------------------------

SimplicialMap GSSet::action_map(int g) const {
  SimplicialMap f;
  f.src = space;
  f.tgt = space;
  f.at = act[g];
  return f;
}

GSSet GSSet::with_trivial_action(SSetPtr space, const FinGroup &group) {
  GSSet x;
  x.space = space;
  x.group = group;
  SimplicialMap id = identity_map(x.space);
  x.act.assign(group.order, id.at);
  return x;
}

ValidationReport validate_gsset(const GSSet &x) {
  ValidationReport report = validate_sset(*x.space);
  if (!report.ok())
    return report;
  const int n = x.group.order;
  if (static_cast<int>(x.act.size()) != n) {
    report.format("gsset.shape", "one table per group element required");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    SimplicialMap m = x.action_map(g);
    ValidationReport mr = validate_map(m);
    report.merge(mr, str("gsset.g", g, "."));
  }
  if (!report.ok())
    return report;
  for (int d = 0; d <= x.space->trunc; ++d)
    for (int s = 0; s < x.space->counts[d]; ++s)
      if (x.act[0][d][s] != s) {
        report.axiom("gsset.identity-element",
                     str("degree ", d, " simplex ", s));
        break;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = x.group.mul[a][b];
      for (int d = 0; d <= x.space->trunc; ++d)
        for (int s = 0; s < x.space->counts[d]; ++s)
          if (x.act[ab][d][s] != x.act[a][d][x.act[b][d][s]]) {
            report.axiom("gsset.homomorphism",
                         str("(", a, "*", b, ") at degree ", d, " simplex ",
                             s));
            d = x.space->trunc + 1;
            break;
          }
    }
  // Bijectivity per degree (follows from the homomorphism law; checked
  // directly so a failure names the degree).
  for (int g = 0; g < n; ++g)
    for (int d = 0; d <= x.space->trunc; ++d) {
      std::vector<bool> hit(x.space->counts[d], false);
      for (int s = 0; s < x.space->counts[d]; ++s)
        hit[x.act[g][d][s]] = true;
      for (int s = 0; s < x.space->counts[d]; ++s)
        if (!hit[s]) {
          report.axiom("gsset.bijection", str("element ", g, " degree ", d));
          break;
        }
    }
  return report;
}

ValidationReport check_equivariant_map(const SimplicialMap &f,
                                       const GSSet &src, const GSSet &tgt) {
  ValidationReport report;
  if (!(src.group == tgt.group)) {
    report.format("equivariance.group", "different groups");
    return report;
  }
  for (int g = 0; g < src.group.order; ++g)
    for (int n = 0; n <= f.src->trunc; ++n)
      for (int s = 0; s < f.src->counts[n]; ++s)
        if (f.at[n][src.act[g][n][s]] != tgt.act[g][n][f.at[n][s]]) {
          report.axiom("equivariance.map",
                       str("g=", g, " degree ", n, " simplex ",
                           f.src->label(n, s)));
          break;
        }
  return report;
}

IsoResult is_isomorphism(const SimplicialMap &f, const GSSet *src_action,
                         const GSSet *tgt_action) {
  for (int n = 0; n <= f.src->trunc; ++n) {
    if (f.src->counts[n] != f.tgt->counts[n])
      return {false, str("degree ", n, ": ", f.src->counts[n], " vs ",
                         f.tgt->counts[n], " simplices")};
    std::vector<bool> hit(f.tgt->counts[n], false);
    for (int s = 0; s < f.src->counts[n]; ++s) {
      if (hit[f.at[n][s]])
        return {false, str("degree ", n, ": not injective at ",
                           f.src->label(n, s))};
      hit[f.at[n][s]] = true;
    }
  }
  if (src_action && tgt_action) {
    ValidationReport eq = check_equivariant_map(f, *src_action, *tgt_action);
    if (!eq.ok())
      return {false, eq.items.front().where};
  }
  return {true, ""};
}

// --- coproduct / product -------------------------------------------------------

CoproductResult coproduct(const std::vector<SSetPtr> &parts) {
  if (parts.empty())
    throw Error("coproduct of zero complexes needs a truncation; use empty_sset");
  const int N = parts[0]->trunc;
  for (const auto &p : parts)
    if (p->trunc != N)
      throw Error("coproduct: truncation mismatch");
  CoproductResult result;
  TruncatedSSet x;
  x.trunc = N;
  x.counts.assign(N + 1, 0);
  result.offsets.assign(parts.size(), std::vector<int>(N + 1, 0));
  result.component_of.assign(N + 1, {});
  x.labels.assign(N + 1, {});
  for (size_t k = 0; k < parts.size(); ++k)
    for (int n = 0; n <= N; ++n) {
      result.offsets[k][n] = x.counts[n];
      for (int s = 0; s < parts[k]->counts[n]; ++s) {
        result.component_of[n].push_back({static_cast<int>(k), s});
        x.labels[n].push_back(
            str("c", k, "/", parts[k]->label(n, s)));
      }
      x.counts[n] += parts[k]->counts[n];
    }
  x.ensure_shape();
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s) {
        auto [k, local] = result.component_of[n][s];
        x.face[n][i][s] = result.offsets[k][n - 1] + parts[k]->face[n][i][local];
      }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s) {
        auto [k, local] = result.component_of[n][s];
        x.degen[n][i][s] =
            result.offsets[k][n + 1] + parts[k]->degen[n][i][local];
      }
  result.space = freeze(std::move(x));
  for (size_t k = 0; k < parts.size(); ++k) {
    SimplicialMap inj;
    inj.src = parts[k];
    inj.tgt = result.space;
    inj.at.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      inj.at[n].resize(parts[k]->counts[n]);
      for (int s = 0; s < parts[k]->counts[n]; ++s)
        inj.at[n][s] = result.offsets[k][n] + s;
    }
    result.injections.push_back(std::move(inj));
  }
  return result;
}

GSSet coproduct_gsset(const std::vector<GSSet> &parts,
                      CoproductResult *out_parts) {
  if (parts.empty())
    throw Error("coproduct_gsset: no parts");
  std::vector<SSetPtr> spaces;
  for (const auto &p : parts) {
    spaces.push_back(p.space);
    if (!(p.group == parts[0].group))
      throw Error("coproduct_gsset: incompatible groups");
  }
  CoproductResult co = coproduct(spaces);
  GSSet result;
  result.space = co.space;
  result.group = parts[0].group;
  const int N = co.space->trunc;
  result.act.assign(result.group.order, {});
  for (int g = 0; g < result.group.order; ++g) {
    result.act[g].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      result.act[g][n].resize(co.space->counts[n]);
      for (int s = 0; s < co.space->counts[n]; ++s) {
        auto [k, local] = co.component_of[n][s];
        result.act[g][n][s] = co.offsets[k][n] + parts[k].act[g][n][local];
      }
    }
  }
  if (out_parts)
    *out_parts = std::move(co);
  return result;
}

ProductResult product(SSetPtr a, SSetPtr b) {
  if (a->trunc != b->trunc)
    throw Error("product: truncation mismatch");
  const int N = a->trunc;
  ProductResult result;
  result.rc.resize(N + 1);
  TruncatedSSet x;
  x.trunc = N;
  x.counts.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    result.rc[n] = b->counts[n];
    x.counts[n] = a->counts[n] * b->counts[n];
  }
  x.ensure_shape();
  x.labels.assign(N + 1, {});
  for (int n = 0; n <= N; ++n)
    for (int s = 0; s < x.counts[n]; ++s) {
      int p = s / result.rc[n], q = s % result.rc[n];
      x.labels[n].push_back(str("(", a->label(n, p), ",", b->label(n, q), ")"));
    }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s) {
        int p = s / result.rc[n], q = s % result.rc[n];
        x.face[n][i][s] =
            a->face[n][i][p] * result.rc[n - 1] + b->face[n][i][q];
      }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s) {
        int p = s / result.rc[n], q = s % result.rc[n];
        x.degen[n][i][s] =
            a->degen[n][i][p] * result.rc[n + 1] + b->degen[n][i][q];
      }
  result.space = freeze(std::move(x));
  SimplicialMap pl, pr;
  pl.src = result.space;
  pl.tgt = a;
  pr.src = result.space;
  pr.tgt = b;
  pl.at.resize(N + 1);
  pr.at.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    pl.at[n].resize(result.space->counts[n]);
    pr.at[n].resize(result.space->counts[n]);
    for (int s = 0; s < result.space->counts[n]; ++s) {
      pl.at[n][s] = s / result.rc[n];
      pr.at[n][s] = s % result.rc[n];
    }
  }
  result.proj_left = std::move(pl);
  result.proj_right = std::move(pr);
  return result;
}

GSSet product_gsset(const GSSet &a, const GSSet &b, ProductResult *out_parts) {
  if (!(a.group == b.group))
    throw Error("product_gsset: incompatible groups");
  ProductResult prod = product(a.space, b.space);
  GSSet result;
  result.space = prod.space;
  result.group = a.group;
  const int N = prod.space->trunc;
  result.act.assign(result.group.order, {});
  for (int g = 0; g < result.group.order; ++g) {
    result.act[g].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      result.act[g][n].resize(prod.space->counts[n]);
      for (int s = 0; s < prod.space->counts[n]; ++s) {
        int p = s / prod.rc[n], q = s % prod.rc[n];
        result.act[g][n][s] = a.act[g][n][p] * prod.rc[n] + b.act[g][n][q];
      }
    }
  }
  if (out_parts)
    *out_parts = std::move(prod);
  return result;
}

// --- degeneracy bookkeeping -----------------------------------------------------

std::vector<std::vector<int>> nondegenerate(const TruncatedSSet &x) {
  std::vector<std::vector<int>> result(x.trunc + 1);
  for (int s = 0; s < x.counts[0]; ++s)
    result[0].push_back(s);
  for (int n = 1; n <= x.trunc; ++n) {
    std::vector<bool> degenerate(x.counts[n], false);
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < x.counts[n - 1]; ++s)
        degenerate[x.degen[n - 1][i][s]] = true;
    for (int s = 0; s < x.counts[n]; ++s)
      if (!degenerate[s])
        result[n].push_back(s);
  }
  return result;
}

std::vector<long long> nondegenerate_counts(const TruncatedSSet &x) {
  std::vector<long long> counts;
  for (const auto &level : nondegenerate(x))
    counts.push_back(static_cast<long long>(level.size()));
  return counts;
}

// --- fixed points -----------------------------------------------------------------

FixedSubcomplex fixed_subcomplex(const GSSet &x, const Subgroup &h) {
  for (int g : h.elements)
    if (g < 0 || g >= x.group.order)
      throw Error("fixed_subcomplex: subgroup element out of range");
  if (!is_subgroup(x.group, h.elements))
    throw Error(str("fixed_subcomplex: not a subgroup: ", h.to_string()));
  const TruncatedSSet &a = *x.space;
  FixedSubcomplex result;
  result.sub_index.assign(a.trunc + 1, {});
  TruncatedSSet sub;
  sub.trunc = a.trunc;
  sub.counts.assign(a.trunc + 1, 0);
  sub.labels.assign(a.trunc + 1, {});
  std::vector<std::vector<int>> kept(a.trunc + 1);
  for (int n = 0; n <= a.trunc; ++n) {
    result.sub_index[n].assign(a.counts[n], -1);
    for (int s = 0; s < a.counts[n]; ++s) {
      bool fixed = true;
      for (int g : h.elements)
        if (x.act[g][n][s] != s) {
          fixed = false;
          break;
        }
      if (fixed) {
        result.sub_index[n][s] = sub.counts[n]++;
        kept[n].push_back(s);
        sub.labels[n].push_back(a.label(n, s));
      }
    }
  }
  sub.ensure_shape();
  for (int n = 1; n <= a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int t = 0; t < sub.counts[n]; ++t)
        sub.face[n][i][t] = result.sub_index[n - 1][a.face[n][i][kept[n][t]]];
  for (int n = 0; n < a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (int t = 0; t < sub.counts[n]; ++t)
        sub.degen[n][i][t] = result.sub_index[n + 1][a.degen[n][i][kept[n][t]]];
  result.space = freeze(std::move(sub));
  SimplicialMap inc;
  inc.src = result.space;
  inc.tgt = x.space;
  inc.at.resize(a.trunc + 1);
  for (int n = 0; n <= a.trunc; ++n)
    inc.at[n] = kept[n];
  result.inclusion = std::move(inc);
  return result;
}

// --- bisimplicial sets ----------------------------------------------------------------

namespace {

// Validates simplicial identities along one direction of a bisimplicial set.
void validate_direction(
    const std::vector<std::vector<int>> &counts,
    const std::vector<std::vector<std::vector<std::vector<int>>>> &face,
    const std::vector<std::vector<std::vector<std::vector<int>>>> &degen,
    int trunc_main, int trunc_other, bool horizontal,
    ValidationReport &report) {
  auto cnt = [&](int main, int other) {
    return horizontal ? counts[main][other] : counts[other][main];
  };
  auto fc = [&](int main, int other, int i, int s) {
    return horizontal ? face[main][other][i][s] : face[other][main][i][s];
  };
  auto dg = [&](int main, int other, int i, int s) {
    return horizontal ? degen[main][other][i][s] : degen[other][main][i][s];
  };
  const char *tag = horizontal ? "bisset.h" : "bisset.v";
  for (int other = 0; other <= trunc_other; ++other) {
    for (int m = 2; m <= trunc_main; ++m)
      for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i)
          for (int s = 0; s < cnt(m, other); ++s)
            if (fc(m - 1, other, i, fc(m, other, j, s)) !=
                fc(m - 1, other, j - 1, fc(m, other, i, s)))
              report.axiom(str(tag, ".face-face"),
                           str("bidegree main=", m, " other=", other,
                               " simplex ", s));
    for (int m = 0; m + 2 <= trunc_main; ++m)
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
          for (int s = 0; s < cnt(m, other); ++s)
            if (dg(m + 1, other, i, dg(m, other, j, s)) !=
                dg(m + 1, other, j + 1, dg(m, other, i, s)))
              report.axiom(str(tag, ".degen-degen"),
                           str("bidegree main=", m, " other=", other,
                               " simplex ", s));
    for (int m = 0; m < trunc_main; ++m)
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m + 1; ++i)
          for (int s = 0; s < cnt(m, other); ++s) {
            int lhs = fc(m + 1, other, i, dg(m, other, j, s));
            int rhs;
            if (i == j || i == j + 1)
              rhs = s;
            else if (i < j)
              rhs = dg(m - 1, other, j - 1, fc(m, other, i, s));
            else
              rhs = dg(m - 1, other, j, fc(m, other, i - 1, s));
            if (lhs != rhs)
              report.axiom(str(tag, ".face-degen"),
                           str("bidegree main=", m, " other=", other,
                               " simplex ", s));
          }
  }
}

} // namespace

ValidationReport validate_bisset(const BiSSet &b) {
  ValidationReport report;
  const int M = b.trunc_m, N = b.trunc_n;
  if (static_cast<int>(b.counts.size()) != M + 1) {
    report.format("bisset.shape", "counts rows");
    return report;
  }
  for (int m = 0; m <= M; ++m)
    if (static_cast<int>(b.counts[m].size()) != N + 1) {
      report.format("bisset.shape", str("counts row ", m));
      return report;
    }
  // Table shapes and ranges.
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= N; ++n) {
      if (m >= 1)
        for (int i = 0; i <= m; ++i)
          for (int s = 0; s < b.counts[m][n]; ++s) {
            int v = b.hface[m][n][i][s];
            if (v < 0 || v >= b.counts[m - 1][n]) {
              report.format("bisset.range", str("hface at (", m, ",", n, ")"));
              return report;
            }
          }
      if (m < M)
        for (int i = 0; i <= m; ++i)
          for (int s = 0; s < b.counts[m][n]; ++s) {
            int v = b.hdegen[m][n][i][s];
            if (v < 0 || v >= b.counts[m + 1][n]) {
              report.format("bisset.range", str("hdegen at (", m, ",", n, ")"));
              return report;
            }
          }
      if (n >= 1)
        for (int j = 0; j <= n; ++j)
          for (int s = 0; s < b.counts[m][n]; ++s) {
            int v = b.vface[m][n][j][s];
            if (v < 0 || v >= b.counts[m][n - 1]) {
              report.format("bisset.range", str("vface at (", m, ",", n, ")"));
              return report;
            }
          }
      if (n < N)
        for (int j = 0; j <= n; ++j)
          for (int s = 0; s < b.counts[m][n]; ++s) {
            int v = b.vdegen[m][n][j][s];
            if (v < 0 || v >= b.counts[m][n + 1]) {
              report.format("bisset.range", str("vdegen at (", m, ",", n, ")"));
              return report;
            }
          }
    }

  validate_direction(b.counts, b.hface, b.hdegen, M, N, true, report);
  validate_direction(b.counts, b.vface, b.vdegen, N, M, false, report);

  // Horizontal and vertical structure maps commute.
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= N; ++n)
      for (int s = 0; s < b.counts[m][n]; ++s) {
        if (m >= 1 && n >= 1)
          for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= n; ++j)
              if (b.vface[m - 1][n][j][b.hface[m][n][i][s]] !=
                  b.hface[m][n - 1][i][b.vface[m][n][j][s]])
                report.axiom("bisset.hv-commute",
                             str("hd vd at (", m, ",", n, ") simplex ", s));
        if (m >= 1 && n < N)
          for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= n; ++j)
              if (b.vdegen[m - 1][n][j][b.hface[m][n][i][s]] !=
                  b.hface[m][n + 1][i][b.vdegen[m][n][j][s]])
                report.axiom("bisset.hv-commute",
                             str("hd vs at (", m, ",", n, ") simplex ", s));
        if (m < M && n >= 1)
          for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= n; ++j)
              if (b.vface[m + 1][n][j][b.hdegen[m][n][i][s]] !=
                  b.hdegen[m][n - 1][i][b.vface[m][n][j][s]])
                report.axiom("bisset.hv-commute",
                             str("hs vd at (", m, ",", n, ") simplex ", s));
        if (m < M && n < N)
          for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= n; ++j)
              if (b.vdegen[m + 1][n][j][b.hdegen[m][n][i][s]] !=
                  b.hdegen[m][n + 1][i][b.vdegen[m][n][j][s]])
                report.axiom("bisset.hv-commute",
                             str("hs vs at (", m, ",", n, ") simplex ", s));
      }

  if (b.has_action()) {
    if (static_cast<int>(b.act.size()) != b.group.order) {
      report.format("bisset.action-shape", "one table per element required");
      return report;
    }
    for (int m = 0; m <= M; ++m)
      for (int n = 0; n <= N; ++n)
        for (int s = 0; s < b.counts[m][n]; ++s)
          if (b.act[0][m][n][s] != s)
            report.axiom("bisset.identity-element",
                         str("(", m, ",", n, ") simplex ", s));
    for (int a = 0; a < b.group.order; ++a)
      for (int c = 0; c < b.group.order; ++c) {
        int ac = b.group.mul[a][c];
        for (int m = 0; m <= M; ++m)
          for (int n = 0; n <= N; ++n)
            for (int s = 0; s < b.counts[m][n]; ++s)
              if (b.act[ac][m][n][s] != b.act[a][m][n][b.act[c][m][n][s]])
                report.axiom("bisset.homomorphism",
                             str("(", a, "*", c, ") at (", m, ",", n, ")"));
      }
    for (int g = 0; g < b.group.order; ++g)
      for (int m = 0; m <= M; ++m)
        for (int n = 0; n <= N; ++n)
          for (int s = 0; s < b.counts[m][n]; ++s) {
            if (m >= 1)
              for (int i = 0; i <= m; ++i)
                if (b.act[g][m - 1][n][b.hface[m][n][i][s]] !=
                    b.hface[m][n][i][b.act[g][m][n][s]])
                  report.axiom("bisset.action-simplicial",
                               str("g=", g, " hd at (", m, ",", n, ")"));
            if (n >= 1)
              for (int j = 0; j <= n; ++j)
                if (b.act[g][m][n - 1][b.vface[m][n][j][s]] !=
                    b.vface[m][n][j][b.act[g][m][n][s]])
                  report.axiom("bisset.action-simplicial",
                               str("g=", g, " vd at (", m, ",", n, ")"));
            if (m < M)
              for (int i = 0; i <= m; ++i)
                if (b.act[g][m + 1][n][b.hdegen[m][n][i][s]] !=
                    b.hdegen[m][n][i][b.act[g][m][n][s]])
                  report.axiom("bisset.action-simplicial",
                               str("g=", g, " hs at (", m, ",", n, ")"));
            if (n < N)
              for (int j = 0; j <= n; ++j)
                if (b.act[g][m][n + 1][b.vdegen[m][n][j][s]] !=
                    b.vdegen[m][n][j][b.act[g][m][n][s]])
                  report.axiom("bisset.action-simplicial",
                               str("g=", g, " vs at (", m, ",", n, ")"));
          }
  }
  return report;
}

GSSet diagonal(const BiSSet &b) {
  if (b.trunc_m != b.trunc_n)
    throw Error("diagonal: bisimplicial truncations differ");
  const int N = b.trunc_m;
  TruncatedSSet x;
  x.trunc = N;
  x.counts.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    x.counts[n] = b.counts[n][n];
  x.ensure_shape();
  x.labels.assign(N + 1, {});
  for (int n = 0; n <= N; ++n)
    for (int s = 0; s < x.counts[n]; ++s) {
      std::string lbl;
      if (n < static_cast<int>(b.labels.size()) &&
          n < static_cast<int>(b.labels[n].size()) &&
          s < static_cast<int>(b.labels[n][n].size()))
        lbl = b.labels[n][n][s];
      x.labels[n].push_back(lbl);
    }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s)
        x.face[n][i][s] = b.vface[n - 1][n][i][b.hface[n][n][i][s]];
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.counts[n]; ++s)
        x.degen[n][i][s] = b.vdegen[n + 1][n][i][b.hdegen[n][n][i][s]];
  GSSet result;
  result.space = freeze(std::move(x));
  if (b.has_action()) {
    result.group = b.group;
    result.act.assign(b.group.order, {});
    for (int g = 0; g < b.group.order; ++g) {
      result.act[g].resize(N + 1);
      for (int n = 0; n <= N; ++n)
        result.act[g][n] = b.act[g][n][n];
    }
  } else {
    result = GSSet::with_trivial_action(result.space, FinGroup::trivial());
  }
  return result;
}

} // namespace gcat
