#include "gcat/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <sstream>

namespace gcat {

using boost::multiprecision::cpp_rational;

ChainComplex chain_complex(const TruncatedSSet &x) {
  ChainComplex c;
  c.top = x.trunc;
  c.basis = nondegenerate(x);
  c.ranks.resize(c.top + 1);
  c.nd_index.assign(c.top + 1, {});
  for (int n = 0; n <= c.top; ++n) {
    c.ranks[n] = static_cast<int>(c.basis[n].size());
    c.nd_index[n].assign(x.counts[n], -1);
    for (int i = 0; i < c.ranks[n]; ++i)
      c.nd_index[n][c.basis[n][i]] = i;
  }
  c.boundary.resize(c.top + 1);
  for (int n = 1; n <= c.top; ++n) {
    c.boundary[n].assign(c.ranks[n - 1], std::vector<int>(c.ranks[n], 0));
    for (int j = 0; j < c.ranks[n]; ++j) {
      int s = c.basis[n][j];
      for (int i = 0; i <= n; ++i) {
        int fpos = c.nd_index[n - 1][x.face[n][i][s]];
        if (fpos >= 0)
          c.boundary[n][fpos][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  // dd = 0, hard assertion
  for (int n = 2; n <= c.top; ++n)
    for (int j = 0; j < c.ranks[n]; ++j)
      for (int r = 0; r < c.ranks[n - 2]; ++r) {
        long long acc = 0;
        for (int k = 0; k < c.ranks[n - 1]; ++k)
          acc += static_cast<long long>(c.boundary[n - 1][r][k]) *
                 c.boundary[n][k][j];
        if (acc != 0)
          throw Error(str("chain_complex: dd != 0 at degree ", n,
                          ", generator ", j));
      }
  return c;
}

std::string CoeffSystem::name() const {
  switch (kind) {
  case Integral:
    return "Z";
  case Rational:
    return "Q";
  case Fp:
    return str("F", p);
  }
  return "?";
}

std::vector<CoeffSystem> Coefficients::field_systems() const {
  std::vector<CoeffSystem> systems;
  if (rationals)
    systems.push_back(CoeffSystem::rational());
  for (int p : primes)
    systems.push_back(CoeffSystem::fp(p));
  return systems;
}

Coefficients parse_coefficients(const std::string &spec) {
  Coefficients c;
  c.rationals = false;
  c.primes.clear();
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    if (item == "q" || item == "Q")
      c.rationals = true;
    else {
      int p = 0;
      try {
        p = std::stoi(item);
      } catch (...) {
        throw Error(str("bad coefficient system: ", item));
      }
      if (p < 2)
        throw Error(str("bad prime: ", item));
      c.primes.push_back(p);
    }
  }
  if (!c.rationals && c.primes.empty())
    throw Error("no coefficient systems given");
  return c;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  os << coeff.name() << ":";
  for (size_t n = 0; n < betti.size(); ++n) {
    os << " b" << n << "=" << betti[n];
    if (coeff.kind == CoeffSystem::Integral && n < torsion.size() &&
        !torsion[n].empty()) {
      os << "+(";
      for (size_t i = 0; i < torsion[n].size(); ++i)
        os << (i ? "," : "") << "Z/" << torsion[n][i];
      os << ")";
    }
  }
  return os.str();
}

// --- Smith normal form ------------------------------------------------------------

namespace {

bigint babs(const bigint &v) { return v < 0 ? bigint(-v) : v; }

bool find_pivot(const std::vector<std::vector<bigint>> &m, int t, int &pr,
                int &pc) {
  bool found = false;
  bigint best = 0;
  for (int r = t; r < static_cast<int>(m.size()); ++r)
    for (int c = t; c < static_cast<int>(m[r].size()); ++c)
      if (m[r][c] != 0) {
        bigint a = babs(m[r][c]);
        if (!found || a < best) {
          best = a;
          pr = r;
          pc = c;
          found = true;
        }
      }
  return found;
}

} // namespace

SnfResult smith_normal_form(std::vector<std::vector<bigint>> m) {
  SnfResult result;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    int pr = t, pc = t;
    if (!find_pivot(m, t, pr, pc))
      break;
    std::swap(m[t], m[pr]);
    for (int r = 0; r < rows; ++r)
      std::swap(m[r][t], m[r][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r)
        if (m[r][t] != 0) {
          bigint q = m[r][t] / m[t][t];
          if (q != 0)
            for (int c = t; c < cols; ++c)
              m[r][c] -= q * m[t][c];
          if (m[r][t] != 0) {
            std::swap(m[t], m[r]); // remainder is smaller; continue reducing
            clean = false;
          }
        }
      for (int c = t + 1; c < cols; ++c)
        if (m[t][c] != 0) {
          bigint q = m[t][c] / m[t][t];
          if (q != 0)
            for (int r = t; r < rows; ++r)
              m[r][c] -= q * m[r][t];
          if (m[t][c] != 0) {
            for (int r = t; r < rows; ++r)
              std::swap(m[r][t], m[r][c]);
            clean = false;
          }
        }
    }
    // fold in any entry the pivot does not divide, then redo the cleanup
    bool redo = false;
    for (int r = t + 1; r < rows && !redo; ++r)
      for (int c = t + 1; c < cols && !redo; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (int cc = t; cc < cols; ++cc)
            m[t][cc] += m[r][cc];
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    result.invariants.push_back(babs(m[t][t]));
  }
  result.rank = static_cast<int>(result.invariants.size());
  return result;
}

// --- field linear algebra -------------------------------------------------------

namespace {

struct GFp {
  using T = long long;
  long long p;
  T zero() const { return 0; }
  T from_int(long long v) const {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(const T &v) const { return v == 0; }
  T add(const T &a, const T &b) const { return (a + b) % p; }
  T sub(const T &a, const T &b) const { return ((a - b) % p + p) % p; }
  T mul(const T &a, const T &b) const { return (a * b) % p; }
  T inv(const T &a) const {
    // Fermat: p prime, a != 0
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1)
        result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
};

struct QField {
  using T = cpp_rational;
  T zero() const { return 0; }
  T from_int(long long v) const { return T(v); }
  bool is_zero(const T &v) const { return v == 0; }
  T add(const T &a, const T &b) const { return a + b; }
  T sub(const T &a, const T &b) const { return a - b; }
  T mul(const T &a, const T &b) const { return a * b; }
  T inv(const T &a) const { return T(1) / a; }
};

// Reduced row echelon form in place; returns pivot columns.
template <class Field>
std::vector<int> rref(const Field &fld,
                      std::vector<std::vector<typename Field::T>> &m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (!fld.is_zero(m[r][col])) {
        sel = r;
        break;
      }
    if (sel < 0)
      continue;
    std::swap(m[row], m[sel]);
    typename Field::T piv_inv = fld.inv(m[row][col]);
    for (int c = col; c < cols; ++c)
      m[row][c] = fld.mul(m[row][c], piv_inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || fld.is_zero(m[r][col]))
        continue;
      typename Field::T factor = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = fld.sub(m[r][c], fld.mul(factor, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
std::vector<std::vector<typename Field::T>>
to_field(const Field &fld, const std::vector<std::vector<int>> &m) {
  std::vector<std::vector<typename Field::T>> r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].resize(m[i].size());
    for (size_t j = 0; j < m[i].size(); ++j)
      r[i][j] = fld.from_int(m[i][j]);
  }
  return r;
}

template <class Field>
int field_rank(const Field &fld, std::vector<std::vector<typename Field::T>> m) {
  return static_cast<int>(rref(fld, m).size());
}

// Kernel basis as column vectors.
template <class Field>
std::vector<std::vector<typename Field::T>>
kernel_basis(const Field &fld,
             std::vector<std::vector<typename Field::T>> m, int cols) {
  std::vector<int> pivots = rref(fld, m);
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t r = 0; r < pivots.size(); ++r)
    pivot_of_col[pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<typename Field::T>> basis;
  for (int j = 0; j < cols; ++j) {
    if (pivot_of_col[j] >= 0)
      continue;
    std::vector<typename Field::T> v(cols, fld.zero());
    v[j] = fld.from_int(1);
    for (int c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0)
        v[c] = fld.sub(fld.zero(), m[pivot_of_col[c]][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One degree of the induced-map check over one field.
template <class Field>
DegreeVerdict field_degree_verdict(const Field &fld, const ChainComplex &src,
                                   const ChainComplex &tgt,
                                   const std::vector<std::vector<int>> &map_k,
                                   int k) {
  DegreeVerdict v;
  auto boundary_or_empty = [&](const ChainComplex &c, int n, int expect_rows) {
    if (n >= 1 && n <= c.top)
      return to_field(fld, c.boundary[n]);
    return std::vector<std::vector<typename Field::T>>(
        expect_rows, std::vector<typename Field::T>());
  };
  const int ns = src.ranks[k], nt = tgt.ranks[k];
  // H_k dims
  auto bk_src = boundary_or_empty(src, k, k >= 1 ? src.ranks[k - 1] : 0);
  auto bk1_src = boundary_or_empty(src, k + 1, src.ranks[k]);
  auto bk_tgt = boundary_or_empty(tgt, k, k >= 1 ? tgt.ranks[k - 1] : 0);
  auto bk1_tgt = boundary_or_empty(tgt, k + 1, tgt.ranks[k]);
  int rank_bk_src = k >= 1 ? field_rank(fld, bk_src) : 0;
  int rank_bk1_src = k + 1 <= src.top ? field_rank(fld, bk1_src) : 0;
  int rank_bk_tgt = k >= 1 ? field_rank(fld, bk_tgt) : 0;
  int rank_bk1_tgt = k + 1 <= tgt.top ? field_rank(fld, bk1_tgt) : 0;
  v.h_src = ns - rank_bk_src - rank_bk1_src;
  v.h_tgt = nt - rank_bk_tgt - rank_bk1_tgt;
  if (v.h_src != v.h_tgt) {
    v.iso = false;
    return v;
  }
  if (v.h_tgt == 0) {
    v.iso = true;
    return v;
  }
  // Cycles of the source, pushed through the chain map, must span H_k(tgt).
  std::vector<std::vector<typename Field::T>> cycles;
  if (k >= 1) {
    cycles = kernel_basis(fld, bk_src, ns);
  } else {
    for (int j = 0; j < ns; ++j) {
      std::vector<typename Field::T> e(ns, fld.zero());
      e[j] = fld.from_int(1);
      cycles.push_back(std::move(e));
    }
  }
  const int n_cycles = static_cast<int>(cycles.size());
  const int n_bnd = k + 1 <= tgt.top && !bk1_tgt.empty()
                        ? static_cast<int>(bk1_tgt[0].size())
                        : 0;
  // columns: [ M * cycles | boundaries of tgt ]
  std::vector<std::vector<typename Field::T>> combined(
      nt, std::vector<typename Field::T>(n_cycles + n_bnd, fld.zero()));
  for (int j = 0; j < n_cycles; ++j)
    for (int r = 0; r < nt; ++r) {
      typename Field::T acc = fld.zero();
      for (int s = 0; s < ns; ++s)
        if (map_k[r][s] != 0)
          acc = fld.add(acc, fld.mul(fld.from_int(map_k[r][s]), cycles[j][s]));
      combined[r][j] = acc;
    }
  for (int j = 0; j < n_bnd; ++j)
    for (int r = 0; r < nt; ++r)
      combined[r][n_cycles + j] = bk1_tgt[r][j];
  int rank_combined = field_rank(fld, combined);
  // image dimension inside H_k(tgt)
  v.iso = (rank_combined - rank_bk1_tgt) == v.h_tgt;
  return v;
}

} // namespace

HomologyProfile homology(const ChainComplex &c, const CoeffSystem &coeff) {
  HomologyProfile profile;
  profile.coeff = coeff;
  if (c.top == 0) {
    // no boundaries stored at all; degree 0 reported as exact-free
    profile.betti.assign(1, c.ranks[0]);
    if (coeff.kind == CoeffSystem::Integral)
      profile.torsion.assign(1, {});
    return profile;
  }
  // degrees 0..top-1; degree top-1 uses the incoming boundary from degree top
  const int upto = c.top;
  profile.betti.assign(upto, 0);
  if (coeff.kind == CoeffSystem::Integral)
    profile.torsion.assign(upto, {});

  auto to_big = [](const std::vector<std::vector<int>> &m) {
    std::vector<std::vector<bigint>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
      r[i].resize(m[i].size());
      for (size_t j = 0; j < m[i].size(); ++j)
        r[i][j] = m[i][j];
    }
    return r;
  };

  if (coeff.kind == CoeffSystem::Integral || coeff.kind == CoeffSystem::Rational) {
    std::vector<SnfResult> snf(c.top + 1);
    for (int n = 1; n <= c.top; ++n)
      snf[n] = smith_normal_form(to_big(c.boundary[n]));
    for (int n = 0; n < upto; ++n) {
      int rank_out = n >= 1 ? snf[n].rank : 0;
      int rank_in = snf[n + 1].rank;
      profile.betti[n] = c.ranks[n] - rank_out - rank_in;
      if (coeff.kind == CoeffSystem::Integral)
        for (const bigint &d : snf[n + 1].invariants)
          if (d > 1)
            profile.torsion[n].push_back(d);
    }
    return profile;
  }
  GFp fld{coeff.p};
  std::vector<int> ranks(c.top + 1, 0);
  for (int n = 1; n <= c.top; ++n)
    ranks[n] = field_rank(fld, to_field(fld, c.boundary[n]));
  for (int n = 0; n < upto; ++n)
    profile.betti[n] = c.ranks[n] - (n >= 1 ? ranks[n] : 0) - ranks[n + 1];
  return profile;
}

std::vector<std::vector<std::vector<int>>>
chain_map(const SimplicialMap &f, const ChainComplex &src,
          const ChainComplex &tgt) {
  std::vector<std::vector<std::vector<int>>> m(src.top + 1);
  for (int n = 0; n <= src.top; ++n) {
    m[n].assign(tgt.ranks[n], std::vector<int>(src.ranks[n], 0));
    for (int j = 0; j < src.ranks[n]; ++j) {
      int image = f.at[n][src.basis[n][j]];
      int pos = tgt.nd_index[n][image];
      if (pos >= 0)
        m[n][pos][j] = 1;
    }
  }
  return m;
}

bool InducedIsoResult::all_iso() const {
  for (const auto &row : verdicts)
    for (const auto &v : row)
      if (!v.iso)
        return false;
  return true;
}

InducedIsoResult induced_iso(const SimplicialMap &f, const Coefficients &coeffs,
                             int max_degree) {
  ChainComplex src = chain_complex(*f.src);
  ChainComplex tgt = chain_complex(*f.tgt);
  auto m = chain_map(f, src, tgt);
  if (max_degree < 0)
    max_degree = std::max(0, src.top - 1);
  InducedIsoResult result;
  result.systems = coeffs.field_systems();
  for (const auto &sys : result.systems) {
    std::vector<DegreeVerdict> row;
    for (int k = 0; k <= max_degree; ++k) {
      if (sys.kind == CoeffSystem::Rational)
        row.push_back(field_degree_verdict(QField{}, src, tgt, m[k], k));
      else
        row.push_back(
            field_degree_verdict(GFp{sys.p}, src, tgt, m[k], k));
    }
    result.verdicts.push_back(std::move(row));
  }
  result.integral_derived.assign(max_degree + 1, true);
  for (const auto &row : result.verdicts)
    for (int k = 0; k <= max_degree; ++k)
      if (!row[k].iso)
        result.integral_derived[k] = false;
  return result;
}

std::string EquivalenceWitnessReport::to_string() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL")
     << " (necessary conditions; exact up to truncation-1)\n";
  for (const auto &w : per_subgroup) {
    os << "  H=" << w.subgroup.to_string() << ": "
       << (w.pass ? "ok" : str("FAIL ", w.failure)) << "\n";
    for (size_t i = 0; i < w.src_profiles.size(); ++i)
      os << "    src " << w.src_profiles[i].to_string() << " | tgt "
         << w.tgt_profiles[i].to_string() << "\n";
  }
  return os.str();
}

EquivalenceWitnessReport g_equivalence_witness(const SimplicialMap &f,
                                               const GSSet &src,
                                               const GSSet &tgt,
                                               const Coefficients &coeffs,
                                               const Limits &limits) {
  ValidationReport eq = check_equivariant_map(f, src, tgt);
  if (!eq.ok())
    throw Error(str("g_equivalence_witness: map is not equivariant: ",
                    eq.items.front().where));
  EquivalenceWitnessReport report;
  report.pass = true;
  for (const Subgroup &h : subgroups(src.group, limits)) {
    SubgroupWitness w;
    w.subgroup = h;
    FixedSubcomplex fs = fixed_subcomplex(src, h);
    FixedSubcomplex ft = fixed_subcomplex(tgt, h);
    SimplicialMap restricted;
    restricted.src = fs.space;
    restricted.tgt = ft.space;
    restricted.at.resize(fs.space->trunc + 1);
    for (int n = 0; n <= fs.space->trunc; ++n) {
      restricted.at[n].resize(fs.space->counts[n]);
      for (int s = 0; s < fs.space->counts[n]; ++s) {
        int image = f.at[n][fs.inclusion.at[n][s]];
        int pos = ft.sub_index[n][image];
        if (pos < 0)
          throw Error("g_equivalence_witness: fixed simplex mapped outside "
                      "the fixed subcomplex");
        restricted.at[n][s] = pos;
      }
    }
    ChainComplex cs = chain_complex(*fs.space);
    ChainComplex ct = chain_complex(*ft.space);
    for (const auto &sys : coeffs.field_systems()) {
      w.src_profiles.push_back(homology(cs, sys));
      w.tgt_profiles.push_back(homology(ct, sys));
    }
    w.verdicts = induced_iso(restricted, coeffs);
    w.pass = w.verdicts.all_iso();
    if (!w.pass) {
      for (size_t i = 0; i < w.verdicts.systems.size() && w.failure.empty();
           ++i)
        for (size_t k = 0; k < w.verdicts.verdicts[i].size(); ++k)
          if (!w.verdicts.verdicts[i][k].iso) {
            w.failure = str("at H=", h.to_string(), " degree ", k, " over ",
                            w.verdicts.systems[i].name(), " (h_src=",
                            w.verdicts.verdicts[i][k].h_src, ", h_tgt=",
                            w.verdicts.verdicts[i][k].h_tgt, ")");
            break;
          }
      report.pass = false;
    }
    report.per_subgroup.push_back(std::move(w));
  }
  return report;
}

} // namespace gcat
