#ifndef GCAT_SSET_HPP
#define GCAT_SSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcat/base.hpp"
#include "gcat/group.hpp"

namespace gcat {

// Degreewise-finite simplicial set stored up to a truncation degree.
// Simplices are abstract ids 0..counts[n]-1 per degree; face[n][i][s] is
// d_i(s) for 1 <= n <= trunc, degen[n][i][s] is s_i(s) for 0 <= n < trunc.
// Labels are optional and purely for reports.
struct TruncatedSSet {
  int trunc = 0;
  std::vector<int> counts;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;
  std::vector<std::vector<std::string>> labels;

  int d(int n, int i, int s) const { return face[n][i][s]; }
  int s(int n, int i, int sx) const { return degen[n][i][sx]; }
  int total_simplices() const;
  std::string label(int n, int s) const;
  void ensure_shape(); // allocates face/degen vectors to match counts
};

using SSetPtr = std::shared_ptr<const TruncatedSSet>;

inline SSetPtr freeze(TruncatedSSet x) {
  return std::make_shared<const TruncatedSSet>(std::move(x));
}

ValidationReport validate_sset(const TruncatedSSet &x);

// --- standard complexes -------------------------------------------------

// One simplex in each degree (the terminal simplicial set).
TruncatedSSet point_sset(int trunc);
// Delta^dim truncated: degree-n simplices are monotone (n+1)-tuples in
// {0..dim}; ids follow lexicographic order of the tuples.
TruncatedSSet standard_simplex(int dim, int trunc);
// Boundary of Delta^2 (the simplicial circle).
TruncatedSSet boundary_delta2(int trunc);
// A finite set as a constant simplicial set (all structure maps identity).
TruncatedSSet constant_sset(int set_size, int trunc,
                            const std::vector<std::string> &names = {});
TruncatedSSet empty_sset(int trunc);

// --- simplicial maps ------------------------------------------------------

struct SimplicialMap {
  SSetPtr src;
  SSetPtr tgt;
  std::vector<std::vector<int>> at; // at[n][s]

  int apply(int n, int s) const { return at[n][s]; }
};

ValidationReport validate_map(const SimplicialMap &f);
SimplicialMap identity_map(SSetPtr x);
SimplicialMap compose_maps(const SimplicialMap &g, const SimplicialMap &f);
SimplicialMap constant_map(SSetPtr src, SSetPtr tgt, int base_vertex);

struct IsoResult {
  bool iso = false;
  std::string witness; // empty when iso
  explicit operator bool() const { return iso; }
};

// Inverts a degreewise bijection; throws when not bijective.
SimplicialMap invert_map(const SimplicialMap &f);

// --- G-simplicial sets ----------------------------------------------------

struct GSSet {
  SSetPtr space;
  FinGroup group;
  // act[g][n][s]; act[0] is the identity.
  std::vector<std::vector<std::vector<int>>> act;

  int apply(int g, int n, int s) const { return act[g][n][s]; }
  SimplicialMap action_map(int g) const;
  static GSSet with_trivial_action(SSetPtr space, const FinGroup &group);
};

ValidationReport validate_gsset(const GSSet &x);

// True iff f commutes with every group element of the two actions.
ValidationReport check_equivariant_map(const SimplicialMap &f,
                                       const GSSet &src, const GSSet &tgt);

// Degreewise bijectivity check; with actions supplied, also requires
// commuting with every group element (the "≅_G" claims).
IsoResult is_isomorphism(const SimplicialMap &f, const GSSet *src_action = nullptr,
                         const GSSet *tgt_action = nullptr);

// --- coproduct / product --------------------------------------------------

struct CoproductResult {
  SSetPtr space;
  std::vector<SimplicialMap> injections;
  // global simplex -> (component, local id), per degree
  std::vector<std::vector<std::pair<int, int>>> component_of;
  // offsets[k][n]: first global id of component k in degree n
  std::vector<std::vector<int>> offsets;
};
CoproductResult coproduct(const std::vector<SSetPtr> &parts);
// Componentwise action: all parts over the same group.
GSSet coproduct_gsset(const std::vector<GSSet> &parts,
                      CoproductResult *out_parts = nullptr);

struct ProductResult {
  SSetPtr space;
  SimplicialMap proj_left;
  SimplicialMap proj_right;
  int right_counts(int n) const { return rc[n]; }
  // pair (a,b) in degree n <-> id a*rc[n]+b
  int id_of(int n, int a, int b) const { return a * rc[n] + b; }
  std::pair<int, int> pair_of(int n, int s) const {
    return {s / rc[n], s % rc[n]};
  }
  std::vector<int> rc;
};
ProductResult product(SSetPtr a, SSetPtr b);
GSSet product_gsset(const GSSet &a, const GSSet &b,
                    ProductResult *out_parts = nullptr);

// --- degeneracy bookkeeping ------------------------------------------------

// nondegenerate[n] lists the simplex ids of degree n not in the image of
// any degeneracy; all of degree 0 qualifies.
std::vector<std::vector<int>> nondegenerate(const TruncatedSSet &x);
std::vector<long long> nondegenerate_counts(const TruncatedSSet &x);

// --- fixed points -----------------------------------------------------------

struct FixedSubcomplex {
  SSetPtr space;
  SimplicialMap inclusion;
  // per degree: ambient id -> sub id or -1
  std::vector<std::vector<int>> sub_index;
};
// Simplices fixed by every element of h (indices into x.group).
FixedSubcomplex fixed_subcomplex(const GSSet &x, const Subgroup &h);

// --- bisimplicial sets ------------------------------------------------------

// Horizontal index m, vertical n. hface[m][n][i][s] lowers m, vface lowers n.
struct BiSSet {
  int trunc_m = 0;
  int trunc_n = 0;
  std::vector<std::vector<int>> counts; // [m][n]
  std::vector<std::vector<std::vector<std::vector<int>>>> hface, hdegen;
  std::vector<std::vector<std::vector<std::vector<int>>>> vface, vdegen;
  std::vector<std::vector<std::vector<std::string>>> labels;
  // optional bidegree-preserving action: act[g][m][n][s]
  std::vector<std::vector<std::vector<std::vector<int>>>> act;
  FinGroup group;
  bool has_action() const { return !act.empty(); }
};

ValidationReport validate_bisset(const BiSSet &b);

// Diagonal: degree-n simplices are the (n,n) ones; d_i = hd_i o vd_i,
// s_i = hs_i o vs_i. Requires trunc_m == trunc_n. Carries the action when
// present.
GSSet diagonal(const BiSSet &b);

} // namespace gcat

#endif
