#ifndef GCAT_CONSTRUCTIONS_HPP
#define GCAT_CONSTRUCTIONS_HPP

#include <functional>
#include <map>

#include "gcat/diagram.hpp"
#include "gcat/homology.hpp"

namespace gcat {

// --- composable chains -------------------------------------------------------

// X_0 -phi_1-> X_1 -> ... -phi_n-> X_n; a 0-chain is a single object.
struct Chain {
  std::vector<int> objects;
  std::vector<int> morphs;
  int length() const { return static_cast<int>(morphs.size()); }
};

struct ChainTable {
  CatPtr cat;
  int max_len = 0;
  std::vector<std::vector<Chain>> chains; // per length
  std::vector<std::map<std::vector<int>, int>> index;

  int id_of(const Chain &c) const;
  Chain face(const Chain &c, int i) const;
  Chain degen(const Chain &c, int i) const;
  Chain translate(const Chain &c, const std::vector<int> &on_obj,
                  const std::vector<int> &on_mor) const;
  std::string label(const Chain &c) const;
};

ChainTable enumerate_chains(CatPtr cat, int max_len);

// --- nerve ---------------------------------------------------------------------

struct NerveResult {
  GSSet gsset;
  ChainTable table;
};

NerveResult nerve(CatPtr cat, const GCatAction &action, int trunc);
NerveResult nerve(CatPtr cat, int trunc); // trivial group

// Map of nerves induced by a functor.
SimplicialMap nerve_map(const NerveResult &src, const NerveResult &tgt,
                        const FinFunctor &f);

// --- comma categories -------------------------------------------------------------

// One object of a comma category: u: anchor -> S(mid) and/or v: S(mid) -> anchor,
// -1 when the slot is unused.
struct CommaObj {
  int u = -1;
  int mid = 0;
  int v = -1;
  bool operator<(const CommaObj &o) const {
    return std::tie(mid, u, v) < std::tie(o.mid, o.u, o.v);
  }
  bool operator==(const CommaObj &o) const = default;
};

struct CommaResult {
  CatPtr cat;
  std::vector<CommaObj> objs;
  std::vector<int> proj; // comma morphism -> morphism p of the mid category
  int object_id(const CommaObj &o) const;
  // morphism id of the triple (source object, target object, p)
  int morphism_id(int src_obj, int tgt_obj, int p) const;
  std::map<CommaObj, int> obj_index;
  std::map<std::pair<int, int>, int> mor_index; // key (src*nobj+tgt, p)
};

// c \downarrow S: objects (D, u: c -> S D), morphisms p with S(p) o u = u'.
CommaResult comma_under(const FinFunctor &s, int c);
// S \downarrow c: objects (D, u: S D -> c), morphisms p with u' o S(p) = u.
CommaResult comma_over(const FinFunctor &s, int c);
// d \downarrow F \downarrow d2 (Example 1).
CommaResult comma_two_sided(const FinFunctor &f, int d, int d2);

// Functor c' down S -> c down S induced by f: c -> c' (contravariance in the
// anchor), (D,u) -> (D, u o f).
FinFunctor comma_under_precompose(const FinFunctor &s, const CommaResult &from,
                                  const CommaResult &to, int f);
// Functor c down S -> gc down S, (D,u) -> (gD, gu); S must be equivariant.
FinFunctor comma_under_translate(const FinFunctor &s, const CommaResult &from,
                                 const CommaResult &to,
                                 const GCatAction &action_src,
                                 const GCatAction &action_tgt, int g);
// (u,C,v) -> (u o phi, C, psi o v) for phi: e -> d, psi: d2 -> e2.
FinFunctor comma_two_sided_map(const FinFunctor &f, const CommaResult &from,
                               const CommaResult &to, int phi, int psi);
FinFunctor comma_two_sided_translate(const FinFunctor &f,
                                     const CommaResult &from,
                                     const CommaResult &to,
                                     const GCatAction &action_src,
                                     const GCatAction &action_tgt, int g);
// Forgetful functor to the mid category.
FinFunctor comma_forget(const CommaResult &comma, CatPtr mid);

// The contravariant right G-functor X -> N(X down S) on the target of S
// (S = identity gives the hocolim ingredient X -> N(X down C)).
struct CommaNerveDiagram {
  SSetDiagram diagram;
  std::vector<CommaResult> commas;
  std::vector<NerveResult> nerves;
};
CommaNerveDiagram comma_nerve_diagram(const FinFunctor &s,
                                      const GCatAction &action_src,
                                      const GCatAction &action_tgt, int trunc);

// --- quotients (colim, coend, tensor) ------------------------------------------------

struct QuotientResult {
  GSSet gsset;
  std::vector<SimplicialMap> class_maps; // per component
  std::vector<std::vector<std::pair<int, int>>> reps; // degree -> class ->
                                                      // (component, simplex)
};

struct ColimResult {
  QuotientResult quotient;
  const GSSet &gsset() const { return quotient.gsset; }
  const std::vector<SimplicialMap> &rho() const { return quotient.class_maps; }
};

// Example 5: degreewise quotient of the coproduct of values by
// F(f)(x) ~ x, with the induced action.
ColimResult colim(const SSetDiagram &f);

// The universal map out of a colimit for a compatible cone; throws when the
// cone is incompatible or the factorization would be ill-defined.
SimplicialMap colim_factorize(const ColimResult &c, const SSetDiagram &f,
                              const std::vector<SimplicialMap> &cone);

// Example 5: the induced G-simplicial set Ind_H^G(Z), |G:H| copies of Z.
struct InduceResult {
  GSSet gsset;
  InducedDiagram diagram; // the Example 5 functor it is the colimit of
  ColimResult colimit;
};
InduceResult induce(const FinGroup &g, const Subgroup &h, const GSSet &z);

// Example 6: coend of Z as quotient of the diagonal values.
ColimResult coend(const BiDiagram &z);

struct TensorResult {
  QuotientResult quotient;
  std::vector<ProductResult> products; // per object: F(X) x T(X)
  const GSSet &gsset() const { return quotient.gsset; }
  const std::vector<SimplicialMap> &alpha() const {
    return quotient.class_maps;
  }
};

// F tensor_C T = coend(F x T), computed without materialising off-diagonal
// products.
TensorResult tensor(const SSetDiagram &f, const SSetDiagram &t);

// Equivariant map between colimits/tensors induced by a morphism of right
// G-functors (Examples 5-6 closing remarks).
SimplicialMap colim_induced_map(const ColimResult &from, const ColimResult &to,
                                const SSetDiagram &f_from,
                                const SSetDiagram &f_to,
                                const DiagramMorphism &eps);
SimplicialMap tensor_induced_map(const TensorResult &from,
                                 const TensorResult &to,
                                 const SSetDiagram &f_from,
                                 const SSetDiagram &f_to,
                                 const DiagramMorphism &eps,
                                 const SSetDiagram &t_shared);

// --- bar construction ------------------------------------------------------------------

struct BarResult {
  GSSet gsset;
  ChainTable chains;
  std::vector<std::vector<int>> offsets; // per degree, per chain id
  std::vector<std::vector<std::pair<int, int>>> decode; // simplex -> (chain,z)
  int encode(int degree, int chain_id, int z) const {
    return offsets[degree][chain_id] + z;
  }
};

// Example 4 / eq. 3-5.
BarResult bar(const BiDiagram &z, int trunc);

struct BarBiResult {
  BiSSet bisset;
  ChainTable chains;
  std::vector<std::vector<std::vector<int>>> offsets; // [m][n][chain]
  std::vector<std::vector<std::vector<std::pair<int, int>>>> decode;
};
// eq. 14's bisimplicial set.
BarBiResult bar_bi(const BiDiagram &z, int trunc);

struct BarFTResult {
  BarResult bar;
  BiDiagram z; // F x T
};
// B(F,C,T) := B(C, F x T).
BarFTResult bar_ft(const SSetDiagram &f, const SSetDiagram &t, int trunc);

// Map of bar constructions covering a base functor: (chain; z) ->
// (chain_functor(chain); zmap(X0, Xn, n, z)). chain_functor must be an
// endofunctor of the base category (e.g. the action of g, or the identity).
SimplicialMap
bar_map(const BarResult &from, const BarResult &to,
        const FinFunctor &chain_functor,
        const std::function<int(int, int, int, int)> &zmap);

// eq. 13/15: pointwise morphism of Z's induces a map of bars.
SimplicialMap bar_induced_map(const BarResult &from, const BarResult &to,
                              const BiDiagramMorphism &eps);

// --- homotopy colimit --------------------------------------------------------------------

struct HocolimResult {
  TensorResult tens;
  CommaNerveDiagram comma;
  const GSSet &gsset() const { return tens.quotient.gsset; }
};
HocolimResult hocolim(const SSetDiagram &f, int trunc);

SimplicialMap hocolim_induced_map(const HocolimResult &from,
                                  const HocolimResult &to,
                                  const SSetDiagram &f_from,
                                  const SSetDiagram &f_to,
                                  const DiagramMorphism &eps);

// --- Grothendieck construction ---------------------------------------------------------------

struct GrothendieckResult {
  CatPtr cat;
  GCatAction action;
  std::vector<std::pair<int, int>> obj_pair; // (X, a)
  std::vector<std::vector<int>> obj_of;      // [X][a]
  std::vector<std::pair<int, int>> mor_pair; // (f, u)
};
// Example 7 with eq. 6 / eq. 8 action.
GrothendieckResult grothendieck(const CatDiagram &f);

// --- homotopy pushdown (Theorem 4) --------------------------------------------------------------

struct PushdownResult {
  SSetDiagram diagram; // over C: C0 -> B(F, D, hom_C(S-, C0))
  std::vector<BarResult> bars;
  HomMixed hom; // hom_C(S-, -) as a mixed bifunctor (contra over D, cov over C)
};
PushdownResult pushdown(const FinFunctor &s, const GCatAction &action_d,
                        const GCatAction &action_c, const SSetDiagram &f,
                        int trunc);

// hom_C(S-, -): contra over D, cov over C.
HomMixed hom_mixed_from(const FinFunctor &s, const GCatAction &action_d,
                        const GCatAction &action_c, int trunc);
// Fix the contravariant argument of a mixed bifunctor: Y -> T(x0, Y) as a
// covariant diagram over cat_cov (trivial group).
SSetDiagram mixed_fix_contra(const MixedBiDiagram &t, int x0);
// Same diagram with the trivial group replacing the acting group.
SSetDiagram diagram_forget_action(const SSetDiagram &f);

} // namespace gcat

#endif
