#ifndef GCAT_DIAGRAM_HPP
#define GCAT_DIAGRAM_HPP

#include <vector>

#include "gcat/category.hpp"
#include "gcat/sset.hpp"

namespace gcat {

enum class Variance { Covariant, Contravariant };

// A functor into truncated simplicial sets together with the family
// eta_{g,X}: F(X) -> F(gX) making it a right G-functor. For covariant F a
// morphism f: X -> Y carries the map F(f): F(X) -> F(Y); for contravariant
// F it carries F(f): F(Y) -> F(X).
struct SSetDiagram {
  CatPtr cat;
  GCatAction action;
  Variance variance = Variance::Covariant;
  std::vector<SSetPtr> values;
  std::vector<SimplicialMap> maps;            // one per morphism
  std::vector<std::vector<SimplicialMap>> eta; // eta[g][X]

  const SSetPtr &value(int obj) const { return values[obj]; }
  int trunc() const { return values.empty() ? 0 : values[0]->trunc; }
};

ValidationReport validate_diagram(const SSetDiagram &f);

// Functor into finite categories with eta functors (Grothendieck input).
// Covariant only.
struct CatDiagram {
  CatPtr cat;
  GCatAction action;
  std::vector<CatPtr> values;
  std::vector<FinFunctor> maps;
  std::vector<std::vector<FinFunctor>> eta;
};

ValidationReport validate_cat_diagram(const CatDiagram &f);

// Z: C x C^op -> SimpSets as a right G-functor. value(a,b) has a covariant
// and b contravariant: left[f][b] is Z(f,1): value(src f, b) ->
// value(tgt f, b); right[a][h] is Z(1,h): value(a, tgt h) -> value(a, src h).
struct BiDiagram {
  CatPtr cat;
  GCatAction action;
  std::vector<std::vector<SSetPtr>> values;          // [cov][contra]
  std::vector<std::vector<SimplicialMap>> left;      // [morphism][contra obj]
  std::vector<std::vector<SimplicialMap>> right;     // [cov obj][morphism]
  std::vector<std::vector<std::vector<SimplicialMap>>> eta; // [g][cov][contra]

  const SSetPtr &value(int cov, int contra) const {
    return values[cov][contra];
  }
  int trunc() const { return values[0][0]->trunc; }
};

ValidationReport validate_bidiagram(const BiDiagram &z);

// T: C^op x D -> SimpSets (contravariant over cat_contra = C, covariant over
// cat_cov = D), both G-categories over one group.
struct MixedBiDiagram {
  CatPtr cat_contra;
  CatPtr cat_cov;
  GCatAction action_contra;
  GCatAction action_cov;
  std::vector<std::vector<SSetPtr>> values;      // [X in C][Y in D]
  std::vector<std::vector<SimplicialMap>> cmap;  // [f in C][Y]: value(tgt f,Y)->value(src f,Y)
  std::vector<std::vector<SimplicialMap>> dmap;  // [X][g in D]: value(X,src g)->value(X,tgt g)
  std::vector<std::vector<std::vector<SimplicialMap>>> eta; // [g][X][Y]
  int trunc() const { return values[0][0]->trunc; }
};

ValidationReport validate_mixed_bidiagram(const MixedBiDiagram &t);

// Morphism of right G-functors over one base (Def. 2): naturality plus the
// square eta2_{g,X} o eps_X = eps_{gX} o eta1_{g,X}.
struct DiagramMorphism {
  std::vector<SimplicialMap> components; // per object
};

ValidationReport validate_diagram_morphism(const SSetDiagram &from,
                                           const SSetDiagram &to,
                                           const DiagramMorphism &m);

// Pointwise morphism of bifunctors (Theorem 1's epsilon).
struct BiDiagramMorphism {
  std::vector<std::vector<SimplicialMap>> components; // [cov][contra]
};
ValidationReport validate_bidiagram_morphism(const BiDiagram &from,
                                             const BiDiagram &to,
                                             const BiDiagramMorphism &m);

// Prop. 1: the stabilizer G_X acts on F(X) through eta.
struct ObjectAction {
  Subgroup stab;
  FinGroup group; // stab as a group
  std::vector<SimplicialMap> maps; // indexed like stab.elements
};
ObjectAction restrict_action(const SSetDiagram &f, int object);
// The value F(X) as a G_X-simplicial set.
GSSet value_as_gsset(const SSetDiagram &f, int object);

// Prop. 2: F o S for S equivariant. Throws naming (g, C) when S fails
// equivariance.
SSetDiagram precompose(const SSetDiagram &f, const FinFunctor &s,
                       const GCatAction &action_src);

// Prop. 2: T o F for a plain endofunctor T of simplicial sets.
struct SSetEndofunctor {
  virtual ~SSetEndofunctor() = default;
  virtual SSetPtr apply(SSetPtr x) const = 0;
  // Endpoints of the result must be the memoized apply() images.
  virtual SimplicialMap apply_map(const SimplicialMap &f) const = 0;
};
SSetDiagram postcompose(const SSetEndofunctor &t, const SSetDiagram &f);

// x -> x * factor, with maps acting as f * id.
struct ProductWithFunctor final : SSetEndofunctor {
  explicit ProductWithFunctor(SSetPtr factor) : factor(std::move(factor)) {}
  SSetPtr apply(SSetPtr x) const override;
  SimplicialMap apply_map(const SimplicialMap &f) const override;
  SSetPtr factor;
  mutable std::vector<std::pair<SSetPtr, SSetPtr>> memo;
};

// --- builders ---------------------------------------------------------------

// Constant functor with value `value` and eta = id (the paper's * when value
// is the point).
SSetDiagram constant_diagram(CatPtr cat, const GCatAction &action,
                             SSetPtr value, Variance variance);
SSetDiagram point_diagram(CatPtr cat, const GCatAction &action, int trunc,
                          Variance variance);

// X -> hom(c0, X) as constant simplicial sets, eta f -> gf. The action's
// group must fix c0 (restrict to the stabilizer first).
struct HomDiagram {
  SSetDiagram diagram;
  std::vector<std::vector<int>> hom_ids; // per object: morphism id per simplex
};
HomDiagram hom_from_object(CatPtr cat, const GCatAction &action, int c0,
                           int trunc);
// X -> hom(X, d0), contravariant.
HomDiagram hom_into_object(CatPtr cat, const GCatAction &action, int d0,
                           int trunc);

// Example 2: (X,Y) -> hom_D(FX, FY), value(cov=Y, contra=X), eta u -> gu.
struct HomBifunctor {
  BiDiagram z;
  // hom_ids[cov][contra][simplex] = morphism id in the target category
  std::vector<std::vector<std::vector<int>>> hom_ids;
};
HomBifunctor hom_bifunctor(const FinFunctor &f, const GCatAction &action_src,
                           const GCatAction &action_tgt, int trunc);

// Z = F x T (Example 6). Pair (a,b) at value(A,B) has id a*|T(B)_n|+b.
BiDiagram product_bidiagram(const SSetDiagram &f, const SSetDiagram &t);

// T(X,Y) = hom_C(X, S Y) for S: D -> C equivariant (Theorem 4's shape).
struct HomMixed {
  MixedBiDiagram t;
  std::vector<std::vector<std::vector<int>>> hom_ids; // [X][Y][simplex]
};
HomMixed hom_mixed(const FinFunctor &s, const GCatAction &action_d,
                   const GCatAction &action_c, int trunc);

// Fix the covariant argument of a mixed bifunctor: X -> T(X, y0) as a plain
// contravariant diagram over C (trivial eta over the trivial group unless
// the caller restricts).
SSetDiagram mixed_fix_cov(const MixedBiDiagram &t, int y0);

// Example 5's induced diagram: the constant functor on the coset category
// G//H with value z and eta_{g,aH}(x) = hx where ga = a'h. Returns the
// diagram together with its base category (discrete on cosets).
struct InducedDiagram {
  SSetDiagram diagram;
  std::vector<std::vector<int>> cosets;
  std::vector<int> reps; // least element per coset
};
InducedDiagram induced_diagram(const FinGroup &g, const Subgroup &h,
                               const GSSet &z);

// F x Delta^1 together with the projection morphism (Theorem 2's thickening).
struct Thickening {
  SSetDiagram thick;
  DiagramMorphism projection;
};
Thickening thicken(const SSetDiagram &f);

struct BiThickening {
  BiDiagram thick;
  BiDiagramMorphism projection;
};
BiThickening thicken_bidiagram(const BiDiagram &z);

} // namespace gcat

#endif
