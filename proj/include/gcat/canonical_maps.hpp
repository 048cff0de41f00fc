#ifndef GCAT_CANONICAL_MAPS_HPP
#define GCAT_CANONICAL_MAPS_HPP

#include "gcat/constructions.hpp"

namespace gcat {

struct CanonicalMapResult {
  std::string name;
  SimplicialMap map;
  ValidationReport validity;     // simplicial-map axioms
  ValidationReport equivariance; // empty report = commutes with the action
  IsoResult iso;                 // checked for the iso-flavored maps

  bool ok(bool need_iso) const {
    return validity.ok() && equivariance.ok() && (!need_iso || iso.iso);
  }
  std::string witness() const;
};

// hocolim F -> colim F induced by N(- down C) -> * (eq. 9; equivariant, not
// an isomorphism in general).
struct ToColimResult {
  HocolimResult hoc;
  ColimResult col;
  CanonicalMapResult cm;
};
ToColimResult to_colim(const SSetDiagram &f, int trunc);

// hocolim F -> N(C) induced by F -> * (eq. 10).
struct ToNerveResult {
  HocolimResult hoc;
  NerveResult nrv;
  CanonicalMapResult cm;
};
ToNerveResult to_nerve(const SSetDiagram &f, int trunc);

// B(F,C,*) -> hocolim F (eq. 12; exact degreewise bijection).
struct BarToHocolimResult {
  BarFTResult bar;
  HocolimResult hoc;
  CanonicalMapResult cm;
};
BarToHocolimResult bar_to_hocolim(const SSetDiagram &f, int trunc);

// The grid of two-sided comma categories X down C down Y with their nerves.
struct TwoSidedNerves {
  std::vector<std::vector<CommaResult>> commas; // [X][Y]
  std::vector<std::vector<NerveResult>> nerves;
};
TwoSidedNerves two_sided_nerves(CatPtr cat, int trunc);

// Z tensor_{CxC^op} N(- down C down -) -> B(C,Z) (eq. 1).
struct CoendBarResult {
  ProductCategory e; // C x C^op
  GCatAction e_action;
  TwoSidedNerves grid;
  TensorResult lhs;
  BarResult rhs;
  CanonicalMapResult cm;
};
CoendBarResult coend_to_bar(const BiDiagram &z, int trunc);

// F tensor_C N(- down C down -) tensor_C T -> B(F,C,T) via the iterated
// (Fubini) route (eq. 2).
struct CoendBarFTResult {
  TwoSidedNerves grid;
  std::vector<TensorResult> inner; // per Y: F tensor N(- down C down Y)
  SSetDiagram w;                   // Y -> inner value, a right G-functor
  ValidationReport w_validity;
  TensorResult outer;
  BarFTResult rhs;
  CanonicalMapResult cm;
};
CoendBarFTResult coend_to_bar_ft(const SSetDiagram &f, const SSetDiagram &t,
                                 int trunc);

// B(B(F,C,T),D,U) -> B(F,C,B(T,D,U)) (eq. 22). T is contravariant over F's
// category and covariant over U's.
struct AssocResult {
  std::vector<BarResult> inner_lhs; // per Y in D: B(F,C,T(-,Y))
  std::vector<BarResult> inner_rhs; // per X in C: B(T(X,-),D,U)
  SSetDiagram v;                    // covariant over D
  SSetDiagram w;                    // contravariant over C
  ValidationReport vw_validity;
  BarFTResult lhs; // B(V,D,U)
  BarFTResult rhs; // B(F,C,W)
  CanonicalMapResult cm;
};
AssocResult assoc(const SSetDiagram &f, const MixedBiDiagram &t,
                  const SSetDiagram &u, int trunc);

// hocolim_D (F o S) -> F tensor_C N(- down S) (eq. 7, Reduction Theorem).
struct ReductionResult {
  SSetDiagram fs; // F o S
  HocolimResult lhs;
  CommaNerveDiagram comma_s;
  TensorResult rhs;
  CanonicalMapResult cm;
};
ReductionResult reduction(const FinFunctor &s, const GCatAction &action_d,
                          const SSetDiagram &f, int trunc);

// N(- down C down -) tensor_{C^op} * -> N(- down C) (eq. 11), checked
// objectwise together with naturality and the Def. 2 squares.
struct CommaCollapseResult {
  TwoSidedNerves grid;
  CommaNerveDiagram target;               // X -> N(X down C)
  std::vector<ColimResult> collapsed;     // per X
  std::vector<CanonicalMapResult> at;     // per X
  ValidationReport squares;
  bool ok() const;
  std::string witness() const;
};
CommaCollapseResult comma_collapse(CatPtr cat, const GCatAction &action,
                                   int trunc);

// Prop. 3 item 1: B(hom_C(C0,S-),D,*) ~= N(C0 down S) as right G-functors in
// C0 (eq. 28 is the special case S = identity).
struct Prop3aResult {
  HomMixed hom; // hom_C(-, S-)
  std::vector<BarFTResult> bars;      // per C0
  std::vector<CommaResult> commas;    // C0 down S
  std::vector<NerveResult> nerves;
  std::vector<CanonicalMapResult> at; // per C0
  ValidationReport squares;
  bool ok() const;
  std::string witness() const;
};
Prop3aResult prop3a(const FinFunctor &s, const GCatAction &action_d,
                    const GCatAction &action_c, int trunc);

// Prop. 3 item 2: F tensor_C hom_C(-,S D0) ~= (F o S)(D0) and
// B(F,C,hom_C(-,S D0)) ~= (F o S)(D0), as right G-functors in D0.
struct Prop3bResult {
  HomMixed hom; // hom_C(-, S-)
  std::vector<TensorResult> tensors; // per D0
  std::vector<BarFTResult> bars;     // per D0
  std::vector<CanonicalMapResult> tensor_at;
  std::vector<CanonicalMapResult> bar_at;
  ValidationReport squares;
  bool ok() const;
  std::string witness() const;
};
Prop3bResult prop3b(const FinFunctor &s, const GCatAction &action_d,
                    const SSetDiagram &f, int trunc);

} // namespace gcat

#endif
