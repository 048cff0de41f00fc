#ifndef GCAT_HOMOLOGY_HPP
#define GCAT_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gcat/sset.hpp"

namespace gcat {

using bigint = boost::multiprecision::cpp_int;

// Normalized chains: one generator per nondegenerate simplex, boundary
// entries from the alternating face sum with degenerate faces dropped.
// Sign convention: d(sigma) = sum_i (-1)^i d_i(sigma).
struct ChainComplex {
  int top = 0;                     // highest stored degree (= truncation)
  std::vector<int> ranks;          // 0..top
  std::vector<std::vector<int>> basis;    // nondegenerate ids per degree
  std::vector<std::vector<int>> nd_index; // simplex id -> basis pos or -1
  // boundary[n] for 1<=n<=top: ranks[n-1] x ranks[n], small integer entries
  std::vector<std::vector<std::vector<int>>> boundary;
};

// Builds the complex and verifies dd = 0 (throws on violation).
ChainComplex chain_complex(const TruncatedSSet &x);

struct CoeffSystem {
  enum Kind { Integral, Rational, Fp } kind = Rational;
  int p = 0;
  std::string name() const;
  static CoeffSystem integral() { return {Integral, 0}; }
  static CoeffSystem rational() { return {Rational, 0}; }
  static CoeffSystem fp(int p) { return {Fp, p}; }
};

// Field systems used for witness verdicts; the integral verdict is derived
// from these (sound but not complete).
struct Coefficients {
  bool rationals = true;
  std::vector<int> primes = {2, 3, 5};
  std::vector<CoeffSystem> field_systems() const;
};
Coefficients parse_coefficients(const std::string &spec); // "q,2,3,5"

// Per-degree homology, reported for degrees 0..top-1 only; the top degree
// is unreliable under truncation.
struct HomologyProfile {
  CoeffSystem coeff;
  std::vector<long long> betti;             // free rank / field rank
  std::vector<std::vector<bigint>> torsion; // integral only; factors > 1
  std::string to_string() const;
};

HomologyProfile homology(const ChainComplex &c, const CoeffSystem &coeff);

struct SnfResult {
  int rank = 0;
  std::vector<bigint> invariants; // nonzero diagonal, d1 | d2 | ...
};
SnfResult smith_normal_form(std::vector<std::vector<bigint>> m);

// Chain map on normalized chains induced by a simplicial map: sigma maps to
// f(sigma) when nondegenerate, else to 0.
std::vector<std::vector<std::vector<int>>>
chain_map(const SimplicialMap &f, const ChainComplex &src,
          const ChainComplex &tgt);

struct DegreeVerdict {
  bool iso = false;
  long long h_src = 0;
  long long h_tgt = 0;
};

struct InducedIsoResult {
  // one row per field system, verdicts for degrees 0..max_degree
  std::vector<CoeffSystem> systems;
  std::vector<std::vector<DegreeVerdict>> verdicts;
  std::vector<bool> integral_derived; // AND across systems, per degree
  bool all_iso() const;
};

// Verdict true in degree k iff the induced map on degree-k homology over the
// given field is bijective. max_degree defaults to top-1.
InducedIsoResult induced_iso(const SimplicialMap &f, const Coefficients &coeffs,
                             int max_degree = -1);

// --- the G-equivalence witness -------------------------------------------------

struct SubgroupWitness {
  Subgroup subgroup;
  std::vector<HomologyProfile> src_profiles; // one per coeff system
  std::vector<HomologyProfile> tgt_profiles;
  InducedIsoResult verdicts;
  bool pass = false;
  std::string failure; // first failing (coeff, degree) when !pass
};

struct EquivalenceWitnessReport {
  std::vector<SubgroupWitness> per_subgroup; // ordered by order, then lex
  bool pass = false;
  bool truncation_caveat = true; // verdicts only cover degrees < truncation
  std::string to_string() const;
};

// Restricts f to the H-fixed subcomplexes for every subgroup H and runs
// induced_iso on each restriction. Throws if f is not equivariant.
EquivalenceWitnessReport g_equivalence_witness(const SimplicialMap &f,
                                               const GSSet &src,
                                               const GSSet &tgt,
                                               const Coefficients &coeffs = {},
                                               const Limits &limits = {});

} // namespace gcat

#endif
