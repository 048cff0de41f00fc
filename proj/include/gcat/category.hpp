#ifndef GCAT_CATEGORY_HPP
#define GCAT_CATEGORY_HPP

#include <memory>
#include <string>
#include <vector>

#include "gcat/base.hpp"
#include "gcat/group.hpp"

namespace gcat {

struct Morph {
  int src = 0;
  int tgt = 0;
  std::string name;
  bool operator==(const Morph &other) const = default;
};

// Finite category with a full composition table. Convention: morphism k is
// the identity of object k for k < object_count. comp[g][f] = g∘f ("g after
// f"), -1 when tgt(f) != src(g) or the composite is missing.
struct FinCategory {
  int object_count = 0;
  std::vector<Morph> morphs;
  std::vector<std::vector<int>> comp;
  std::vector<std::string> object_names; // optional; empty = numeric

  int morphism_count() const { return static_cast<int>(morphs.size()); }
  int identity_of(int obj) const { return obj; }
  bool is_identity(int m) const { return m < object_count; }
  int src(int m) const { return morphs[m].src; }
  int tgt(int m) const { return morphs[m].tgt; }
  bool composable(int g, int f) const { return morphs[f].tgt == morphs[g].src; }

  // Checked composite g∘f.
  int compose(int g, int f) const {
    if (!composable(g, f))
      throw Error(str("not composable: ", morphs[g].name, " after ",
                      morphs[f].name));
    int h = comp[g][f];
    if (h < 0)
      throw Error(str("missing composite: ", morphs[g].name, " after ",
                      morphs[f].name));
    return h;
  }

  std::string object_name(int obj) const {
    if (obj < static_cast<int>(object_names.size()) &&
        !object_names[obj].empty())
      return object_names[obj];
    return std::to_string(obj);
  }
  const std::string &morphism_name(int m) const { return morphs[m].name; }
  // Morphism id by name, -1 if absent.
  int morphism_by_name(const std::string &name) const;

  // hom(x,y) as a sorted list of morphism ids.
  std::vector<int> hom(int x, int y) const;

  bool operator==(const FinCategory &other) const {
    return object_count == other.object_count && morphs == other.morphs &&
           comp == other.comp;
  }
};

using CatPtr = std::shared_ptr<const FinCategory>;

ValidationReport validate_category(const FinCategory &c);

// Assembles a category from non-identity data. Identities are created as
// morphisms 0..n_objects-1 named "1_<i>"; composites with identities are
// filled in automatically.
struct MorphSpec {
  std::string name;
  int src = 0;
  int tgt = 0;
};
// after/first index into the non-identity morphism list (order given to
// make_category); result is a global morphism id, since composites may be
// identities.
struct CompSpec {
  int after = 0;  // g in g∘f
  int first = 0;  // f
  int result = 0; // g∘f
};
FinCategory make_category(int n_objects, const std::vector<MorphSpec> &morphs,
                          const std::vector<CompSpec> &comps,
                          std::vector<std::string> object_names = {});

// The poset category of a relation: one morphism x->y whenever x<=y in the
// reflexive-transitive closure of `edges`. Throws on a cycle through
// distinct objects.
FinCategory poset_category(int n_objects,
                           const std::vector<std::pair<int, int>> &edges,
                           std::vector<std::string> object_names = {});

// One object, morphisms = group elements, composition = multiplication.
FinCategory group_as_category(const FinGroup &g);

// The poset {0 < 1 < ... < n}.
FinCategory chain_category(int n);
inline FinCategory interval_category() { return chain_category(1); } // [1]
FinCategory discrete_category(int n_objects);

FinCategory opposite_category(const FinCategory &c);

struct ProductCategory {
  CatPtr cat;
  // object (a,b) -> id and back
  std::vector<std::vector<int>> object_of; // [a][b]
  std::vector<std::pair<int, int>> object_pair;
  std::vector<std::vector<int>> morphism_of; // [f][g]
  std::vector<std::pair<int, int>> morphism_pair;
};
ProductCategory product_category(const FinCategory &a, const FinCategory &b);

// Functor between finite categories.
struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<int> obj; // object images
  std::vector<int> mor; // morphism images

  int apply_obj(int x) const { return obj[x]; }
  int apply_mor(int m) const { return mor[m]; }
};

ValidationReport validate_functor(const FinFunctor &f);
FinFunctor identity_functor(CatPtr c);
FinFunctor compose_functors(const FinFunctor &g, const FinFunctor &f);

struct SubcategoryResult {
  CatPtr cat;
  FinFunctor inclusion;
  std::vector<int> object_map; // new object -> old object
};
// Full subcategory on the given (sorted) objects.
SubcategoryResult full_subcategory(CatPtr c, const std::vector<int> &objects);

// Action of a finite group on a category: each element acts as a functor,
// composition matching group multiplication, element 0 the identity.
struct GCatAction {
  FinGroup group;
  CatPtr cat;
  std::vector<std::vector<int>> on_obj; // [g][object]
  std::vector<std::vector<int>> on_mor; // [g][morphism]

  int obj(int g, int x) const { return on_obj[g][x]; }
  int mor(int g, int m) const { return on_mor[g][m]; }
  FinFunctor as_functor(int g) const;
};

ValidationReport validate_action(const GCatAction &a);

GCatAction trivial_action(const FinGroup &g, CatPtr c);
GCatAction action_on_opposite(const GCatAction &a, CatPtr op);
GCatAction action_on_product(const GCatAction &a, const GCatAction &b,
                             const ProductCategory &prod);
// Restrict an action to a full subcategory whose objects form a G-stable
// set; throws if the set is not stable.
GCatAction action_on_subcategory(const GCatAction &a,
                                 const SubcategoryResult &sub);
// Same group action viewed along a subgroup (elements reindexed).
GCatAction restrict_action_to_subgroup(const GCatAction &a, const Subgroup &h);

// Prop. 1 context: stabilizer of an object.
Subgroup stabilizer(const GCatAction &a, int object);
Subgroup morphism_stabilizer(const GCatAction &a, int morphism);

// Object orbits as a partition; each class sorted, classes ordered by their
// least element (= representative).
std::vector<std::vector<int>> orbits(const GCatAction &a);
std::vector<std::vector<int>> morphism_orbits(const GCatAction &a);

// Equivariance predicate for a functor between G-categories over the same
// group: F(gX)=gF(X) and F(gf)=gF(f). Violations are reported, not thrown.
ValidationReport check_equivariant(const FinFunctor &f, const GCatAction &src,
                                   const GCatAction &tgt);

} // namespace gcat

#endif
