#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mgrack/finite_group.hpp"
#include "mgrack/rack.hpp"

namespace mgrack {

// A multiple group rack: a disjoint union of finite groups carrying a global
// binary operation *, stored as one dense table over all elements.
//
// Global indexing: component lambda occupies the contiguous index range
// [offsets[lambda], offsets[lambda] + components[lambda].order()), i.e.
// (lambda, i) maps to offsets[lambda] + i.
struct MultipleGroupRack {
  std::vector<FiniteGroup> components;
  std::vector<Elt> star;  // n*n, star[u*n + v] = u * v
  std::vector<std::string> labels;

  // Derived index maps, filled by from_components.
  std::vector<Elt> comp_of;
  std::vector<Elt> local_of;
  std::vector<Elt> offsets;

  static MultipleGroupRack from_components(std::vector<FiniteGroup> components,
                                           std::vector<Elt> star,
                                           std::vector<std::string> labels = {});

  Elt size() const { return static_cast<Elt>(comp_of.size()); }
  Elt star_at(Elt u, Elt v) const { return star[static_cast<std::size_t>(u) * size() + v]; }
  Elt global_index(Elt lambda, Elt local) const { return offsets[lambda] + local; }

  // Group structure of u's component; mul requires comp_of[u] == comp_of[v].
  Elt comp_mul(Elt u, Elt v) const;
  Elt comp_inverse(Elt u) const;
  Elt component_identity(Elt lambda) const;
  bool is_component_identity(Elt u) const;

  std::string label(Elt u) const;
};

struct MgrViolation {
  std::string axiom;  // "i", "i_identity", "ii", "iii", "iii_component"
  std::vector<Elt> elements;
  std::string message;
};

struct MgrReport {
  bool ok = false;
  std::optional<MgrViolation> first_violation;
};

// Exhaustive check of the three axioms:
//   (i)   x * (ab) = (x * a) * b and x * e_lambda = x for a, b in one component,
//   (ii)  (x * y) * z = (x * z) * (y * z) for all triples,
//   (iii) for each (lambda, x) a single target component mu with
//         a * x in G_mu and (ab) * x = (a * x)(b * x) for all a, b in G_lambda.
MgrReport verify_mgr_axioms(const MultipleGroupRack& m);

// a * b = b^-1 a b for all same-component pairs.
bool is_mcq(const MultipleGroupRack& m);
std::optional<std::pair<Elt, Elt>> find_mcq_violation(const MultipleGroupRack& m);

// The associated multiple group rack X x G of a G-family:
//   (x, g) * (y, h) = (x *^h y, h^-1 g h),  (x, g)(x, h) = (x, gh).
MultipleGroupRack associated_mgr(const GFamilyOfRacks& family);

// The semidirect multiple group rack X x (G |x N) over a normal subgroup N:
//   (x,(g1,n1)) * (y,(g2,n2)) = (x *^{g2 n2} y, (g1^{g2 n2}, n1^{g2 n2})),
//   (x,(g1,n1)) (x,(g2,n2))   = (x, (g1 g2, n1^{g2} n2)).
// Throws when N is not normal in the family's group.
MultipleGroupRack semidirect_mgr(const GFamilyOfRacks& family, const SubgroupWitness& normal);

// A candidate 2-cocycle with values in an abelian group: f_rack over all
// element pairs of the base, f_group per component over local pairs.
struct CocycleData {
  FiniteGroup target;
  std::vector<Elt> f_rack;                // n*n target-element indices
  std::vector<std::vector<Elt>> f_group;  // per component, |G_l|*|G_l|
};

struct CocycleInvalid {
  MgrViolation violation;
};

// Builds X x A with
//   (x, a) * (y, b)   = (x * y, a + f<x><y>),
//   (x1, a)(x2, b)    = (x1 x2, a + b + f<x1, x2>),
// then decides cocycle validity operationally: the twisted component tables
// must be groups and the result must pass verify_mgr_axioms. Element (u, a)
// gets global index u*|A| + a.
std::variant<MultipleGroupRack, CocycleInvalid> abelian_extension(const MultipleGroupRack& m,
                                                                  const CocycleData& cocycle);

// map[u] gives the image of element u. Checks *-preservation on all pairs and
// per-component multiplicativity into a single target component.
bool is_mgr_homomorphism(const std::vector<Elt>& map, const MultipleGroupRack& src,
                         const MultipleGroupRack& dst);

// The x with x * y = z, namely z * y^-1 (S_y^-1 = S_{y^-1}).
Elt star_inverse(const MultipleGroupRack& m, Elt z, Elt y);

}  // namespace mgrack
