#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mgrack {

using Elt = std::int32_t;

// Default cap on group order; tables are dense order x order.
inline constexpr Elt kMaxGroupOrder = 1 << 15;

struct GroupViolation {
  std::string axiom;  // "shape", "closure", "associativity", "identity", "inverse"
  Elt a = -1, b = -1, c = -1;
  std::string message;
};

struct GroupAxiomReport {
  bool ok = false;
  std::optional<GroupViolation> violation;
};

// Exhaustive closure/associativity/identity/inverse check on a raw table.
// table[g*order + h] is the product "first g, then h". Throws
// std::invalid_argument when table.size() != order*order.
GroupAxiomReport verify_group_axioms_report(const std::vector<Elt>& table, Elt order,
                                            Elt identity);
bool verify_group_axioms(const std::vector<Elt>& table, Elt order, Elt identity);

// Searches the table for a two-sided identity.
std::optional<Elt> find_identity(const std::vector<Elt>& table, Elt order);

// A finite group as an explicit multiplication table.
//
// Composition convention used across the whole project: mul(g, h) means
// "first g, then h". Conjugation is the right action g^h = h^-1 g h and the
// commutator is [a, b] = a b a^-1 b^-1, both evaluated with that product.
//
// Construction validates shape, entry ranges, the identity law and the
// existence of two-sided inverses (all O(order^2)); full associativity is
// the job of verify_group_axioms. Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(Elt order, std::vector<Elt> table, Elt identity,
              std::vector<std::string> labels = {}, Elt max_order = kMaxGroupOrder);

  Elt order() const { return order_; }
  Elt identity() const { return identity_; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elt inverse(Elt a) const { return inverse_[a]; }
  Elt conjugate(Elt g, Elt h) const { return mul(mul(inverse(h), g), h); }
  Elt commutator(Elt a, Elt b) const { return mul(mul(mul(a, b), inverse(a)), inverse(b)); }
  bool is_abelian() const;

  const std::vector<Elt>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elt a) const;

 private:
  Elt order_ = 0;
  Elt identity_ = 0;
  std::vector<Elt> table_;
  std::vector<Elt> inverse_;
  std::vector<std::string> labels_;
};

// A subgroup given by its sorted member list, validated on construction
// (closure, identity, inverses). Normality is a separate predicate.
struct SubgroupWitness {
  FiniteGroup parent;
  std::vector<Elt> members;
};

SubgroupWitness make_subgroup_witness(const FiniteGroup& group, std::vector<Elt> members);
SubgroupWitness trivial_subgroup(const FiniteGroup& group);
SubgroupWitness full_subgroup(const FiniteGroup& group);

// True iff members form a subgroup with g^-1 N g = N for every g (exhaustive).
bool is_normal_subgroup(const FiniteGroup& group, const std::vector<Elt>& members);

// The group G |x N on pairs (g, n) with (g1,n1)(g2,n2) = (g1 g2, n1^{g2} n2),
// identity (e, e). Pair (g, n) gets index g*|N| + pos(n) where pos is the
// position of n in the sorted member list. Throws when N is not normal.
FiniteGroup semidirect_right_conj(const SubgroupWitness& normal);

FiniteGroup cyclic_group(Elt n);

// S3 with elements ordered e, a, a2, x, ax, a2x; satisfies a^3 = x^2 = e and
// x a x = a^2 under the "first g, then h" convention.
FiniteGroup s3_presented();

}  // namespace mgrack
