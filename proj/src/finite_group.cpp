#include "mgrack/finite_group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "mgrack/kernels.hpp"

namespace mgrack {

namespace {

Elt table_at(const std::vector<Elt>& table, Elt order, Elt a, Elt b) {
  return table[static_cast<std::size_t>(a) * order + b];
}

}  // namespace

std::optional<Elt> find_identity(const std::vector<Elt>& table, Elt order) {
  for (Elt e = 0; e < order; ++e) {
    bool ok = true;
    for (Elt g = 0; g < order && ok; ++g) {
      if (table_at(table, order, e, g) != g || table_at(table, order, g, e) != g) ok = false;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

GroupAxiomReport verify_group_axioms_report(const std::vector<Elt>& table, Elt order,
                                            Elt identity) {
  if (order <= 0 || table.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("group table dimension mismatch");
  }
  GroupAxiomReport report;
  for (Elt a = 0; a < order; ++a) {
    for (Elt b = 0; b < order; ++b) {
      Elt v = table_at(table, order, a, b);
      if (v < 0 || v >= order) {
        report.violation = GroupViolation{"closure", a, b, -1, "table entry out of range"};
        return report;
      }
    }
  }
  if (identity < 0 || identity >= order) {
    report.violation = GroupViolation{"identity", identity, -1, -1, "identity out of range"};
    return report;
  }
  for (Elt g = 0; g < order; ++g) {
    if (table_at(table, order, identity, g) != g || table_at(table, order, g, identity) != g) {
      report.violation = GroupViolation{"identity", g, -1, -1, "identity law fails"};
      return report;
    }
  }
  for (Elt g = 0; g < order; ++g) {
    bool found = false;
    for (Elt h = 0; h < order; ++h) {
      if (table_at(table, order, g, h) == identity && table_at(table, order, h, g) == identity) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.violation = GroupViolation{"inverse", g, -1, -1, "no two-sided inverse"};
      return report;
    }
  }
  if (auto bad = kernels::first_associativity_violation(table.data(), order)) {
    report.violation =
        GroupViolation{"associativity", bad->x, bad->y, bad->z, "(ab)c != a(bc)"};
    return report;
  }
  report.ok = true;
  return report;
}

bool verify_group_axioms(const std::vector<Elt>& table, Elt order, Elt identity) {
  return verify_group_axioms_report(table, order, identity).ok;
}

FiniteGroup::FiniteGroup(Elt order, std::vector<Elt> table, Elt identity,
                         std::vector<std::string> labels, Elt max_order)
    : order_(order), identity_(identity), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (order_ > max_order) throw std::invalid_argument("group order exceeds the configured cap");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw std::invalid_argument("group table dimension mismatch");
  }
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(order_)) {
    throw std::invalid_argument("label count must match group order");
  }
  for (Elt v : table_) {
    if (v < 0 || v >= order_) throw std::invalid_argument("group table entry out of range");
  }
  if (identity_ < 0 || identity_ >= order_) {
    throw std::invalid_argument("group identity out of range");
  }
  for (Elt g = 0; g < order_; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g) {
      throw std::invalid_argument("group identity law fails");
    }
  }
  inverse_.assign(order_, -1);
  for (Elt g = 0; g < order_; ++g) {
    for (Elt h = 0; h < order_; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] < 0) throw std::invalid_argument("group element without two-sided inverse");
  }
}

bool FiniteGroup::is_abelian() const {
  for (Elt a = 0; a < order_; ++a) {
    for (Elt b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::string FiniteGroup::label(Elt a) const {
  if (!labels_.empty()) return labels_[a];
  return "g" + std::to_string(a);
}

SubgroupWitness make_subgroup_witness(const FiniteGroup& group, std::vector<Elt> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw std::invalid_argument("subgroup must be nonempty");
  for (Elt m : members) {
    if (m < 0 || m >= group.order()) throw std::invalid_argument("subgroup member out of range");
  }
  auto contains = [&](Elt v) {
    return std::binary_search(members.begin(), members.end(), v);
  };
  if (!contains(group.identity())) throw std::invalid_argument("subgroup misses the identity");
  for (Elt a : members) {
    if (!contains(group.inverse(a))) throw std::invalid_argument("subgroup not inverse-closed");
    for (Elt b : members) {
      if (!contains(group.mul(a, b))) throw std::invalid_argument("subgroup not closed");
    }
  }
  return SubgroupWitness{group, std::move(members)};
}

SubgroupWitness trivial_subgroup(const FiniteGroup& group) {
  return make_subgroup_witness(group, {group.identity()});
}

SubgroupWitness full_subgroup(const FiniteGroup& group) {
  std::vector<Elt> all(group.order());
  for (Elt g = 0; g < group.order(); ++g) all[g] = g;
  return make_subgroup_witness(group, std::move(all));
}

bool is_normal_subgroup(const FiniteGroup& group, const std::vector<Elt>& members) {
  std::vector<Elt> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](Elt v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  if (sorted.empty() || !contains(group.identity())) return false;
  for (Elt a : sorted) {
    if (a < 0 || a >= group.order()) return false;
    if (!contains(group.inverse(a))) return false;
    for (Elt b : sorted) {
      if (!contains(group.mul(a, b))) return false;
    }
  }
  for (Elt n : sorted) {
    for (Elt g = 0; g < group.order(); ++g) {
      if (!contains(group.conjugate(n, g))) return false;
    }
  }
  return true;
}

FiniteGroup semidirect_right_conj(const SubgroupWitness& normal) {
  const FiniteGroup& g = normal.parent;
  const std::vector<Elt>& members = normal.members;
  if (!is_normal_subgroup(g, members)) {
    throw std::invalid_argument("semidirect_right_conj requires a normal subgroup");
  }
  const Elt nn = static_cast<Elt>(members.size());
  std::vector<Elt> pos(g.order(), -1);
  for (Elt i = 0; i < nn; ++i) pos[members[i]] = i;

  const Elt order = g.order() * nn;
  auto pair_index = [&](Elt gi, Elt npos) { return gi * nn + npos; };

  std::vector<Elt> table(static_cast<std::size_t>(order) * order);
  for (Elt g1 = 0; g1 < g.order(); ++g1) {
    for (Elt i1 = 0; i1 < nn; ++i1) {
      const Elt n1 = members[i1];
      for (Elt g2 = 0; g2 < g.order(); ++g2) {
        const Elt conj = g.conjugate(n1, g2);
        for (Elt i2 = 0; i2 < nn; ++i2) {
          const Elt n2 = members[i2];
          const Elt prod_g = g.mul(g1, g2);
          const Elt prod_n = g.mul(conj, n2);
          table[static_cast<std::size_t>(pair_index(g1, i1)) * order +
                pair_index(g2, i2)] = pair_index(prod_g, pos[prod_n]);
        }
      }
    }
  }

  std::vector<std::string> labels(order);
  for (Elt gi = 0; gi < g.order(); ++gi) {
    for (Elt i = 0; i < nn; ++i) {
      labels[pair_index(gi, i)] = "(" + g.label(gi) + "," + g.label(members[i]) + ")";
    }
  }
  const Elt identity = pair_index(g.identity(), pos[g.identity()]);
  return FiniteGroup(order, std::move(table), identity, std::move(labels));
}

FiniteGroup cyclic_group(Elt n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group needs n >= 1");
  std::vector<Elt> table(static_cast<std::size_t>(n) * n);
  for (Elt a = 0; a < n; ++a) {
    for (Elt b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  std::vector<std::string> labels(n);
  for (Elt a = 0; a < n; ++a) labels[a] = std::to_string(a);
  return FiniteGroup(n, std::move(table), 0, std::move(labels));
}

FiniteGroup s3_presented() {
  // Permutations of {0,1,2} in the order e, a, a2, x, ax, a2x with
  // a = (0 1 2), x = (1 2); mul(g, h) applies g first, then h.
  constexpr std::array<std::array<Elt, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 2, 0},  // a
      {2, 0, 1},  // a2
      {0, 2, 1},  // x
      {2, 1, 0},  // ax
      {1, 0, 2},  // a2x
  }};
  auto index_of = [&](const std::array<Elt, 3>& p) -> Elt {
    for (Elt i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    throw std::logic_error("permutation not in S3");
  };
  std::vector<Elt> table(36);
  for (Elt g = 0; g < 6; ++g) {
    for (Elt h = 0; h < 6; ++h) {
      std::array<Elt, 3> comp{};
      for (Elt i = 0; i < 3; ++i) comp[i] = perms[h][perms[g][i]];
      table[static_cast<std::size_t>(g) * 6 + h] = index_of(comp);
    }
  }
  return FiniteGroup(6, std::move(table), 0, {"e", "a", "a2", "x", "ax", "a2x"});
}

}  // namespace mgrack
