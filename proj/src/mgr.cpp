#include "mgrack/mgr.hpp"

#include <stdexcept>

#include "mgrack/kernels.hpp"

namespace mgrack {

MultipleGroupRack MultipleGroupRack::from_components(std::vector<FiniteGroup> components,
                                                     std::vector<Elt> star,
                                                     std::vector<std::string> labels) {
  if (components.empty()) throw std::invalid_argument("mgr needs at least one component");
  MultipleGroupRack m;
  m.components = std::move(components);
  m.offsets.reserve(m.components.size());
  Elt n = 0;
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    m.offsets.push_back(n);
    for (Elt i = 0; i < m.components[lam].order(); ++i) {
      m.comp_of.push_back(static_cast<Elt>(lam));
      m.local_of.push_back(i);
    }
    n += m.components[lam].order();
  }
  if (star.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("mgr star table dimension mismatch");
  }
  for (Elt v : star) {
    if (v < 0 || v >= n) throw std::invalid_argument("mgr star entry out of range");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("mgr label count mismatch");
  }
  m.star = std::move(star);
  m.labels = std::move(labels);
  return m;
}

Elt MultipleGroupRack::comp_mul(Elt u, Elt v) const {
  const Elt lam = comp_of[u];
  return offsets[lam] + components[lam].mul(local_of[u], local_of[v]);
}

Elt MultipleGroupRack::comp_inverse(Elt u) const {
  const Elt lam = comp_of[u];
  return offsets[lam] + components[lam].inverse(local_of[u]);
}

Elt MultipleGroupRack::component_identity(Elt lambda) const {
  return offsets[lambda] + components[lambda].identity();
}

bool MultipleGroupRack::is_component_identity(Elt u) const {
  return local_of[u] == components[comp_of[u]].identity();
}

std::string MultipleGroupRack::label(Elt u) const {
  if (!labels.empty()) return labels[u];
  return "(" + std::to_string(comp_of[u]) + "," + components[comp_of[u]].label(local_of[u]) +
         ")";
}

MgrReport verify_mgr_axioms(const MultipleGroupRack& m) {
  MgrReport report;
  const Elt n = m.size();

  // (i) x * e_lambda = x, then x * (ab) = (x * a) * b.
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const Elt e = m.component_identity(static_cast<Elt>(lam));
    for (Elt x = 0; x < n; ++x) {
      if (m.star_at(x, e) != x) {
        report.first_violation =
            MgrViolation{"i_identity", {x, e}, m.label(x) + " * " + m.label(e) + " != " +
                                                   m.label(x)};
        return report;
      }
    }
  }
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const Elt off = m.offsets[lam];
    const Elt sz = m.components[lam].order();
    for (Elt a = off; a < off + sz; ++a) {
      for (Elt b = off; b < off + sz; ++b) {
        const Elt ab = m.comp_mul(a, b);
        if (auto x = kernels::first_compose_violation(m.star.data(), n, a, b, ab)) {
          report.first_violation =
              MgrViolation{"i",
                           {*x, a, b},
                           m.label(*x) + " * (" + m.label(a) + m.label(b) + ") != (" +
                               m.label(*x) + " * " + m.label(a) + ") * " + m.label(b)};
          return report;
        }
      }
    }
  }

  // (ii) right self-distributivity over the whole carrier.
  if (auto bad = kernels::first_self_distributivity_violation(m.star.data(), n)) {
    report.first_violation =
        MgrViolation{"ii",
                     {bad->x, bad->y, bad->z},
                     "(" + m.label(bad->x) + " * " + m.label(bad->y) + ") * " +
                         m.label(bad->z) + " fails self-distributivity"};
    return report;
  }

  // (iii) one target component per (lambda, x), and S_x restricted to a
  // component is multiplicative.
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const Elt off = m.offsets[lam];
    const Elt sz = m.components[lam].order();
    for (Elt x = 0; x < n; ++x) {
      const Elt mu = m.comp_of[m.star_at(off, x)];
      for (Elt a = off; a < off + sz; ++a) {
        if (m.comp_of[m.star_at(a, x)] != mu) {
          report.first_violation = MgrViolation{
              "iii_component",
              {a, x},
              m.label(a) + " * " + m.label(x) + " lands outside the common component"};
          return report;
        }
      }
      for (Elt a = off; a < off + sz; ++a) {
        const Elt ax = m.star_at(a, x);
        for (Elt b = off; b < off + sz; ++b) {
          if (m.star_at(m.comp_mul(a, b), x) != m.comp_mul(ax, m.star_at(b, x))) {
            report.first_violation =
                MgrViolation{"iii",
                             {a, b, x},
                             "(" + m.label(a) + m.label(b) + ") * " + m.label(x) + " != (" +
                                 m.label(a) + " * " + m.label(x) + ")(" + m.label(b) + " * " +
                                 m.label(x) + ")"};
            return report;
          }
        }
      }
    }
  }

  report.ok = true;
  return report;
}

std::optional<std::pair<Elt, Elt>> find_mcq_violation(const MultipleGroupRack& m) {
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const Elt off = m.offsets[lam];
    const Elt sz = m.components[lam].order();
    for (Elt a = off; a < off + sz; ++a) {
      for (Elt b = off; b < off + sz; ++b) {
        if (m.star_at(a, b) != m.comp_mul(m.comp_mul(m.comp_inverse(b), a), b)) {
          return std::make_pair(a, b);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_mcq(const MultipleGroupRack& m) { return !find_mcq_violation(m).has_value(); }

MultipleGroupRack associated_mgr(const GFamilyOfRacks& family) {
  const Elt carrier = family.carrier;
  const FiniteGroup& g = family.group;
  const Elt go = g.order();
  const Elt n = carrier * go;

  auto index = [&](Elt x, Elt gi) { return x * go + gi; };
  std::vector<Elt> star(static_cast<std::size_t>(n) * n);
  for (Elt x = 0; x < carrier; ++x) {
    for (Elt gi = 0; gi < go; ++gi) {
      const Elt u = index(x, gi);
      for (Elt y = 0; y < carrier; ++y) {
        for (Elt h = 0; h < go; ++h) {
          star[static_cast<std::size_t>(u) * n + index(y, h)] =
              index(family.at(h, x, y), g.conjugate(gi, h));
        }
      }
    }
  }

  std::vector<FiniteGroup> components(carrier, g);
  std::vector<std::string> labels(n);
  for (Elt x = 0; x < carrier; ++x) {
    for (Elt gi = 0; gi < go; ++gi) {
      labels[index(x, gi)] = "(" + std::to_string(x) + "," + g.label(gi) + ")";
    }
  }
  return MultipleGroupRack::from_components(std::move(components), std::move(star),
                                            std::move(labels));
}

MultipleGroupRack semidirect_mgr(const GFamilyOfRacks& family, const SubgroupWitness& normal) {
  const FiniteGroup& g = family.group;
  if (normal.parent.order() != g.order() || normal.parent.table() != g.table()) {
    throw std::invalid_argument("subgroup witness does not belong to the family's group");
  }
  FiniteGroup h = semidirect_right_conj(normal);  // throws unless N is normal

  const Elt nn = static_cast<Elt>(normal.members.size());
  std::vector<Elt> pos(g.order(), -1);
  for (Elt i = 0; i < nn; ++i) pos[normal.members[i]] = i;

  const Elt ho = h.order();
  // For pair index p = gi*|N| + npos: the product g*n in G, used both as the
  // family exponent and as the conjugator.
  std::vector<Elt> gn(ho);
  for (Elt gi = 0; gi < g.order(); ++gi) {
    for (Elt i = 0; i < nn; ++i) gn[gi * nn + i] = g.mul(gi, normal.members[i]);
  }

  const Elt carrier = family.carrier;
  const Elt n = carrier * ho;
  auto index = [&](Elt x, Elt p) { return x * ho + p; };

  std::vector<Elt> star(static_cast<std::size_t>(n) * n);
  for (Elt p2 = 0; p2 < ho; ++p2) {
    const Elt q = gn[p2];
    // (g1, n1)^q, computed once per (p1, p2).
    std::vector<Elt> conj(ho);
    for (Elt p1 = 0; p1 < ho; ++p1) {
      const Elt g1 = p1 / nn;
      const Elt n1 = normal.members[p1 % nn];
      conj[p1] = g.conjugate(g1, q) * nn + pos[g.conjugate(n1, q)];
    }
    for (Elt x = 0; x < carrier; ++x) {
      for (Elt y = 0; y < carrier; ++y) {
        const Elt xy = family.at(q, x, y);
        for (Elt p1 = 0; p1 < ho; ++p1) {
          star[static_cast<std::size_t>(index(x, p1)) * n + index(y, p2)] = index(xy, conj[p1]);
        }
      }
    }
  }

  std::vector<FiniteGroup> components(carrier, h);
  std::vector<std::string> labels(n);
  for (Elt x = 0; x < carrier; ++x) {
    for (Elt p = 0; p < ho; ++p) {
      labels[index(x, p)] = "(" + std::to_string(x) + "," + h.label(p) + ")";
    }
  }
  return MultipleGroupRack::from_components(std::move(components), std::move(star),
                                            std::move(labels));
}

std::variant<MultipleGroupRack, CocycleInvalid> abelian_extension(const MultipleGroupRack& m,
                                                                  const CocycleData& cocycle) {
  const FiniteGroup& a = cocycle.target;
  if (!a.is_abelian()) {
    return CocycleInvalid{MgrViolation{"target_abelian", {}, "cocycle target is not abelian"}};
  }
  const Elt n = m.size();
  const Elt ao = a.order();
  if (cocycle.f_rack.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("f_rack dimension mismatch");
  }
  if (cocycle.f_group.size() != m.components.size()) {
    throw std::invalid_argument("f_group needs one table per component");
  }
  for (Elt v : cocycle.f_rack) {
    if (v < 0 || v >= ao) throw std::invalid_argument("f_rack entry out of range");
  }
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const Elt sz = m.components[lam].order();
    if (cocycle.f_group[lam].size() != static_cast<std::size_t>(sz) * sz) {
      throw std::invalid_argument("f_group dimension mismatch");
    }
    for (Elt v : cocycle.f_group[lam]) {
      if (v < 0 || v >= ao) throw std::invalid_argument("f_group entry out of range");
    }
  }

  // Twisted component groups G_lambda x A.
  std::vector<FiniteGroup> components;
  components.reserve(m.components.size());
  for (std::size_t lam = 0; lam < m.components.size(); ++lam) {
    const FiniteGroup& g = m.components[lam];
    const Elt sz = g.order();
    const Elt q = sz * ao;
    std::vector<Elt> table(static_cast<std::size_t>(q) * q);
    for (Elt i = 0; i < sz; ++i) {
      for (Elt av = 0; av < ao; ++av) {
        for (Elt j = 0; j < sz; ++j) {
          const Elt f = cocycle.f_group[lam][static_cast<std::size_t>(i) * sz + j];
          for (Elt bv = 0; bv < ao; ++bv) {
            table[static_cast<std::size_t>(i * ao + av) * q + (j * ao + bv)] =
                g.mul(i, j) * ao + a.mul(a.mul(av, bv), f);
          }
        }
      }
    }
    const auto identity = find_identity(table, q);
    if (!identity) {
      return CocycleInvalid{MgrViolation{
          "component_group",
          {static_cast<Elt>(lam)},
          "twisted component " + std::to_string(lam) + " has no two-sided identity"}};
    }
    const auto group_report = verify_group_axioms_report(table, q, *identity);
    if (!group_report.ok) {
      return CocycleInvalid{MgrViolation{
          "component_group",
          {static_cast<Elt>(lam)},
          "twisted component " + std::to_string(lam) + " is not a group: " +
              group_report.violation->axiom}};
    }
    std::vector<std::string> labels(q);
    for (Elt i = 0; i < sz; ++i) {
      for (Elt av = 0; av < ao; ++av) {
        labels[i * ao + av] = "(" + g.label(i) + "," + a.label(av) + ")";
      }
    }
    components.emplace_back(q, std::move(table), *identity, std::move(labels));
  }

  const Elt en = n * ao;
  auto index = [&](Elt u, Elt av) { return u * ao + av; };
  std::vector<Elt> star(static_cast<std::size_t>(en) * en);
  for (Elt u = 0; u < n; ++u) {
    for (Elt v = 0; v < n; ++v) {
      const Elt uv = m.star_at(u, v);
      const Elt f = cocycle.f_rack[static_cast<std::size_t>(u) * n + v];
      for (Elt av = 0; av < ao; ++av) {
        const Elt res = index(uv, a.mul(av, f));
        for (Elt bv = 0; bv < ao; ++bv) {
          star[static_cast<std::size_t>(index(u, av)) * en + index(v, bv)] = res;
        }
      }
    }
  }

  std::vector<std::string> labels(en);
  for (Elt u = 0; u < n; ++u) {
    for (Elt av = 0; av < ao; ++av) {
      labels[index(u, av)] = "(" + m.label(u) + "," + a.label(av) + ")";
    }
  }
  MultipleGroupRack ext = MultipleGroupRack::from_components(std::move(components),
                                                             std::move(star), std::move(labels));
  MgrReport report = verify_mgr_axioms(ext);
  if (!report.ok) return CocycleInvalid{*report.first_violation};
  return ext;
}

bool is_mgr_homomorphism(const std::vector<Elt>& map, const MultipleGroupRack& src,
                         const MultipleGroupRack& dst) {
  const Elt n = src.size();
  if (map.size() != static_cast<std::size_t>(n)) return false;
  for (Elt v : map) {
    if (v < 0 || v >= dst.size()) return false;
  }
  for (Elt u = 0; u < n; ++u) {
    for (Elt v = 0; v < n; ++v) {
      if (map[src.star_at(u, v)] != dst.star_at(map[u], map[v])) return false;
    }
  }
  for (std::size_t lam = 0; lam < src.components.size(); ++lam) {
    const Elt off = src.offsets[lam];
    const Elt sz = src.components[lam].order();
    const Elt mu = dst.comp_of[map[off]];
    for (Elt a = off; a < off + sz; ++a) {
      if (dst.comp_of[map[a]] != mu) return false;
    }
    for (Elt a = off; a < off + sz; ++a) {
      for (Elt b = off; b < off + sz; ++b) {
        if (map[src.comp_mul(a, b)] != dst.comp_mul(map[a], map[b])) return false;
      }
    }
  }
  return true;
}

Elt star_inverse(const MultipleGroupRack& m, Elt z, Elt y) {
  return m.star_at(z, m.comp_inverse(y));
}

}  // namespace mgrack
