#include "mgrack/rack.hpp"

#include <numeric>
#include <stdexcept>

#include "mgrack/kernels.hpp"

namespace mgrack {

namespace {

bool columns_bijective(const Rack& rack) {
  std::vector<char> seen(rack.size);
  for (Elt y = 0; y < rack.size; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt x = 0; x < rack.size; ++x) {
      const Elt v = rack.at(x, y);
      if (v < 0 || v >= rack.size || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

// Order of the permutation x -> op[x][y].
Elt column_order(const Rack& rack, Elt y) {
  std::vector<char> visited(rack.size, 0);
  long long result = 1;
  for (Elt start = 0; start < rack.size; ++start) {
    if (visited[start]) continue;
    Elt len = 0;
    Elt cur = start;
    while (!visited[cur]) {
      visited[cur] = 1;
      cur = rack.at(cur, y);
      ++len;
    }
    result = std::lcm(result, static_cast<long long>(len));
  }
  return static_cast<Elt>(result);
}

}  // namespace

bool verify_rack_axioms(const Rack& rack) {
  if (rack.size <= 0 || rack.op.size() != static_cast<std::size_t>(rack.size) * rack.size) {
    return false;
  }
  if (!columns_bijective(rack)) return false;
  return !kernels::first_self_distributivity_violation(rack.op.data(), rack.size).has_value();
}

bool is_quandle(const Rack& rack) {
  if (!verify_rack_axioms(rack)) return false;
  for (Elt x = 0; x < rack.size; ++x) {
    if (rack.at(x, x) != x) return false;
  }
  return true;
}

Rack dihedral_quandle(Elt n) {
  if (n <= 0) throw std::invalid_argument("dihedral_quandle needs n >= 1");
  Rack rack{n, std::vector<Elt>(static_cast<std::size_t>(n) * n)};
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      rack.op[static_cast<std::size_t>(x) * n + y] = ((2 * y - x) % n + n) % n;
    }
  }
  return rack;
}

Rack trivial_rack(Elt n) {
  if (n <= 0) throw std::invalid_argument("trivial_rack needs n >= 1");
  Rack rack{n, std::vector<Elt>(static_cast<std::size_t>(n) * n)};
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) rack.op[static_cast<std::size_t>(x) * n + y] = x;
  }
  return rack;
}

Rack cyclic_rack(Elt n) {
  if (n <= 0) throw std::invalid_argument("cyclic_rack needs n >= 1");
  Rack rack{n, std::vector<Elt>(static_cast<std::size_t>(n) * n)};
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) rack.op[static_cast<std::size_t>(x) * n + y] = (x + 1) % n;
  }
  return rack;
}

Elt rack_type(const Rack& rack) {
  long long result = 1;
  for (Elt y = 0; y < rack.size; ++y) {
    result = std::lcm(result, static_cast<long long>(column_order(rack, y)));
    if (result > (1 << 20)) throw std::runtime_error("rack type overflow");
  }
  return static_cast<Elt>(result);
}

bool verify_gfamily_axioms(const GFamilyOfRacks& family) {
  const Elt n = family.carrier;
  const FiniteGroup& g = family.group;
  if (n <= 0 || family.ops.size() != static_cast<std::size_t>(g.order())) return false;
  for (const auto& table : family.ops) {
    if (table.size() != static_cast<std::size_t>(n) * n) return false;
    for (Elt v : table) {
      if (v < 0 || v >= n) return false;
    }
  }
  // (i) exponent laws.
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      if (family.at(g.identity(), x, y) != x) return false;
      for (Elt a = 0; a < g.order(); ++a) {
        const Elt xa = family.at(a, x, y);
        for (Elt b = 0; b < g.order(); ++b) {
          if (family.at(g.mul(a, b), x, y) != family.at(b, xa, y)) return false;
        }
      }
    }
  }
  // (ii) exchange law.
  for (Elt a = 0; a < g.order(); ++a) {
    for (Elt b = 0; b < g.order(); ++b) {
      const Elt conj = g.conjugate(a, b);
      for (Elt x = 0; x < n; ++x) {
        for (Elt y = 0; y < n; ++y) {
          const Elt xy = family.at(a, x, y);
          for (Elt z = 0; z < n; ++z) {
            if (family.at(b, xy, z) !=
                family.at(conj, family.at(b, x, z), family.at(b, y, z))) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

GFamilyOfRacks example_z3_s3() {
  FiniteGroup s3 = s3_presented();
  const Rack dihedral = dihedral_quandle(3);
  const Rack identity_op = trivial_rack(3);
  GFamilyOfRacks family{3, s3, {}};
  family.ops.reserve(6);
  for (Elt g = 0; g < s3.order(); ++g) {
    // The order-2 elements (the three reflections) act dihedrally.
    const bool reflection = g != s3.identity() && s3.mul(g, g) == s3.identity();
    family.ops.push_back(reflection ? dihedral.op : identity_op.op);
  }
  return family;
}

GFamilyOfRacks gfamily_from_rack(const Rack& rack) {
  if (!verify_rack_axioms(rack)) {
    throw std::invalid_argument("gfamily_from_rack requires a valid rack");
  }
  const Elt type = rack_type(rack);
  GFamilyOfRacks family{rack.size, cyclic_group(type), {}};
  family.ops.reserve(type);
  // ops[k][x][y] = S_y^k(x); build by iterating k.
  std::vector<Elt> current(rack.op.size());
  for (Elt x = 0; x < rack.size; ++x) {
    for (Elt y = 0; y < rack.size; ++y) {
      current[static_cast<std::size_t>(x) * rack.size + y] = x;
    }
  }
  for (Elt k = 0; k < type; ++k) {
    family.ops.push_back(current);
    std::vector<Elt> next(current.size());
    for (Elt x = 0; x < rack.size; ++x) {
      for (Elt y = 0; y < rack.size; ++y) {
        const std::size_t idx = static_cast<std::size_t>(x) * rack.size + y;
        next[idx] = rack.at(current[idx], y);
      }
    }
    current = std::move(next);
  }
  return family;
}

}  // namespace mgrack
