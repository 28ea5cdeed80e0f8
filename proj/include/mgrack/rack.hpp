#pragma once

#include <vector>

#include "mgrack/finite_group.hpp"

namespace mgrack {

// A finite rack: op[x*size + y] = x * y. Right translations S_y: x -> x*y
// must be bijections and * must be right self-distributive.
struct Rack {
  Elt size = 0;
  std::vector<Elt> op;

  Elt at(Elt x, Elt y) const { return op[static_cast<std::size_t>(x) * size + y]; }
};

bool verify_rack_axioms(const Rack& rack);
bool is_quandle(const Rack& rack);

// op[x][y] = (2y - x) mod n.
Rack dihedral_quandle(Elt n);

// op[x][y] = x.
Rack trivial_rack(Elt n);

// op[x][y] = (x + 1) mod n, independent of y.
Rack cyclic_rack(Elt n);

// Least k >= 1 with S_y^k = id for every y, computed as the lcm of the
// column permutation orders. Always finite for a finite rack.
Elt rack_type(const Rack& rack);

// A G-family of racks: one operation table per group element,
// ops[g][x*carrier + y] = x *^g y.
struct GFamilyOfRacks {
  Elt carrier = 0;
  FiniteGroup group;
  std::vector<std::vector<Elt>> ops;

  Elt at(Elt g, Elt x, Elt y) const {
    return ops[g][static_cast<std::size_t>(x) * carrier + y];
  }
};

// Exhaustive check of
//   x *^{gh} y = (x *^g y) *^h y,   x *^e y = x,
//   (x *^g y) *^h z = (x *^h z) *^{h^-1 g h} (y *^h z).
bool verify_gfamily_axioms(const GFamilyOfRacks& family);

// Carrier Z3 indexed by S3: the dihedral operation 2b - a for the three
// order-2 elements, the identity operation otherwise.
GFamilyOfRacks example_z3_s3();

// The Z_n-family of a rack, n = rack_type: x *^k y = S_y^k(x).
GFamilyOfRacks gfamily_from_rack(const Rack& rack);

}  // namespace mgrack
