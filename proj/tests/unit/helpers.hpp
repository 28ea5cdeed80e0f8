#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "mgrack/coloring.hpp"
#include "mgrack/diagram.hpp"
#include "mgrack/mgr.hpp"
#include "mgrack/rack.hpp"

namespace testutil {

inline std::filesystem::path fixture_dir() { return MGRACK_FIXTURE_DIR; }

// Brute-force coloring count: every assignment in |M|^#arcs, checked by the
// independent walker. Only for small instances.
inline std::uint64_t oracle_count(const mgrack::Diagram& d, const mgrack::MultipleGroupRack& m) {
  const std::size_t narcs = d.arcs.size();
  std::vector<mgrack::Elt> assignment(narcs, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (mgrack::verify_coloring(d, m, mgrack::Coloring{assignment})) ++count;
    std::size_t i = 0;
    while (i < narcs && ++assignment[i] == m.size()) assignment[i++] = 0;
    if (i == narcs) break;
  }
  return count;
}

// Triple-loop self-distributivity check, independent of the kernel path.
inline bool oracle_self_distributive(const mgrack::Rack& r) {
  for (mgrack::Elt x = 0; x < r.size; ++x) {
    for (mgrack::Elt y = 0; y < r.size; ++y) {
      for (mgrack::Elt z = 0; z < r.size; ++z) {
        if (r.at(r.at(x, y), z) != r.at(r.at(x, z), r.at(y, z))) return false;
      }
    }
  }
  return true;
}

inline bool oracle_columns_bijective(const mgrack::Rack& r) {
  for (mgrack::Elt y = 0; y < r.size; ++y) {
    std::vector<char> seen(r.size, 0);
    for (mgrack::Elt x = 0; x < r.size; ++x) {
      const mgrack::Elt v = r.at(x, y);
      if (v < 0 || v >= r.size || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

// All rack tables on {0..n-1}, by brute force over every table.
inline std::vector<mgrack::Rack> all_racks_of_size(mgrack::Elt n) {
  std::vector<mgrack::Rack> racks;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<mgrack::Elt> table(cells, 0);
  for (;;) {
    mgrack::Rack r{n, table};
    if (oracle_columns_bijective(r) && oracle_self_distributive(r)) racks.push_back(r);
    std::size_t i = 0;
    while (i < cells && ++table[i] == n) table[i++] = 0;
    if (i == cells) break;
  }
  return racks;
}

}  // namespace testutil
