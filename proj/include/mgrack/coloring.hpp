#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgrack/diagram.hpp"
#include "mgrack/mgr.hpp"

namespace mgrack {

// A coloring assigns an element of the multiple group rack to every arc,
// indexed by position in Diagram::arcs. Constraints:
//   crossing, sign +1:  C(under_out) = C(under_in) * C(over)
//   crossing, sign -1:  C(under_in)  = C(under_out) * C(over)
//   vertex:             C(left), C(right), C(stem) in one component and
//                       C(left) C(right) = C(stem)
struct Coloring {
  std::vector<Elt> by_arc;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Exact number of colorings by constraint propagation plus backtracking.
// Deterministic; with jobs > 1 the top branch is striped across workers and
// the per-worker counts summed, so the result is schedule-independent.
// Throws std::invalid_argument when the diagram does not validate.
std::uint64_t count_colorings(const Diagram& d, const MultipleGroupRack& m, int jobs = 1);

// All colorings (or the first `limit` of them) in lexicographic order of the
// assignment vector. limit = 0 means no limit.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const MultipleGroupRack& m,
                                          std::uint64_t limit = 0, int jobs = 1);

struct StarReport {
  bool holds = false;
  std::optional<Coloring> witness;
};

// Property check on a connected-sum diagram: does some coloring give the
// marked arc a non-identity element of its component? Requires marked_arc.
StarReport check_property_star(const Diagram& d, const MultipleGroupRack& m);

// Independent checker: walks every crossing and vertex of the diagram and
// tests the local conditions directly. Used to cross-validate the search.
bool verify_coloring(const Diagram& d, const MultipleGroupRack& m, const Coloring& c);

// count_colorings(before) == count_colorings(after).
bool assert_move_invariance(const Diagram& before, const Diagram& after,
                            const MultipleGroupRack& m, int jobs = 1);

}  // namespace mgrack
