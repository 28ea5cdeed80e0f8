#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mgrack/diagram.hpp"

namespace mgrack {

// Local rewrites on Y-oriented diagrams. Moves are applied at explicitly
// addressed sites; there is no pattern search. Every rewrite preserves the
// coloring count for any multiple group rack:
//
//   R2_ADD / R2_REMOVE  slide one strand over another (two opposite-sign
//                       crossings appear or disappear).
//   R3                  slide the bottom strand of a triangle across the
//                       crossing of the two strands above it; only the two
//                       crossings involving the bottom strand are rewired.
//   R5                  a strand passing under both legs of a vertex slides
//                       across it, passing under the stem instead (or back).
//   R6                  the same slide on the over side: both legs pass
//                       under the strand vs. the stem passes under it.
//
// R1 is intentionally absent: spatial surface diagrams are related by R2,
// R3, R5 and R6 only, so coloring counts of diagrams differing by a kink
// may legitimately differ. Reversal of a circle component is a separate
// rewrite (reverse_circle), not a MoveSpec.

enum class MoveKind { R2Add, R2Remove, R3, R5, R6 };

// Site addressing per kind (unused fields ignored):
//   R2Add:    over, under (arc ids), sign of the first new crossing.
//   R2Remove: over, middle (the short under arc between the two crossings).
//   R3:       crossings = {top/mid, mid/bottom, top/bottom} crossing indices;
//             variant "under_mid_first"  rewrites (b under m, then under t)
//                                        to (b under t, then under m),
//             variant "under_top_first"  is the inverse direction.
//   R5/R6:    vertex index; crossings = the strand's crossing indices at the
//             legs (two) or at the stem (one);
//             variant "legs_to_stem" or "stem_to_legs".
struct MoveSpec {
  MoveKind move = MoveKind::R2Add;
  std::string variant;
  ArcId over = -1;
  ArcId under = -1;
  ArcId middle = -1;
  int sign = +1;
  std::vector<std::int32_t> crossings;
  std::int32_t vertex = -1;
};

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns the rewritten diagram; new arc ids are allocated deterministically
// (max id + 1 upward). Throws MoveError naming the expected local pattern
// when the site does not match.
Diagram apply_move(const Diagram& d, const MoveSpec& spec);

// D1 #_alpha D2: renumbers d2's arcs above d1's, opens arc a1 of d1 with a
// split (stem: a1's tail part, left: head part, right: alpha) and arc a2 of
// d2 with a merge (left: alpha, right: a2's tail part, stem: head part),
// bridging the two by the fresh arc alpha. marked_arc is set to alpha.
// Over-slot references to an opened arc stay with its tail part.
Diagram connected_sum(const Diagram& d1, const Diagram& d2, ArcId a1, ArcId a2);

// Orientation flip of a closed loop: flips the sign of every crossing whose
// over arc is the loop. The arc must be closed.
Diagram reverse_circle(const Diagram& d, ArcId arc);

std::string move_kind_name(MoveKind kind);

}  // namespace mgrack
