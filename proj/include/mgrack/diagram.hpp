#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgrack/finite_group.hpp"

namespace mgrack {

// Combinatorial model of a Y-oriented spatial trivalent graph diagram.
//
// An arc is a maximal oriented strand between undercrossings/vertices, or a
// closed loop with neither. Conventions the coloring semantics hangs on:
//
//   Vertex slots: merge has left and right flowing in and the stem flowing
//   out; split has the stem flowing in and left and right flowing out. In
//   the normal position (stem drawn vertically, the two branch edges above
//   it for a merge and below it for a split), "left" and "right" are read
//   off the page. Neither kind is a sink or a source, so every vertex is
//   Y-oriented by construction. README.md draws the pictures.
//
//   Crossing sign +1: the under strand crosses from the right half-plane of
//   the over strand's direction to the left. Its coloring relation is
//   under_out = under_in * over; sign -1 solves the other way around.
//
// Closed-loop arcs have no endpoints: they may appear as over arcs only.
// Open arcs appear in exactly one head-consuming slot (crossing under_in,
// merge left/right, split stem) and exactly one tail-producing slot
// (crossing under_out, merge stem, split left/right).

using ArcId = std::int32_t;

struct Arc {
  ArcId id = 0;
  bool closed = false;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Crossing {
  ArcId over = -1;
  ArcId under_in = -1;
  ArcId under_out = -1;
  int sign = +1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class VertexKind { Merge, Split };

struct Vertex {
  VertexKind kind = VertexKind::Merge;
  ArcId left = -1;
  ArcId right = -1;
  ArcId stem = -1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Diagram {
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;
  std::vector<Vertex> vertices;
  std::optional<ArcId> marked_arc;

  friend bool operator==(const Diagram&, const Diagram&) = default;

  bool has_arc(ArcId id) const;
  int arc_pos(ArcId id) const;  // -1 when absent
  ArcId fresh_arc_id() const;   // max id + 1, deterministic
};

struct DiagramReport {
  bool ok = false;
  std::string message;
};

// Endpoint consistency and slot sanity; returns the first violation.
DiagramReport validate(const Diagram& d);

// Equality up to a bijective relabeling of arc ids (crossing/vertex lists are
// matched as multisets, marked arcs must correspond).
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace mgrack
