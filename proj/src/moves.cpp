#include "mgrack/moves.hpp"

#include <algorithm>

namespace mgrack {

namespace {

int occurrences(const Diagram& d, ArcId id) {
  int k = 0;
  for (const Crossing& c : d.crossings) {
    k += (c.over == id) + (c.under_in == id) + (c.under_out == id);
  }
  for (const Vertex& v : d.vertices) {
    k += (v.left == id) + (v.right == id) + (v.stem == id);
  }
  return k;
}

void erase_arc(Diagram& d, ArcId id) {
  d.arcs.erase(std::remove_if(d.arcs.begin(), d.arcs.end(),
                              [&](const Arc& a) { return a.id == id; }),
               d.arcs.end());
}

// Re-points the unique head-consuming slot of `from` to `to`.
void repoint_head(Diagram& d, ArcId from, ArcId to) {
  for (Crossing& c : d.crossings) {
    if (c.under_in == from) {
      c.under_in = to;
      return;
    }
  }
  for (Vertex& v : d.vertices) {
    if (v.kind == VertexKind::Merge) {
      if (v.left == from) {
        v.left = to;
        return;
      }
      if (v.right == from) {
        v.right = to;
        return;
      }
    } else if (v.stem == from) {
      v.stem = to;
      return;
    }
  }
  throw MoveError("arc " + std::to_string(from) + " has no head consumer to re-point");
}

void replace_everywhere(Diagram& d, ArcId from, ArcId to) {
  for (Crossing& c : d.crossings) {
    if (c.over == from) c.over = to;
    if (c.under_in == from) c.under_in = to;
    if (c.under_out == from) c.under_out = to;
  }
  for (Vertex& v : d.vertices) {
    if (v.left == from) v.left = to;
    if (v.right == from) v.right = to;
    if (v.stem == from) v.stem = to;
  }
  if (d.marked_arc == from) d.marked_arc = to;
}

const Arc& arc_ref(const Diagram& d, ArcId id, const std::string& role) {
  const int pos = d.arc_pos(id);
  if (pos < 0) throw MoveError(role + " arc " + std::to_string(id) + " does not exist");
  return d.arcs[pos];
}

Crossing& crossing_ref(Diagram& d, std::int32_t index) {
  if (index < 0 || index >= static_cast<std::int32_t>(d.crossings.size())) {
    throw MoveError("crossing index " + std::to_string(index) + " out of range");
  }
  return d.crossings[index];
}

void require(bool cond, const std::string& expected) {
  if (!cond) throw MoveError("site mismatch: expected " + expected);
}

// The short arc `id` must appear exactly twice (in the slots the caller just
// matched) and carry no mark, so the rewrite stays locally confined.
void require_local(const Diagram& d, ArcId id, const std::string& role) {
  require(occurrences(d, id) == 2,
          role + " arc " + std::to_string(id) + " confined to the move site");
  require(d.marked_arc != id, role + " arc " + std::to_string(id) + " to be unmarked");
}

Diagram r2_add(Diagram d, const MoveSpec& spec) {
  require(spec.sign == 1 || spec.sign == -1, "sign +1 or -1");
  require(spec.over != spec.under, "two distinct arcs for an R2 slide");
  const Arc& under = arc_ref(d, spec.under, "under");
  arc_ref(d, spec.over, "over");
  const ArcId m = d.fresh_arc_id();
  if (under.closed) {
    d.arcs[d.arc_pos(spec.under)].closed = false;
    d.arcs.push_back({m, false});
    d.crossings.push_back({spec.over, spec.under, m, spec.sign});
    d.crossings.push_back({spec.over, m, spec.under, -spec.sign});
  } else {
    const ArcId t = m + 1;
    repoint_head(d, spec.under, t);
    d.arcs.push_back({m, false});
    d.arcs.push_back({t, false});
    d.crossings.push_back({spec.over, spec.under, m, spec.sign});
    d.crossings.push_back({spec.over, m, t, -spec.sign});
  }
  return d;
}

Diagram r2_remove(Diagram d, const MoveSpec& spec) {
  arc_ref(d, spec.middle, "middle");
  int i1 = -1, i2 = -1;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (d.crossings[i].under_out == spec.middle) {
      require(i1 < 0, "a single crossing producing the middle arc");
      i1 = static_cast<int>(i);
    }
    if (d.crossings[i].under_in == spec.middle) {
      require(i2 < 0, "a single crossing consuming the middle arc");
      i2 = static_cast<int>(i);
    }
  }
  require(i1 >= 0 && i2 >= 0 && i1 != i2,
          "two crossings joined by the middle arc " + std::to_string(spec.middle));
  const Crossing c1 = d.crossings[i1];
  const Crossing c2 = d.crossings[i2];
  require(c1.over == spec.over && c2.over == spec.over,
          "both crossings to pass under arc " + std::to_string(spec.over));
  require(c1.sign == -c2.sign, "opposite signs at the two crossings");
  require_local(d, spec.middle, "middle");

  const ArcId u = c1.under_in;
  const ArcId t = c2.under_out;
  d.crossings.erase(d.crossings.begin() + std::max(i1, i2));
  d.crossings.erase(d.crossings.begin() + std::min(i1, i2));
  erase_arc(d, spec.middle);
  if (u == t) {
    d.arcs[d.arc_pos(u)].closed = true;
  } else {
    replace_everywhere(d, t, u);
    erase_arc(d, t);
  }
  return d;
}

Diagram r3(Diagram d, const MoveSpec& spec) {
  require(spec.crossings.size() == 3, "three crossing indices for R3");
  Crossing& xtm = crossing_ref(d, spec.crossings[0]);
  Crossing& xmb = crossing_ref(d, spec.crossings[1]);
  Crossing& xtb = crossing_ref(d, spec.crossings[2]);
  require(&xtm != &xmb && &xtm != &xtb && &xmb != &xtb, "three distinct crossings");

  const ArcId top = xtm.over;
  const ArcId m0 = xtm.under_in;
  const ArcId m1 = xtm.under_out;
  require(xtb.over == top, "the third crossing to pass under the top strand");
  require(xmb.over == m0 || xmb.over == m1,
          "the second crossing to pass under a segment of the middle strand");
  // Sign coherence: the middle-strand segment switches across its crossing
  // with the top strand, which is consistent exactly when the two crossings
  // under the top strand agree as below. A once-cut middle loop (m0 == m1)
  // is compatible either way.
  auto coherent = [&](ArcId over_before) {
    return m0 == m1 || (over_before == m0 ? xtb.sign == xtm.sign : xtb.sign == -xtm.sign);
  };

  if (spec.variant == "under_mid_first") {
    require(xtb.under_in == xmb.under_out,
            "the bottom strand to pass under the middle strand, then under the top");
    require(coherent(xmb.over), "sign coherence between the two top-strand crossings");
    const ArcId b0 = xmb.under_in;
    const ArcId b1 = xmb.under_out;
    const ArcId b2 = xtb.under_out;
    require_local(d, b1, "bottom middle");
    const ArcId other = xmb.over == m0 ? m1 : m0;
    xtb = Crossing{top, b0, b1, xtb.sign};
    xmb = Crossing{other, b1, b2, xmb.sign};
  } else if (spec.variant == "under_top_first") {
    require(xmb.under_in == xtb.under_out,
            "the bottom strand to pass under the top strand, then under the middle");
    const ArcId other = xmb.over == m0 ? m1 : m0;
    require(coherent(other), "sign coherence between the two top-strand crossings");
    const ArcId b0 = xtb.under_in;
    const ArcId b1 = xtb.under_out;
    const ArcId b2 = xmb.under_out;
    require_local(d, b1, "bottom middle");
    xmb = Crossing{other, b0, b1, xmb.sign};
    xtb = Crossing{top, b1, b2, xtb.sign};
  } else {
    throw MoveError("R3 variant must be under_mid_first or under_top_first");
  }
  return d;
}

Vertex& vertex_ref(Diagram& d, std::int32_t index) {
  if (index < 0 || index >= static_cast<std::int32_t>(d.vertices.size())) {
    throw MoveError("vertex index " + std::to_string(index) + " out of range");
  }
  return d.vertices[index];
}

// R5: transversal strand on the under side of the vertex.
Diagram r5(Diagram d, const MoveSpec& spec) {
  Vertex& v = vertex_ref(d, spec.vertex);
  if (spec.variant == "legs_to_stem") {
    require(spec.crossings.size() == 2, "two crossing indices along the sliding strand");
    Crossing first = crossing_ref(d, spec.crossings[0]);
    Crossing second = crossing_ref(d, spec.crossings[1]);
    require(spec.crossings[0] != spec.crossings[1], "two distinct crossings");
    require(first.under_out == second.under_in,
            "the strand to pass under the first leg, then under the second");
    require(first.sign == second.sign, "equal signs at both legs");
    if (first.sign == 1) {
      require(first.over == v.left && second.over == v.right,
              "a +1 strand to pass under the left leg, then the right");
    } else {
      require(first.over == v.right && second.over == v.left,
              "a -1 strand to pass under the right leg, then the left");
    }
    const ArcId s0 = first.under_in;
    const ArcId s1 = first.under_out;
    const ArcId s2 = second.under_out;
    require_local(d, s1, "strand middle");
    auto hi = std::max(spec.crossings[0], spec.crossings[1]);
    auto lo = std::min(spec.crossings[0], spec.crossings[1]);
    d.crossings.erase(d.crossings.begin() + hi);
    d.crossings.erase(d.crossings.begin() + lo);
    erase_arc(d, s1);
    d.crossings.push_back({v.stem, s0, s2, first.sign});
  } else if (spec.variant == "stem_to_legs") {
    require(spec.crossings.size() == 1, "one crossing index at the stem");
    Crossing c = crossing_ref(d, spec.crossings[0]);
    require(c.over == v.stem, "the strand to pass under the stem");
    const ArcId s0 = c.under_in;
    const ArcId s2 = c.under_out;
    const ArcId s1 = d.fresh_arc_id();
    d.crossings.erase(d.crossings.begin() + spec.crossings[0]);
    d.arcs.push_back({s1, false});
    const ArcId first_leg = c.sign == 1 ? v.left : v.right;
    const ArcId second_leg = c.sign == 1 ? v.right : v.left;
    d.crossings.push_back({first_leg, s0, s1, c.sign});
    d.crossings.push_back({second_leg, s1, s2, c.sign});
  } else {
    throw MoveError("R5 variant must be legs_to_stem or stem_to_legs");
  }
  return d;
}

// R6: transversal strand on the over side of the vertex.
Diagram r6(Diagram d, const MoveSpec& spec) {
  Vertex& v = vertex_ref(d, spec.vertex);
  const bool merge = v.kind == VertexKind::Merge;
  if (spec.variant == "legs_to_stem") {
    require(spec.crossings.size() == 2, "two crossing indices, one per leg");
    require(spec.crossings[0] != spec.crossings[1], "two distinct crossings");
    Crossing cl = crossing_ref(d, spec.crossings[0]);
    Crossing cr = crossing_ref(d, spec.crossings[1]);
    require(cl.over == cr.over, "both legs to pass under one strand");
    require(cl.sign == cr.sign, "equal signs at both legs");
    const ArcId strand = cl.over;
    ArcId left_far, right_far;
    if (merge) {
      require(cl.under_out == v.left && cr.under_out == v.right,
              "the crossings to feed the merge's left and right legs");
      left_far = cl.under_in;
      right_far = cr.under_in;
    } else {
      require(cl.under_in == v.left && cr.under_in == v.right,
              "the crossings to continue the split's left and right legs");
      left_far = cl.under_out;
      right_far = cr.under_out;
    }
    require_local(d, v.left, "near left leg");
    require_local(d, v.right, "near right leg");
    const ArcId near_left = v.left;
    const ArcId near_right = v.right;
    const ArcId stem_far = v.stem;
    const ArcId stem_near = d.fresh_arc_id();
    auto hi = std::max(spec.crossings[0], spec.crossings[1]);
    auto lo = std::min(spec.crossings[0], spec.crossings[1]);
    d.crossings.erase(d.crossings.begin() + hi);
    d.crossings.erase(d.crossings.begin() + lo);
    erase_arc(d, near_left);
    erase_arc(d, near_right);
    d.arcs.push_back({stem_near, false});
    v.left = left_far;
    v.right = right_far;
    v.stem = stem_near;
    if (merge) {
      d.crossings.push_back({strand, stem_near, stem_far, cl.sign});
    } else {
      d.crossings.push_back({strand, stem_far, stem_near, cl.sign});
    }
  } else if (spec.variant == "stem_to_legs") {
    require(spec.crossings.size() == 1, "one crossing index at the stem");
    Crossing c = crossing_ref(d, spec.crossings[0]);
    const ArcId strand = c.over;
    ArcId stem_far;
    if (merge) {
      require(c.under_in == v.stem, "the merge's stem to pass under the strand");
      stem_far = c.under_out;
    } else {
      require(c.under_out == v.stem, "the split's stem to pass under the strand");
      stem_far = c.under_in;
    }
    require_local(d, v.stem, "near stem");
    const ArcId stem_near = v.stem;
    d.crossings.erase(d.crossings.begin() + spec.crossings[0]);
    erase_arc(d, stem_near);
    const ArcId fresh_left = d.fresh_arc_id();
    const ArcId fresh_right = fresh_left + 1;
    d.arcs.push_back({fresh_left, false});
    d.arcs.push_back({fresh_right, false});
    if (merge) {
      // Incoming legs now cross under the strand before the vertex.
      d.crossings.push_back({strand, v.left, fresh_left, c.sign});
      d.crossings.push_back({strand, v.right, fresh_right, c.sign});
      v.left = fresh_left;
      v.right = fresh_right;
      v.stem = stem_far;
    } else {
      // Outgoing legs cross under the strand after the vertex; their old
      // head consumers move to the fresh far segments.
      repoint_head(d, v.left, fresh_left);
      repoint_head(d, v.right, fresh_right);
      d.crossings.push_back({strand, v.left, fresh_left, c.sign});
      d.crossings.push_back({strand, v.right, fresh_right, c.sign});
      v.stem = stem_far;
    }
  } else {
    throw MoveError("R6 variant must be legs_to_stem or stem_to_legs");
  }
  return d;
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSpec& spec) {
  Diagram result;
  switch (spec.move) {
    case MoveKind::R2Add:
      result = r2_add(d, spec);
      break;
    case MoveKind::R2Remove:
      result = r2_remove(d, spec);
      break;
    case MoveKind::R3:
      result = r3(d, spec);
      break;
    case MoveKind::R5:
      result = r5(d, spec);
      break;
    case MoveKind::R6:
      result = r6(d, spec);
      break;
    default:
      throw MoveError("unknown move kind");
  }
  const DiagramReport report = validate(result);
  if (!report.ok) {
    throw MoveError("rewrite produced an invalid diagram: " + report.message);
  }
  return result;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2, ArcId a1, ArcId a2) {
  if (!d1.has_arc(a1)) throw MoveError("first operand has no arc " + std::to_string(a1));
  if (!d2.has_arc(a2)) throw MoveError("second operand has no arc " + std::to_string(a2));

  Diagram out = d1;
  out.marked_arc.reset();
  const ArcId offset = d1.fresh_arc_id();
  for (const Arc& a : d2.arcs) out.arcs.push_back({a.id + offset, a.closed});
  for (const Crossing& c : d2.crossings) {
    out.crossings.push_back({c.over + offset, c.under_in + offset, c.under_out + offset, c.sign});
  }
  for (const Vertex& v : d2.vertices) {
    out.vertices.push_back({v.kind, v.left + offset, v.right + offset, v.stem + offset});
  }
  const ArcId b2 = a2 + offset;

  ArcId next = out.fresh_arc_id();
  const ArcId alpha = next++;
  out.arcs.push_back({alpha, false});

  // Open a1 with a split; the bridge leaves on the right.
  if (out.arcs[out.arc_pos(a1)].closed) {
    out.arcs[out.arc_pos(a1)].closed = false;
    out.vertices.push_back({VertexKind::Split, a1, alpha, a1});
  } else {
    const ArcId head_part = next++;
    out.arcs.push_back({head_part, false});
    repoint_head(out, a1, head_part);
    out.vertices.push_back({VertexKind::Split, head_part, alpha, a1});
  }

  // Open b2 with a merge; the bridge arrives on the left.
  if (out.arcs[out.arc_pos(b2)].closed) {
    out.arcs[out.arc_pos(b2)].closed = false;
    out.vertices.push_back({VertexKind::Merge, alpha, b2, b2});
  } else {
    const ArcId head_part = next++;
    out.arcs.push_back({head_part, false});
    repoint_head(out, b2, head_part);
    out.vertices.push_back({VertexKind::Merge, alpha, b2, head_part});
  }

  out.marked_arc = alpha;
  const DiagramReport report = validate(out);
  if (!report.ok) {
    throw MoveError("connected sum produced an invalid diagram: " + report.message);
  }
  return out;
}

Diagram reverse_circle(const Diagram& d, ArcId arc) {
  const int pos = d.arc_pos(arc);
  if (pos < 0) throw MoveError("no arc " + std::to_string(arc));
  if (!d.arcs[pos].closed) {
    throw MoveError("arc " + std::to_string(arc) + " is not a circle component");
  }
  Diagram out = d;
  for (Crossing& c : out.crossings) {
    if (c.over == arc) c.sign = -c.sign;
  }
  return out;
}

std::string move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::R2Add:
      return "R2_ADD";
    case MoveKind::R2Remove:
      return "R2_REMOVE";
    case MoveKind::R3:
      return "R3";
    case MoveKind::R5:
      return "R5";
    case MoveKind::R6:
      return "R6";
  }
  return "?";
}

}  // namespace mgrack
