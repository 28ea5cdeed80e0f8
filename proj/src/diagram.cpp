#include "mgrack/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mgrack {

bool Diagram::has_arc(ArcId id) const { return arc_pos(id) >= 0; }

int Diagram::arc_pos(ArcId id) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

ArcId Diagram::fresh_arc_id() const {
  ArcId next = 0;
  for (const Arc& a : arcs) next = std::max(next, a.id + 1);
  return next;
}

DiagramReport validate(const Diagram& d) {
  std::set<ArcId> ids;
  for (const Arc& a : d.arcs) {
    if (a.id < 0) return {false, "arc id " + std::to_string(a.id) + " is negative"};
    if (!ids.insert(a.id).second) {
      return {false, "duplicate arc id " + std::to_string(a.id)};
    }
  }
  auto known = [&](ArcId id) { return ids.count(id) != 0; };

  // head consumers: crossing under_in, merge left/right, split stem
  // tail producers: crossing under_out, merge stem, split left/right
  std::map<ArcId, int> heads, tails, unders;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    for (ArcId id : {c.over, c.under_in, c.under_out}) {
      if (!known(id)) {
        return {false, "crossing " + std::to_string(i) + " references unknown arc " +
                           std::to_string(id)};
      }
    }
    if (c.sign != 1 && c.sign != -1) {
      return {false, "crossing " + std::to_string(i) + " has sign " + std::to_string(c.sign)};
    }
    ++heads[c.under_in];
    ++tails[c.under_out];
    ++unders[c.under_in];
    ++unders[c.under_out];
  }
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const Vertex& v = d.vertices[i];
    for (ArcId id : {v.left, v.right, v.stem}) {
      if (!known(id)) {
        return {false, "vertex " + std::to_string(i) + " references unknown arc " +
                           std::to_string(id)};
      }
      ++unders[id];
    }
    if (v.kind == VertexKind::Merge) {
      ++heads[v.left];
      ++heads[v.right];
      ++tails[v.stem];
    } else {
      ++heads[v.stem];
      ++tails[v.left];
      ++tails[v.right];
    }
  }

  for (const Arc& a : d.arcs) {
    if (a.closed) {
      if (unders.count(a.id)) {
        return {false, "closed arc " + std::to_string(a.id) +
                           " appears in an under or vertex slot"};
      }
      continue;
    }
    const int h = heads.count(a.id) ? heads[a.id] : 0;
    const int t = tails.count(a.id) ? tails[a.id] : 0;
    if (h != 1 || t != 1) {
      return {false, "open arc " + std::to_string(a.id) + " has " + std::to_string(h) +
                         " head consumer(s) and " + std::to_string(t) + " tail producer(s)"};
    }
  }

  if (d.marked_arc && !known(*d.marked_arc)) {
    return {false, "marked arc " + std::to_string(*d.marked_arc) + " does not exist"};
  }
  return {true, ""};
}

namespace {

// Backtracking search for an arc-id bijection matching crossings, vertices,
// flags and the mark. Diagrams in this project stay small.
struct IsoSearch {
  const Diagram& a;
  const Diagram& b;
  std::map<ArcId, ArcId> fwd;
  std::map<ArcId, ArcId> bwd;
  std::vector<char> used_crossings;
  std::vector<char> used_vertices;

  bool bind(ArcId x, ArcId y) {
    auto fa = fwd.find(x);
    if (fa != fwd.end()) return fa->second == y;
    auto fb = bwd.find(y);
    if (fb != bwd.end()) return false;
    const int pa = a.arc_pos(x), pb = b.arc_pos(y);
    if (pa < 0 || pb < 0 || a.arcs[pa].closed != b.arcs[pb].closed) return false;
    fwd[x] = y;
    bwd[y] = x;
    return true;
  }

  bool match_crossings(std::size_t i) {
    if (i == a.crossings.size()) return match_vertices(0);
    const Crossing& ca = a.crossings[i];
    for (std::size_t j = 0; j < b.crossings.size(); ++j) {
      if (used_crossings[j]) continue;
      const Crossing& cb = b.crossings[j];
      if (ca.sign != cb.sign) continue;
      auto saved_fwd = fwd;
      auto saved_bwd = bwd;
      if (bind(ca.over, cb.over) && bind(ca.under_in, cb.under_in) &&
          bind(ca.under_out, cb.under_out)) {
        used_crossings[j] = 1;
        if (match_crossings(i + 1)) return true;
        used_crossings[j] = 0;
      }
      fwd = std::move(saved_fwd);
      bwd = std::move(saved_bwd);
    }
    return false;
  }

  bool match_vertices(std::size_t i) {
    if (i == a.vertices.size()) return finish();
    const Vertex& va = a.vertices[i];
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
      if (used_vertices[j]) continue;
      const Vertex& vb = b.vertices[j];
      if (va.kind != vb.kind) continue;
      auto saved_fwd = fwd;
      auto saved_bwd = bwd;
      if (bind(va.left, vb.left) && bind(va.right, vb.right) && bind(va.stem, vb.stem)) {
        used_vertices[j] = 1;
        if (match_vertices(i + 1)) return true;
        used_vertices[j] = 0;
      }
      fwd = std::move(saved_fwd);
      bwd = std::move(saved_bwd);
    }
    return false;
  }

  bool finish() {
    // Arcs touched by no crossing or vertex must pair up by closed flag.
    std::vector<ArcId> free_a, free_b;
    for (const Arc& arc : a.arcs) {
      if (!fwd.count(arc.id)) free_a.push_back(arc.id);
    }
    for (const Arc& arc : b.arcs) {
      if (!bwd.count(arc.id)) free_b.push_back(arc.id);
    }
    if (free_a.size() != free_b.size()) return false;
    auto closed_count = [](const Diagram& d, const std::vector<ArcId>& list) {
      int k = 0;
      for (ArcId id : list) {
        if (d.arcs[d.arc_pos(id)].closed) ++k;
      }
      return k;
    };
    if (closed_count(a, free_a) != closed_count(b, free_b)) return false;
    if (a.marked_arc.has_value() != b.marked_arc.has_value()) return false;
    if (a.marked_arc) {
      auto it = fwd.find(*a.marked_arc);
      if (it != fwd.end()) return it->second == *b.marked_arc;
      // both marks must be free arcs of matching flag
      const bool ca = a.arcs[a.arc_pos(*a.marked_arc)].closed;
      const bool cb = b.arcs[b.arc_pos(*b.marked_arc)].closed;
      return ca == cb && std::count(free_b.begin(), free_b.end(), *b.marked_arc) == 1;
    }
    return true;
  }
};

}  // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.arcs.size() != b.arcs.size() || a.crossings.size() != b.crossings.size() ||
      a.vertices.size() != b.vertices.size()) {
    return false;
  }
  IsoSearch search{a, b, {}, {}, std::vector<char>(b.crossings.size(), 0),
                   std::vector<char>(b.vertices.size(), 0)};
  return search.match_crossings(0);
}

}  // namespace mgrack
