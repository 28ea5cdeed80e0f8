#include "mgrack/coloring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mgrack {

namespace {

// Constraint graph with crossings normalized by sign: dst = src * over,
// where src is under_in for +1 crossings and under_out for -1 crossings.
struct Compiled {
  struct Cross {
    int over, src, dst;
  };
  struct Vert {
    int l, r, s;
  };

  int narcs = 0;
  std::vector<Cross> crossings;
  std::vector<Vert> verts;
  std::vector<std::vector<int>> incident;  // constraint ids per arc position

  static Compiled build(const Diagram& d) {
    Compiled c;
    c.narcs = static_cast<int>(d.arcs.size());
    c.incident.resize(c.narcs);
    auto pos = [&](ArcId id) { return d.arc_pos(id); };
    for (const Crossing& x : d.crossings) {
      Cross cr{pos(x.over), pos(x.under_in), pos(x.under_out)};
      if (x.sign < 0) std::swap(cr.src, cr.dst);
      c.crossings.push_back(cr);
    }
    for (const Vertex& v : d.vertices) {
      c.verts.push_back({pos(v.left), pos(v.right), pos(v.stem)});
    }
    auto attach = [&](int arc, int constraint) {
      auto& list = c.incident[arc];
      if (list.empty() || list.back() != constraint) list.push_back(constraint);
    };
    for (std::size_t i = 0; i < c.crossings.size(); ++i) {
      attach(c.crossings[i].over, static_cast<int>(i));
      attach(c.crossings[i].src, static_cast<int>(i));
      attach(c.crossings[i].dst, static_cast<int>(i));
    }
    const int base = static_cast<int>(c.crossings.size());
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
      attach(c.verts[i].l, base + static_cast<int>(i));
      attach(c.verts[i].r, base + static_cast<int>(i));
      attach(c.verts[i].s, base + static_cast<int>(i));
    }
    return c;
  }
};

// Depth-first enumeration with forced-value propagation. Branches only on
// arcs whose color is not implied; visit returns false to stop the search.
class Search {
 public:
  Search(const Compiled& cd, const MultipleGroupRack& m,
         std::function<bool(const std::vector<Elt>&)> visit)
      : cd_(cd), m_(m), visit_(std::move(visit)), color_(cd.narcs, -1) {}

  // Explores the subtree where arc `seed` takes value `value` (pass seed = -1
  // for the full search). Returns false if the visitor aborted.
  bool run(int seed = -1, Elt value = -1) {
    if (cd_.narcs == 0) return visit_(color_);
    if (seed < 0) return branch();
    const std::size_t mark = trail_.size();
    bool keep_going = true;
    if (assign(seed, value) && propagate()) keep_going = descend();
    unwind(mark);
    return keep_going;
  }

 private:
  bool assign(int arc, Elt v) {
    if (color_[arc] >= 0) return color_[arc] == v;
    color_[arc] = v;
    trail_.push_back(arc);
    pending_.push_back(arc);
    return true;
  }

  bool resolve_crossing(const Compiled::Cross& c) {
    const Elt over = color_[c.over];
    if (over < 0) return true;
    const Elt src = color_[c.src];
    const Elt dst = color_[c.dst];
    if (src >= 0) return assign(c.dst, m_.star_at(src, over));
    if (dst >= 0) return assign(c.src, star_inverse(m_, dst, over));
    return true;
  }

  bool resolve_vertex(const Compiled::Vert& v) {
    const Elt l = color_[v.l], r = color_[v.r], s = color_[v.s];
    if (l >= 0 && r >= 0) {
      if (m_.comp_of[l] != m_.comp_of[r]) return false;
      return assign(v.s, m_.comp_mul(l, r));
    }
    if (l >= 0 && s >= 0) {
      if (m_.comp_of[l] != m_.comp_of[s]) return false;
      return assign(v.r, m_.comp_mul(m_.comp_inverse(l), s));
    }
    if (r >= 0 && s >= 0) {
      if (m_.comp_of[r] != m_.comp_of[s]) return false;
      return assign(v.l, m_.comp_mul(s, m_.comp_inverse(r)));
    }
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      const int arc = pending_.back();
      pending_.pop_back();
      for (int id : cd_.incident[arc]) {
        const bool ok = id < static_cast<int>(cd_.crossings.size())
                            ? resolve_crossing(cd_.crossings[id])
                            : resolve_vertex(cd_.verts[id - cd_.crossings.size()]);
        if (!ok) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = -1;
      trail_.pop_back();
    }
    pending_.clear();
  }

  int assigned_slots(int id) const {
    if (id < static_cast<int>(cd_.crossings.size())) {
      const auto& c = cd_.crossings[id];
      return (color_[c.over] >= 0) + (color_[c.src] >= 0) + (color_[c.dst] >= 0);
    }
    const auto& v = cd_.verts[id - cd_.crossings.size()];
    return (color_[v.l] >= 0) + (color_[v.r] >= 0) + (color_[v.s] >= 0);
  }

  int pick_branch_arc() const {
    int best = -1, best_score = -1, best_degree = -1;
    for (int arc = 0; arc < cd_.narcs; ++arc) {
      if (color_[arc] >= 0) continue;
      int score = 0;
      for (int id : cd_.incident[arc]) score += assigned_slots(id);
      const int degree = static_cast<int>(cd_.incident[arc].size());
      if (score > best_score || (score == best_score && degree > best_degree)) {
        best = arc;
        best_score = score;
        best_degree = degree;
      }
    }
    return best;
  }

  bool branch() {
    const int arc = pick_branch_arc();
    if (arc < 0) return visit_(color_);
    for (Elt v = 0; v < m_.size(); ++v) {
      const std::size_t mark = trail_.size();
      bool keep_going = true;
      if (assign(arc, v) && propagate()) keep_going = descend();
      unwind(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  bool descend() { return branch(); }

  const Compiled& cd_;
  const MultipleGroupRack& m_;
  std::function<bool(const std::vector<Elt>&)> visit_;
  std::vector<Elt> color_;
  std::vector<int> trail_;
  std::vector<int> pending_;
};

Compiled compile_checked(const Diagram& d) {
  const DiagramReport report = validate(d);
  if (!report.ok) throw std::invalid_argument("invalid diagram: " + report.message);
  return Compiled::build(d);
}

int root_branch_arc(const Compiled& cd) {
  int best = -1, best_degree = -1;
  for (int arc = 0; arc < cd.narcs; ++arc) {
    if (static_cast<int>(cd.incident[arc].size()) > best_degree) {
      best = arc;
      best_degree = static_cast<int>(cd.incident[arc].size());
    }
  }
  return best;
}

}  // namespace

std::uint64_t count_colorings(const Diagram& d, const MultipleGroupRack& m, int jobs) {
  const Compiled cd = compile_checked(d);
  if (cd.narcs == 0) return 1;
  if (jobs <= 1) {
    std::uint64_t count = 0;
    Search search(cd, m, [&](const std::vector<Elt>&) {
      ++count;
      return true;
    });
    search.run();
    return count;
  }
  // Stripe the root branch across workers; the total is a plain sum, so the
  // result does not depend on scheduling.
  const int root = root_branch_arc(cd);
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      Search search(cd, m, [&](const std::vector<Elt>&) {
        ++partial[w];
        return true;
      });
      for (Elt v = w; v < m.size(); v += jobs) search.run(root, v);
    });
  }
  for (auto& t : workers) t.join();
  std::uint64_t count = 0;
  for (std::uint64_t p : partial) count += p;
  return count;
}

std::vector<Coloring> enumerate_colorings(const Diagram& d, const MultipleGroupRack& m,
                                          std::uint64_t limit, int jobs) {
  const Compiled cd = compile_checked(d);
  std::vector<Coloring> out;
  if (cd.narcs == 0) {
    out.push_back(Coloring{{}});
  } else if (jobs <= 1) {
    Search search(cd, m, [&](const std::vector<Elt>& c) {
      out.push_back(Coloring{c});
      return true;
    });
    search.run();
  } else {
    const int root = root_branch_arc(cd);
    std::vector<std::vector<Coloring>> partial(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        Search search(cd, m, [&](const std::vector<Elt>& c) {
          partial[w].push_back(Coloring{c});
          return true;
        });
        for (Elt v = w; v < m.size(); v += jobs) search.run(root, v);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& chunk : partial) {
      out.insert(out.end(), chunk.begin(), chunk.end());
      chunk.clear();
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Coloring& a, const Coloring& b) { return a.by_arc < b.by_arc; });
  if (limit > 0 && out.size() > limit) out.resize(limit);
  return out;
}

StarReport check_property_star(const Diagram& d, const MultipleGroupRack& m) {
  if (!d.marked_arc) {
    throw std::invalid_argument("check_property_star needs a diagram with a marked arc");
  }
  const Compiled cd = compile_checked(d);
  const int marked = d.arc_pos(*d.marked_arc);
  StarReport report;
  Search search(cd, m, [&](const std::vector<Elt>& c) {
    if (!m.is_component_identity(c[marked])) {
      report.holds = true;
      report.witness = Coloring{c};
      return false;
    }
    return true;
  });
  search.run();
  return report;
}

bool verify_coloring(const Diagram& d, const MultipleGroupRack& m, const Coloring& coloring) {
  if (coloring.by_arc.size() != d.arcs.size()) return false;
  for (Elt v : coloring.by_arc) {
    if (v < 0 || v >= m.size()) return false;
  }
  auto at = [&](ArcId id) { return coloring.by_arc[d.arc_pos(id)]; };
  for (const Crossing& c : d.crossings) {
    const Elt over = at(c.over);
    const Elt in = at(c.under_in);
    const Elt out = at(c.under_out);
    if (c.sign > 0) {
      if (out != m.star_at(in, over)) return false;
    } else {
      if (in != m.star_at(out, over)) return false;
    }
  }
  for (const Vertex& v : d.vertices) {
    const Elt l = at(v.left), r = at(v.right), s = at(v.stem);
    if (m.comp_of[l] != m.comp_of[r] || m.comp_of[l] != m.comp_of[s]) return false;
    if (m.comp_mul(l, r) != s) return false;
  }
  return true;
}

bool assert_move_invariance(const Diagram& before, const Diagram& after,
                            const MultipleGroupRack& m, int jobs) {
  return count_colorings(before, m, jobs) == count_colorings(after, m, jobs);
}

}  // namespace mgrack
