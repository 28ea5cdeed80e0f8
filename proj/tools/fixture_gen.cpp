// Regenerates the bundled fixture corpus. Deterministic: running it twice
// produces byte-identical files, which the corpus freshness test relies on.
//
//   fixture_gen [output_dir]   (default: fixtures)

#include <filesystem>
#include <iostream>
#include <map>

#include "mgrack/coloring.hpp"
#include "mgrack/json_io.hpp"

namespace fs = std::filesystem;
using namespace mgrack;

namespace {

Diagram circle() {
  Diagram d;
  d.arcs = {{0, true}};
  return d;
}

Diagram two_circles() {
  Diagram d;
  d.arcs = {{0, true}, {1, true}};
  return d;
}

Diagram theta() {
  Diagram d;
  d.arcs = {{0, false}, {1, false}, {2, false}};
  d.vertices = {{VertexKind::Merge, 0, 1, 2}, {VertexKind::Split, 0, 1, 2}};
  return d;
}

// A loop passing under itself once.
Diagram kink(int sign) {
  Diagram d;
  d.arcs = {{0, false}};
  d.crossings = {{0, 0, 0, sign}};
  return d;
}

// Theta plus a loop strand passing under both legs of one vertex.
Diagram theta_with_strand_under(int sign) {
  Diagram d = theta();
  d.arcs.push_back({3, false});
  d.arcs.push_back({4, false});
  if (sign > 0) {
    d.crossings = {{0, 3, 4, 1}, {1, 4, 3, 1}};
  } else {
    d.crossings = {{1, 3, 4, -1}, {0, 4, 3, -1}};
  }
  return d;
}

// Theta with one vertex's legs cut by an over-passing circle.
Diagram theta_with_strand_over(VertexKind cut_side, int sign) {
  Diagram d;
  d.arcs = {{0, false}, {1, false}, {2, false}, {3, false}, {4, false}, {5, true}};
  if (cut_side == VertexKind::Merge) {
    d.vertices = {{VertexKind::Merge, 1, 3, 4}, {VertexKind::Split, 0, 2, 4}};
    d.crossings = {{5, 0, 1, sign}, {5, 2, 3, sign}};
  } else {
    d.vertices = {{VertexKind::Split, 0, 2, 4}, {VertexKind::Merge, 1, 3, 4}};
    d.crossings = {{5, 0, 1, sign}, {5, 2, 3, sign}};
  }
  return d;
}

// Three strands: a closed top loop, a middle loop ringing it, and a bottom
// loop passing under the middle strand and the top loop once each.
Diagram r3_before(bool mid_segment_far, int mb_sign, int tb_sign) {
  Diagram d;
  d.arcs = {{0, true}, {1, false}, {2, false}, {3, false}, {4, false}};
  d.crossings = {
      {0, 1, 2, 1},                            // top over middle (m0 -> m1)
      {0, 2, 1, -1},                           // the middle loop closes around the top
      {mid_segment_far ? 2 : 1, 3, 4, mb_sign},  // bottom under middle
      {0, 4, 3, tb_sign},                        // bottom under top
  };
  return d;
}

struct Corpus {
  fs::path root;

  void write(const fs::path& rel, const ojson& j) const {
    const fs::path path = root / rel;
    fs::create_directories(path.parent_path());
    write_json_file(path, j);
  }

  void move_pair(const std::string& name, const Diagram& before, const MoveSpec& spec) const {
    const Diagram after = apply_move(before, spec);
    write(fs::path("moves") / name / "before.json", diagram_to_json(before));
    write(fs::path("moves") / name / "move.json", move_to_json(spec));
    write(fs::path("moves") / name / "after.json", diagram_to_json(after));
  }
};

MoveSpec r2_add_spec(ArcId over, ArcId under, int sign) {
  MoveSpec m;
  m.move = MoveKind::R2Add;
  m.over = over;
  m.under = under;
  m.sign = sign;
  return m;
}

MoveSpec r3_spec(const std::string& variant, std::vector<std::int32_t> crossings) {
  MoveSpec m;
  m.move = MoveKind::R3;
  m.variant = variant;
  m.crossings = std::move(crossings);
  return m;
}

MoveSpec slide_spec(MoveKind kind, const std::string& variant, std::int32_t vertex,
                    std::vector<std::int32_t> crossings) {
  MoveSpec m;
  m.move = kind;
  m.variant = variant;
  m.vertex = vertex;
  m.crossings = std::move(crossings);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  const Corpus corpus{argc > 1 ? fs::path(argv[1]) : fs::path("fixtures")};

  const FiniteGroup s3 = s3_presented();
  const GFamilyOfRacks family = example_z3_s3();

  corpus.write("groups/s3.json", group_to_json(s3));
  corpus.write("groups/z3.json", group_to_json(cyclic_group(3)));
  corpus.write("racks/dihedral3.json", rack_to_json(dihedral_quandle(3)));
  corpus.write("gfamily/z3s3.json", gfamily_to_json(family));

  corpus.write("diagrams/circle.json", diagram_to_json(circle()));
  corpus.write("diagrams/theta.json", diagram_to_json(theta()));
  corpus.write("diagrams/kink_plus.json", diagram_to_json(kink(1)));

  // R2: slide a circle over another, then undo it.
  corpus.move_pair("r2_add_pos", two_circles(), r2_add_spec(0, 1, 1));
  corpus.move_pair("r2_add_neg", two_circles(), r2_add_spec(0, 1, -1));
  {
    const Diagram clasp = apply_move(two_circles(), r2_add_spec(0, 1, 1));
    MoveSpec undo;
    undo.move = MoveKind::R2Remove;
    undo.over = 0;
    undo.middle = 2;
    corpus.move_pair("r2_remove", clasp, undo);
  }

  // R3 in both chirality families.
  corpus.move_pair("r3_near", r3_before(false, 1, 1), r3_spec("under_mid_first", {0, 2, 3}));
  corpus.move_pair("r3_far", r3_before(true, 1, -1), r3_spec("under_mid_first", {0, 2, 3}));

  // R5: strand under the legs of a vertex, both orientations and both
  // directions.
  corpus.move_pair("r5_merge_legs_pos", theta_with_strand_under(1),
                   slide_spec(MoveKind::R5, "legs_to_stem", 0, {0, 1}));
  corpus.move_pair("r5_split_legs_neg", theta_with_strand_under(-1),
                   slide_spec(MoveKind::R5, "legs_to_stem", 1, {0, 1}));
  {
    const Diagram at_stem =
        apply_move(theta_with_strand_under(1), slide_spec(MoveKind::R5, "legs_to_stem", 0, {0, 1}));
    corpus.move_pair("r5_merge_stem_pos", at_stem,
                     slide_spec(MoveKind::R5, "stem_to_legs", 0, {0}));
  }

  // R6: strand over the vertex.
  corpus.move_pair("r6_merge_legs_pos", theta_with_strand_over(VertexKind::Merge, 1),
                   slide_spec(MoveKind::R6, "legs_to_stem", 0, {0, 1}));
  corpus.move_pair("r6_split_legs_neg", theta_with_strand_over(VertexKind::Split, -1),
                   slide_spec(MoveKind::R6, "legs_to_stem", 0, {0, 1}));
  {
    const Diagram at_stem = apply_move(theta_with_strand_over(VertexKind::Merge, 1),
                                       slide_spec(MoveKind::R6, "legs_to_stem", 0, {0, 1}));
    corpus.move_pair("r6_merge_stem_pos", at_stem,
                     slide_spec(MoveKind::R6, "stem_to_legs", 0, {0}));
  }

  // Connected sums; the kinked pairs realize the commutator bridge colors.
  corpus.write("sums/circle_circle.json",
               diagram_to_json(connected_sum(circle(), circle(), 0, 0)));
  corpus.write("sums/theta_theta.json", diagram_to_json(connected_sum(theta(), theta(), 0, 0)));
  std::map<std::string, Diagram> kink_sums;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const std::string name = std::string(s1 > 0 ? "p" : "m") + (s2 > 0 ? "p" : "m");
      kink_sums["kink_" + name] = connected_sum(kink(s1), kink(s2), 0, 0);
      corpus.write("sums/kink_" + name + ".json", diagram_to_json(kink_sums["kink_" + name]));
    }
  }

  // Count the kinked sums with X x (G |x G); a pair realizing the reference
  // counts 1458 / 1242 is published under fig9/.
  const MultipleGroupRack semi = semidirect_mgr(family, full_subgroup(s3));
  std::map<std::string, std::uint64_t> counts;
  for (const auto& [name, d] : kink_sums) {
    counts[name] = count_colorings(d, semi);
    std::cout << name << ": " << counts[name] << "\n";
  }
  std::string d1_name, d2_name;
  for (const auto& [name, c] : counts) {
    if (c == 1458 && d1_name.empty()) d1_name = name;
    if (c == 1242 && d2_name.empty()) d2_name = name;
  }
  if (!d1_name.empty() && !d2_name.empty()) {
    corpus.write("fig9/d1.json", diagram_to_json(kink_sums[d1_name]));
    corpus.write("fig9/d2.json", diagram_to_json(kink_sums[d2_name]));
    std::cout << "fig9: d1 = " << d1_name << ", d2 = " << d2_name << "\n";
  } else {
    std::cout << "fig9: no candidate pair matches the reference counts\n";
  }

  std::cout << "corpus written to " << corpus.root.string() << "\n";
  return 0;
}
