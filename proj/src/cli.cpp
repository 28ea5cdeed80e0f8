#include "mgrack/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mgrack/coloring.hpp"
#include "mgrack/json_io.hpp"
#include "mgrack/kernels.hpp"

namespace mgrack {

namespace {

namespace fs = std::filesystem;

ojson version_json() {
  ojson v;
  v["mgrack"] = "0.1.0";
  ojson schemas;
  for (const char* kind : {"group", "rack", "gfamily", "mgr", "diagram", "move", "cocycle"}) {
    schemas[kind] = kSchemaVersion;
  }
  v["schemas"] = std::move(schemas);
  v["kernel"] = kernels::isa_name(kernels::active_isa());
  return v;
}

ojson mgr_violation_json(const MgrViolation& v) {
  ojson out;
  out["axiom"] = v.axiom;
  out["elements"] = v.elements;
  out["message"] = v.message;
  return out;
}

int cmd_verify(const fs::path& path, std::ostream& out) {
  const json j = load_json_file(path);
  const FileKind kind = detect_kind(j);
  ojson report;
  report["kind"] = file_kind_name(kind);
  bool ok = false;
  switch (kind) {
    case FileKind::Group: {
      // Parse loosely so that verification, not schema validation, judges
      // the table.
      if (!j.contains("order") || !j.contains("table") || !j.contains("identity")) {
        throw FormatError("group: needs order, table and identity");
      }
      const Elt order = j["order"].get<Elt>();
      if (order <= 0) throw FormatError("group.order must be positive");
      std::vector<Elt> table;
      for (const auto& row : j["table"]) {
        if (row.size() != static_cast<std::size_t>(order)) {
          throw FormatError("group.table row length mismatch");
        }
        for (const auto& v : row) table.push_back(v.get<Elt>());
      }
      if (table.size() != static_cast<std::size_t>(order) * order) {
        throw FormatError("group.table dimension mismatch");
      }
      const auto r = verify_group_axioms_report(table, order, j["identity"].get<Elt>());
      ok = r.ok;
      if (!r.ok) {
        ojson v;
        v["axiom"] = r.violation->axiom;
        v["elements"] = std::vector<Elt>{r.violation->a, r.violation->b, r.violation->c};
        v["message"] = r.violation->message;
        report["violation"] = std::move(v);
      }
      break;
    }
    case FileKind::Rack: {
      const Rack r = rack_from_json(j);
      ok = verify_rack_axioms(r);
      report["quandle"] = ok && is_quandle(r);
      break;
    }
    case FileKind::GFamily: {
      const GFamilyOfRacks f = gfamily_from_json(j, path.parent_path());
      ok = verify_gfamily_axioms(f);
      break;
    }
    case FileKind::Mgr: {
      const MultipleGroupRack m = mgr_from_json(j, path.parent_path());
      const MgrReport r = verify_mgr_axioms(m);
      ok = r.ok;
      report["elements"] = m.size();
      report["components"] = static_cast<Elt>(m.components.size());
      if (r.ok) report["mcq"] = is_mcq(m);
      if (!r.ok) report["violation"] = mgr_violation_json(*r.first_violation);
      break;
    }
    case FileKind::Diagram: {
      const Diagram d = diagram_from_json(j);
      const DiagramReport r = validate(d);
      ok = r.ok;
      if (!r.ok) report["violation"] = r.message;
      break;
    }
    default:
      throw FormatError(path.string() + ": unrecognized structure file");
  }
  report["ok"] = ok;
  out << dump(report);
  return ok ? kExitOk : kExitViolation;
}

std::vector<Elt> parse_normal_spec(const std::string& spec, const FiniteGroup& g) {
  if (spec == "full") {
    std::vector<Elt> all(g.order());
    for (Elt i = 0; i < g.order(); ++i) all[i] = i;
    return all;
  }
  if (spec == "trivial") return {g.identity()};
  std::vector<Elt> members;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      members.push_back(static_cast<Elt>(std::stol(item)));
    } catch (const std::exception&) {
      throw FormatError("--normal must be full, trivial, or a comma list of element indices");
    }
  }
  if (members.empty()) throw FormatError("--normal lists no elements");
  return members;
}

int write_built_mgr(const MultipleGroupRack& m, const fs::path& out_path, std::ostream& out) {
  write_json_file(out_path, mgr_to_json(m));
  ojson report;
  report["kind"] = "mgr";
  report["elements"] = m.size();
  report["components"] = static_cast<Elt>(m.components.size());
  report["out"] = out_path.string();
  out << dump(report);
  return kExitOk;
}

Diagram load_diagram_checked(const fs::path& path) {
  const Diagram d = diagram_from_json(load_json_file(path));
  const DiagramReport r = validate(d);
  if (!r.ok) throw FormatError(path.string() + ": " + r.message);
  return d;
}

MultipleGroupRack load_mgr(const fs::path& path) {
  return mgr_from_json(load_json_file(path), path.parent_path());
}

int cmd_count(const fs::path& diagram_path, const fs::path& mgr_path, int jobs,
              std::ostream& out) {
  const Diagram d = load_diagram_checked(diagram_path);
  const MultipleGroupRack m = load_mgr(mgr_path);
  const std::uint64_t count = count_colorings(d, m, jobs);
  out << count << "\n";
  ojson report;
  report["count"] = count;
  report["arcs"] = static_cast<Elt>(d.arcs.size());
  report["elements"] = m.size();
  report["jobs"] = jobs;
  out << dump(report);
  return kExitOk;
}

int cmd_star(const fs::path& diagram_path, const fs::path& mgr_path, std::ostream& out) {
  const Diagram d = load_diagram_checked(diagram_path);
  if (!d.marked_arc) throw FormatError(diagram_path.string() + ": no marked arc");
  const MultipleGroupRack m = load_mgr(mgr_path);
  const StarReport r = check_property_star(d, m);
  ojson report;
  report["holds"] = r.holds;
  if (r.witness) {
    ojson w;
    w["marked_arc"] = *d.marked_arc;
    const Elt colour = r.witness->by_arc[d.arc_pos(*d.marked_arc)];
    w["marked_color"] = colour;
    w["marked_label"] = m.label(colour);
    w["assignment"] = r.witness->by_arc;
    report["witness"] = std::move(w);
  }
  out << dump(report);
  return r.holds ? kExitOk : kExitStarFalse;
}

int cmd_move(const fs::path& diagram_path, const fs::path& move_path, const fs::path& out_path,
             std::ostream& out) {
  const Diagram d = load_diagram_checked(diagram_path);
  const MoveSpec spec = move_from_json(load_json_file(move_path));
  const Diagram rewritten = apply_move(d, spec);
  write_json_file(out_path, diagram_to_json(rewritten));
  ojson report;
  report["move"] = move_kind_name(spec.move);
  report["arcs"] = static_cast<Elt>(rewritten.arcs.size());
  report["out"] = out_path.string();
  out << dump(report);
  return kExitOk;
}

std::vector<fs::path> sorted_entries(const fs::path& dir) {
  std::vector<fs::path> entries;
  if (!fs::exists(dir)) return entries;
  for (const auto& e : fs::directory_iterator(dir)) entries.push_back(e.path());
  std::sort(entries.begin(), entries.end());
  return entries;
}

int cmd_suite(const fs::path& dir, int jobs, std::ostream& out, std::ostream& err) {
  const fs::path gfamily_path = dir / "gfamily" / "z3s3.json";
  if (!fs::exists(gfamily_path)) {
    err << "suite: missing " << gfamily_path.string() << "\n";
    return kExitUsage;
  }
  const GFamilyOfRacks family =
      gfamily_from_json(load_json_file(gfamily_path), gfamily_path.parent_path());
  const MultipleGroupRack assoc = associated_mgr(family);
  const MultipleGroupRack semi = semidirect_mgr(family, full_subgroup(family.group));

  int fixtures = 0;
  int checks = 0;
  ojson failures = ojson::array();
  auto fail = [&](const fs::path& fixture, const std::string& check, const std::string& detail) {
    ojson f;
    f["fixture"] = fixture.string();
    f["check"] = check;
    f["detail"] = detail;
    failures.push_back(std::move(f));
  };

  for (const fs::path& pair_dir : sorted_entries(dir / "moves")) {
    if (!fs::is_directory(pair_dir)) continue;
    ++fixtures;
    Diagram before, after;
    MoveSpec spec;
    try {
      before = load_diagram_checked(pair_dir / "before.json");
      after = load_diagram_checked(pair_dir / "after.json");
      spec = move_from_json(load_json_file(pair_dir / "move.json"));
    } catch (const std::exception& e) {
      ++checks;
      fail(pair_dir, "load", e.what());
      continue;
    }
    ++checks;
    try {
      const Diagram applied = apply_move(before, spec);
      if (!isomorphic(applied, after)) {
        fail(pair_dir, "rewrite", "apply_move(before) is not isomorphic to after");
      }
    } catch (const MoveError& e) {
      fail(pair_dir, "rewrite", e.what());
    }
    ++checks;
    if (!assert_move_invariance(before, after, assoc, jobs)) {
      fail(pair_dir, "invariance/associated", "coloring counts differ");
    }
    ++checks;
    if (!assert_move_invariance(before, after, semi, jobs)) {
      fail(pair_dir, "invariance/semidirect", "coloring counts differ");
    }
  }

  for (const fs::path& sum_path : sorted_entries(dir / "sums")) {
    if (sum_path.extension() != ".json") continue;
    ++fixtures;
    ++checks;
    try {
      const Diagram d = load_diagram_checked(sum_path);
      if (!d.marked_arc) {
        fail(sum_path, "marked", "connected-sum fixture lacks a marked arc");
        continue;
      }
      const StarReport r = check_property_star(d, assoc);
      if (r.holds) {
        fail(sum_path, "bridge-identity/associated",
             "a coloring gives the bridge a non-identity color");
      }
    } catch (const std::exception& e) {
      fail(sum_path, "load", e.what());
    }
  }

  if (fixtures == 0) {
    err << "suite: no fixtures under " << dir.string() << "\n";
    return kExitUsage;
  }
  ojson report;
  report["fixtures"] = fixtures;
  report["checks"] = checks;
  report["failures"] = failures;
  out << dump(report);
  return failures.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multiple group racks and coloring invariants of spatial surface diagrams"};
  app.set_version_flag("--version", [] { return dump(version_json()); });

  std::string structure_path, gfamily_path, diagram_path, move_path, cocycle_path;
  std::string out_path, normal_spec = "full", fixtures_dir;
  int jobs = 1;

  auto* verify = app.add_subcommand("verify", "verify the axioms of a structure file");
  verify->add_option("--structure", structure_path, "group/rack/gfamily/mgr/diagram file")
      ->required();

  auto* build = app.add_subcommand("build", "build a multiple group rack");
  auto* assoc = build->add_subcommand("assoc", "associated multiple group rack of a G-family");
  assoc->add_option("--gfamily", gfamily_path)->required();
  assoc->add_option("--out", out_path)->required();
  auto* semidirect =
      build->add_subcommand("semidirect", "semidirect multiple group rack over a normal subgroup");
  semidirect->add_option("--gfamily", gfamily_path)->required();
  semidirect->add_option("--normal", normal_spec,
                         "full, trivial, or comma-separated element indices");
  semidirect->add_option("--out", out_path)->required();
  auto* abelext = build->add_subcommand("abelext", "abelian extension by a 2-cocycle");
  abelext->add_option("--structure", structure_path)->required();
  abelext->add_option("--cocycle", cocycle_path)->required();
  abelext->add_option("--out", out_path)->required();
  build->require_subcommand(1);

  auto* count = app.add_subcommand("count", "count colorings of a diagram");
  count->add_option("--diagram", diagram_path)->required();
  count->add_option("--structure", structure_path)->required();
  count->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* star = app.add_subcommand("star", "bridge-arc property of a connected sum");
  star->add_option("--diagram", diagram_path)->required();
  star->add_option("--structure", structure_path)->required();

  auto* move = app.add_subcommand("move", "apply a local move at an addressed site");
  move->add_option("--diagram", diagram_path)->required();
  move->add_option("--move", move_path)->required();
  move->add_option("--out", out_path)->required();

  auto* suite = app.add_subcommand("suite", "run the bundled fixture corpus");
  suite->add_option("--fixtures", fixtures_dir)->required();
  suite->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  app.require_subcommand(0, 1);

  std::vector<const char*> argv;
  argv.push_back("mgrack");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(structure_path, out);
    if (assoc->parsed()) {
      const GFamilyOfRacks f =
          gfamily_from_json(load_json_file(gfamily_path), fs::path(gfamily_path).parent_path());
      return write_built_mgr(associated_mgr(f), out_path, out);
    }
    if (semidirect->parsed()) {
      const GFamilyOfRacks f =
          gfamily_from_json(load_json_file(gfamily_path), fs::path(gfamily_path).parent_path());
      const SubgroupWitness n =
          make_subgroup_witness(f.group, parse_normal_spec(normal_spec, f.group));
      return write_built_mgr(semidirect_mgr(f, n), out_path, out);
    }
    if (abelext->parsed()) {
      const MultipleGroupRack m = load_mgr(structure_path);
      const CocycleData c =
          cocycle_from_json(load_json_file(cocycle_path), fs::path(cocycle_path).parent_path());
      const auto result = abelian_extension(m, c);
      if (const auto* invalid = std::get_if<CocycleInvalid>(&result)) {
        ojson report;
        report["kind"] = "cocycle";
        report["ok"] = false;
        report["violation"] = mgr_violation_json(invalid->violation);
        out << dump(report);
        return kExitViolation;
      }
      return write_built_mgr(std::get<MultipleGroupRack>(result), out_path, out);
    }
    if (count->parsed()) return cmd_count(diagram_path, structure_path, jobs, out);
    if (star->parsed()) return cmd_star(diagram_path, structure_path, out);
    if (move->parsed()) return cmd_move(diagram_path, move_path, out_path, out);
    if (suite->parsed()) return cmd_suite(fixtures_dir, jobs, out, err);
    err << app.help();
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MoveError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mgrack
