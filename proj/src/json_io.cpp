#include "mgrack/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mgrack {

namespace {

void expect_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw FormatError(what + ": expected an object");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw FormatError(what + ": unknown field \"" + it.key() + "\"");
    }
  }
}

const json& require_field(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(what + ": missing field \"" + key + "\"");
  return *it;
}

Elt require_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw FormatError(what + ": expected an integer");
  return j.get<Elt>();
}

std::vector<Elt> parse_matrix(const json& j, Elt rows, Elt cols, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows)) {
    throw FormatError(what + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<Elt> flat;
  flat.reserve(static_cast<std::size_t>(rows) * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      throw FormatError(what + ": expected rows of length " + std::to_string(cols));
    }
    for (const auto& v : row) flat.push_back(require_int(v, what));
  }
  return flat;
}

ojson matrix_to_json(const std::vector<Elt>& flat, Elt rows, Elt cols) {
  ojson out = ojson::array();
  for (Elt r = 0; r < rows; ++r) {
    ojson row = ojson::array();
    for (Elt c = 0; c < cols; ++c) row.push_back(flat[static_cast<std::size_t>(r) * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> parse_labels(const json& j, Elt count, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(count)) {
    throw FormatError(what + ": labels must list one string per element");
  }
  std::vector<std::string> labels;
  labels.reserve(count);
  for (const auto& v : j) {
    if (!v.is_string()) throw FormatError(what + ": labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  return labels;
}

// A group reference is an inline group object or a path string relative to
// the referencing file.
FiniteGroup group_or_ref(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path path = base_dir / j.get<std::string>();
    return group_from_json(load_json_file(path), path.parent_path());
  }
  return group_from_json(j, base_dir);
}

}  // namespace

FileKind detect_kind(const json& j) {
  if (!j.is_object()) return FileKind::Unknown;
  if (j.contains("order") && j.contains("table")) return FileKind::Group;
  if (j.contains("size") && j.contains("op")) return FileKind::Rack;
  if (j.contains("carrier") && j.contains("ops")) return FileKind::GFamily;
  if (j.contains("components") && j.contains("star")) return FileKind::Mgr;
  if (j.contains("arcs")) return FileKind::Diagram;
  if (j.contains("move")) return FileKind::Move;
  if (j.contains("target") && j.contains("f_rack")) return FileKind::Cocycle;
  return FileKind::Unknown;
}

std::string file_kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::Group:
      return "group";
    case FileKind::Rack:
      return "rack";
    case FileKind::GFamily:
      return "gfamily";
    case FileKind::Mgr:
      return "mgr";
    case FileKind::Diagram:
      return "diagram";
    case FileKind::Move:
      return "move";
    case FileKind::Cocycle:
      return "cocycle";
    default:
      return "unknown";
  }
}

FiniteGroup group_from_json(const json& j, const std::filesystem::path&) {
  expect_object(j, "group");
  reject_unknown(j, {"order", "table", "identity", "labels"}, "group");
  const Elt order = require_int(require_field(j, "order", "group"), "group.order");
  if (order <= 0) throw FormatError("group.order must be positive");
  std::vector<Elt> table = parse_matrix(require_field(j, "table", "group"), order, order,
                                        "group.table");
  const Elt identity = require_int(require_field(j, "identity", "group"), "group.identity");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = parse_labels(j["labels"], order, "group");
  try {
    return FiniteGroup(order, std::move(table), identity, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("group: ") + e.what());
  }
}

ojson group_to_json(const FiniteGroup& g) {
  ojson out;
  out["order"] = g.order();
  out["identity"] = g.identity();
  out["table"] = matrix_to_json(g.table(), g.order(), g.order());
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

Rack rack_from_json(const json& j) {
  expect_object(j, "rack");
  reject_unknown(j, {"size", "op"}, "rack");
  const Elt size = require_int(require_field(j, "size", "rack"), "rack.size");
  if (size <= 0) throw FormatError("rack.size must be positive");
  Rack r{size, parse_matrix(require_field(j, "op", "rack"), size, size, "rack.op")};
  for (Elt v : r.op) {
    if (v < 0 || v >= size) throw FormatError("rack.op entry out of range");
  }
  return r;
}

ojson rack_to_json(const Rack& r) {
  ojson out;
  out["size"] = r.size;
  out["op"] = matrix_to_json(r.op, r.size, r.size);
  return out;
}

GFamilyOfRacks gfamily_from_json(const json& j, const std::filesystem::path& base_dir) {
  expect_object(j, "gfamily");
  reject_unknown(j, {"carrier", "group", "ops"}, "gfamily");
  const Elt carrier = require_int(require_field(j, "carrier", "gfamily"), "gfamily.carrier");
  if (carrier <= 0) throw FormatError("gfamily.carrier must be positive");
  FiniteGroup group = group_or_ref(require_field(j, "group", "gfamily"), base_dir);
  const json& ops = require_field(j, "ops", "gfamily");
  expect_object(ops, "gfamily.ops");

  std::vector<std::vector<Elt>> tables(group.order());
  std::vector<char> present(group.order(), 0);
  std::vector<Elt> fallback;
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    if (it.key() == "default") {
      fallback = parse_matrix(it.value(), carrier, carrier, "gfamily.ops.default");
      continue;
    }
    Elt g;
    try {
      std::size_t used = 0;
      g = static_cast<Elt>(std::stol(it.key(), &used));
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("gfamily.ops: key \"" + it.key() +
                        "\" is neither an element index nor \"default\"");
    }
    if (g < 0 || g >= group.order()) {
      throw FormatError("gfamily.ops: index " + it.key() + " out of range");
    }
    tables[g] = parse_matrix(it.value(), carrier, carrier, "gfamily.ops." + it.key());
    present[g] = 1;
  }
  for (Elt g = 0; g < group.order(); ++g) {
    if (!present[g]) {
      if (fallback.empty()) {
        throw FormatError("gfamily.ops: index " + std::to_string(g) +
                          " omitted and no \"default\" table given");
      }
      tables[g] = fallback;
    }
  }
  for (const auto& t : tables) {
    for (Elt v : t) {
      if (v < 0 || v >= carrier) throw FormatError("gfamily.ops entry out of range");
    }
  }
  return GFamilyOfRacks{carrier, std::move(group), std::move(tables)};
}

ojson gfamily_to_json(const GFamilyOfRacks& f) {
  ojson out;
  out["carrier"] = f.carrier;
  out["group"] = group_to_json(f.group);
  ojson ops;
  for (Elt g = 0; g < f.group.order(); ++g) {
    ops[std::to_string(g)] = matrix_to_json(f.ops[g], f.carrier, f.carrier);
  }
  out["ops"] = std::move(ops);
  return out;
}

MultipleGroupRack mgr_from_json(const json& j, const std::filesystem::path& base_dir) {
  expect_object(j, "mgr");
  reject_unknown(j, {"components", "star", "labels"}, "mgr");
  const json& comps = require_field(j, "components", "mgr");
  if (!comps.is_array() || comps.empty()) {
    throw FormatError("mgr.components must be a nonempty array");
  }
  std::vector<FiniteGroup> components;
  Elt n = 0;
  for (const auto& c : comps) {
    components.push_back(group_or_ref(c, base_dir));
    n += components.back().order();
  }
  std::vector<Elt> star = parse_matrix(require_field(j, "star", "mgr"), n, n, "mgr.star");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = parse_labels(j["labels"], n, "mgr");
  try {
    return MultipleGroupRack::from_components(std::move(components), std::move(star),
                                              std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("mgr: ") + e.what());
  }
}

ojson mgr_to_json(const MultipleGroupRack& m) {
  ojson out;
  ojson comps = ojson::array();
  for (const FiniteGroup& g : m.components) comps.push_back(group_to_json(g));
  out["components"] = std::move(comps);
  out["star"] = matrix_to_json(m.star, m.size(), m.size());
  if (!m.labels.empty()) out["labels"] = m.labels;
  return out;
}

Diagram diagram_from_json(const json& j) {
  expect_object(j, "diagram");
  reject_unknown(j, {"arcs", "crossings", "vertices", "marked_arc"}, "diagram");
  Diagram d;
  const json& arcs = require_field(j, "arcs", "diagram");
  if (!arcs.is_array()) throw FormatError("diagram.arcs must be an array");
  for (const auto& a : arcs) {
    expect_object(a, "diagram.arcs entry");
    reject_unknown(a, {"id", "closed"}, "diagram.arcs entry");
    const Elt id = require_int(require_field(a, "id", "diagram.arcs"), "arc.id");
    const json& closed = require_field(a, "closed", "diagram.arcs");
    if (!closed.is_boolean()) throw FormatError("arc.closed must be a boolean");
    d.arcs.push_back({id, closed.get<bool>()});
  }
  if (j.contains("crossings")) {
    if (!j["crossings"].is_array()) throw FormatError("diagram.crossings must be an array");
    for (const auto& c : j["crossings"]) {
      expect_object(c, "crossing");
      reject_unknown(c, {"over", "under_in", "under_out", "sign"}, "crossing");
      d.crossings.push_back(
          {require_int(require_field(c, "over", "crossing"), "crossing.over"),
           require_int(require_field(c, "under_in", "crossing"), "crossing.under_in"),
           require_int(require_field(c, "under_out", "crossing"), "crossing.under_out"),
           require_int(require_field(c, "sign", "crossing"), "crossing.sign")});
    }
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw FormatError("diagram.vertices must be an array");
    for (const auto& v : j["vertices"]) {
      expect_object(v, "vertex");
      reject_unknown(v, {"kind", "left", "right", "stem"}, "vertex");
      const json& kind = require_field(v, "kind", "vertex");
      if (!kind.is_string() ||
          (kind.get<std::string>() != "merge" && kind.get<std::string>() != "split")) {
        throw FormatError("vertex.kind must be \"merge\" or \"split\"");
      }
      d.vertices.push_back(
          {kind.get<std::string>() == "merge" ? VertexKind::Merge : VertexKind::Split,
           require_int(require_field(v, "left", "vertex"), "vertex.left"),
           require_int(require_field(v, "right", "vertex"), "vertex.right"),
           require_int(require_field(v, "stem", "vertex"), "vertex.stem")});
    }
  }
  if (j.contains("marked_arc")) {
    d.marked_arc = require_int(j["marked_arc"], "diagram.marked_arc");
  }
  return d;
}

ojson diagram_to_json(const Diagram& d) {
  ojson out;
  ojson arcs = ojson::array();
  for (const Arc& a : d.arcs) {
    ojson arc;
    arc["id"] = a.id;
    arc["closed"] = a.closed;
    arcs.push_back(std::move(arc));
  }
  out["arcs"] = std::move(arcs);
  ojson crossings = ojson::array();
  for (const Crossing& c : d.crossings) {
    ojson x;
    x["over"] = c.over;
    x["under_in"] = c.under_in;
    x["under_out"] = c.under_out;
    x["sign"] = c.sign;
    crossings.push_back(std::move(x));
  }
  out["crossings"] = std::move(crossings);
  ojson vertices = ojson::array();
  for (const Vertex& v : d.vertices) {
    ojson x;
    x["kind"] = v.kind == VertexKind::Merge ? "merge" : "split";
    x["left"] = v.left;
    x["right"] = v.right;
    x["stem"] = v.stem;
    vertices.push_back(std::move(x));
  }
  out["vertices"] = std::move(vertices);
  if (d.marked_arc) out["marked_arc"] = *d.marked_arc;
  return out;
}

MoveSpec move_from_json(const json& j) {
  expect_object(j, "move");
  reject_unknown(j, {"move", "variant", "site"}, "move");
  const json& kind = require_field(j, "move", "move");
  if (!kind.is_string()) throw FormatError("move.move must be a string");
  const std::string name = kind.get<std::string>();
  MoveSpec spec;
  if (name == "R2_ADD") {
    spec.move = MoveKind::R2Add;
  } else if (name == "R2_REMOVE") {
    spec.move = MoveKind::R2Remove;
  } else if (name == "R3") {
    spec.move = MoveKind::R3;
  } else if (name == "R5") {
    spec.move = MoveKind::R5;
  } else if (name == "R6") {
    spec.move = MoveKind::R6;
  } else {
    throw FormatError("move.move must be one of R2_ADD, R2_REMOVE, R3, R5, R6");
  }
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) throw FormatError("move.variant must be a string");
    spec.variant = j["variant"].get<std::string>();
  }
  const json& site = require_field(j, "site", "move");
  expect_object(site, "move.site");
  switch (spec.move) {
    case MoveKind::R2Add:
      reject_unknown(site, {"over", "under", "sign"}, "move.site");
      spec.over = require_int(require_field(site, "over", "move.site"), "site.over");
      spec.under = require_int(require_field(site, "under", "move.site"), "site.under");
      spec.sign = require_int(require_field(site, "sign", "move.site"), "site.sign");
      break;
    case MoveKind::R2Remove:
      reject_unknown(site, {"over", "middle"}, "move.site");
      spec.over = require_int(require_field(site, "over", "move.site"), "site.over");
      spec.middle = require_int(require_field(site, "middle", "move.site"), "site.middle");
      break;
    case MoveKind::R3:
      reject_unknown(site, {"crossings"}, "move.site");
      for (const auto& v : require_field(site, "crossings", "move.site")) {
        spec.crossings.push_back(require_int(v, "site.crossings"));
      }
      break;
    case MoveKind::R5:
    case MoveKind::R6:
      reject_unknown(site, {"vertex", "crossings"}, "move.site");
      spec.vertex = require_int(require_field(site, "vertex", "move.site"), "site.vertex");
      for (const auto& v : require_field(site, "crossings", "move.site")) {
        spec.crossings.push_back(require_int(v, "site.crossings"));
      }
      break;
  }
  return spec;
}

ojson move_to_json(const MoveSpec& spec) {
  ojson out;
  out["move"] = move_kind_name(spec.move);
  if (!spec.variant.empty()) out["variant"] = spec.variant;
  ojson site;
  switch (spec.move) {
    case MoveKind::R2Add:
      site["over"] = spec.over;
      site["under"] = spec.under;
      site["sign"] = spec.sign;
      break;
    case MoveKind::R2Remove:
      site["over"] = spec.over;
      site["middle"] = spec.middle;
      break;
    case MoveKind::R3:
      site["crossings"] = spec.crossings;
      break;
    case MoveKind::R5:
    case MoveKind::R6:
      site["vertex"] = spec.vertex;
      site["crossings"] = spec.crossings;
      break;
  }
  out["site"] = std::move(site);
  return out;
}

CocycleData cocycle_from_json(const json& j, const std::filesystem::path& base_dir) {
  expect_object(j, "cocycle");
  reject_unknown(j, {"target", "f_rack", "f_group"}, "cocycle");
  CocycleData c;
  c.target = group_or_ref(require_field(j, "target", "cocycle"), base_dir);
  const json& f_rack = require_field(j, "f_rack", "cocycle");
  if (!f_rack.is_array() || f_rack.empty()) {
    throw FormatError("cocycle.f_rack must be a nonempty matrix");
  }
  const Elt n = static_cast<Elt>(f_rack.size());
  c.f_rack = parse_matrix(f_rack, n, n, "cocycle.f_rack");
  const json& f_group = require_field(j, "f_group", "cocycle");
  if (!f_group.is_array()) throw FormatError("cocycle.f_group must be an array of matrices");
  for (const auto& t : f_group) {
    if (!t.is_array() || t.empty()) throw FormatError("cocycle.f_group entries must be matrices");
    const Elt sz = static_cast<Elt>(t.size());
    c.f_group.push_back(parse_matrix(t, sz, sz, "cocycle.f_group"));
  }
  return c;
}

ojson cocycle_to_json(const CocycleData& c) {
  ojson out;
  out["target"] = group_to_json(c.target);
  Elt rows = 0;
  while (static_cast<std::size_t>(rows) * rows < c.f_rack.size()) ++rows;
  out["f_rack"] = matrix_to_json(c.f_rack, rows, rows);
  ojson groups = ojson::array();
  for (const auto& t : c.f_group) {
    Elt sz = 0;
    while (static_cast<std::size_t>(sz) * sz < t.size()) ++sz;
    groups.push_back(matrix_to_json(t, sz, sz));
  }
  out["f_group"] = std::move(groups);
  return out;
}

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("diagram parse: ") + e.what());
  }
  return diagram_from_json(j);
}

std::string serialize_diagram(const Diagram& d) { return dump(diagram_to_json(d)); }

std::string dump(const ojson& j) { return j.dump() + "\n"; }

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << dump(j);
}

}  // namespace mgrack
