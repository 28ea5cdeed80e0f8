#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mgrack/diagram.hpp"
#include "mgrack/finite_group.hpp"
#include "mgrack/mgr.hpp"
#include "mgrack/moves.hpp"
#include "mgrack/rack.hpp"

namespace mgrack {

// File formats. Parsers reject unknown fields; serializers emit a canonical
// field order so output is byte-stable.
//
//   group:   {"order": n, "table": [[...]], "identity": i, "labels": [...]?}
//   rack:    {"size": n, "op": [[...]]}
//   gfamily: {"carrier": n, "group": <group or path>, "ops": {"<g>": [[...]],
//             ..., "default": [[...]]}}  -- any index not listed uses the
//             "default" table, which is required as soon as one is omitted
//   mgr:     {"components": [<group or path>, ...], "star": [[...]],
//             "labels": [...]?}          -- element (lambda, i) has global
//             index offset_lambda + i, components in listed order
//   diagram: {"arcs": [{"id": k, "closed": b}, ...], "crossings": [...],
//             "vertices": [...], "marked_arc": k?}
//   move:    {"move": "R5", "variant": "...", "site": {...}}
//   cocycle: {"target": <group or path>, "f_rack": [[...]],
//             "f_group": [[[...]], ...]}

inline constexpr int kSchemaVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

enum class FileKind { Group, Rack, GFamily, Mgr, Diagram, Move, Cocycle, Unknown };

FileKind detect_kind(const json& j);
std::string file_kind_name(FileKind kind);

FiniteGroup group_from_json(const json& j, const std::filesystem::path& base_dir = {});
ojson group_to_json(const FiniteGroup& g);

Rack rack_from_json(const json& j);
ojson rack_to_json(const Rack& r);

GFamilyOfRacks gfamily_from_json(const json& j, const std::filesystem::path& base_dir = {});
ojson gfamily_to_json(const GFamilyOfRacks& f);

MultipleGroupRack mgr_from_json(const json& j, const std::filesystem::path& base_dir = {});
ojson mgr_to_json(const MultipleGroupRack& m);

Diagram diagram_from_json(const json& j);
ojson diagram_to_json(const Diagram& d);

MoveSpec move_from_json(const json& j);
ojson move_to_json(const MoveSpec& spec);

CocycleData cocycle_from_json(const json& j, const std::filesystem::path& base_dir = {});
ojson cocycle_to_json(const CocycleData& c);

// Text round trip used by the CLI and fixtures: one canonical line + '\n'.
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);
std::string dump(const ojson& j);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const ojson& j);

}  // namespace mgrack
