#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "baire/gallery.hpp"
#include "baire/pointclass.hpp"

namespace baire {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// Input problems, with the JSON path of the offending field.
struct SchemaError : std::invalid_argument {
  std::string path;
  SchemaError(std::string path, const std::string& msg)
      : std::invalid_argument(path + ": " + msg), path(std::move(path)) {}
};

Point parse_point(const PointSpace& space, const std::string& text);
std::string format_point(const PointSpace& space, const Point& p);

// {"explicit_rows": {"m": {"prefix": "101", "period": "0"}}, "default_row": {...}}
Json grid_to_json(const CantorGridPoint& g);
CantorGridPoint grid_from_json(const Json& j, const std::string& path);

Json set_to_json(const PointSpace& space, const ClosedSet& s);
ClosedSet set_from_json(const PointSpace& space, const Json& j, const std::string& path);

Json space_to_json(const PointSpace& space);
PointSpace space_from_json(const Json& j, const std::string& path);

Json config_to_json(const CheckConfig& cfg);
// Missing fields keep their values from base.
CheckConfig config_from_json(const Json& j, const std::string& path, CheckConfig base = CheckConfig::defaults());

Json witness_to_json(const MultiMap& F, const Witness& w);
Witness witness_from_json(const MultiMap& F, const Json& j, const std::string& path);
Json verdict_to_json(const MultiMap& F, const Verdict& v);
Json classification_to_json(const Classification& c);

// Proof-derived witness for a gallery point, when the map has one for the mode.
using WitnessGen = std::function<std::optional<Witness>(const Point& x, Mode mode, const CheckConfig& cfg)>;

struct BuiltMap {
  MultiMap map;
  ProbeGen probes;
  WitnessGen witness;  // may be empty
  std::optional<CheckConfig> preferred;  // used when an instance gives no config
};

// {"kind": "f1" | "f2" | "dense_split" | "spike" | "tabular" | "extend" | "compose" | "closure", ...}
BuiltMap map_from_json(const Json& j, const std::string& path);

struct Instance {
  Json spec;
  BuiltMap built;
  std::vector<Point> points;
  Mode mode = Mode::Plain;
  CheckConfig cfg = CheckConfig::defaults();
};

// {multimap, points, mode, config, probe_spec}; config fields override the map's preferred config
Instance instance_from_json(const Json& j);

// FNV-1a over the canonical dump.
std::string digest(const Json& j);
std::string digest(const std::string& text);

}  // namespace baire
