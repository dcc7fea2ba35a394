#include "proxfield/scene_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace proxfield {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw SceneError(SceneError::Kind::Schema, "scene: " + what + " at " + path);
}

[[noreturn]] void invariant_error(const std::string& path, const std::string& what) {
  throw SceneError(SceneError::Kind::Invariant, "scene: " + what + " at " + path);
}

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) schema_error(path + "/" + key, "unknown key");
  }
}

double require_number(const json& object, const std::string& path, const char* key) {
  if (!object.contains(key)) schema_error(path + "/" + key, "missing required key");
  const json& v = object.at(key);
  if (!v.is_number()) schema_error(path + "/" + key, "expected a number");
  return v.get<double>();
}

Person parse_person(const json& node, const std::string& path) {
  if (!node.is_object()) schema_error(path, "expected an object");
  reject_unknown_keys(node, path,
                      {"position", "orientation_rad", "orientation_deg", "height_m", "speed_mps"});

  Person person;
  if (!node.contains("position")) schema_error(path + "/position", "missing required key");
  const json& pos = node.at("position");
  if (!pos.is_array() || pos.size() != 2 || !pos[0].is_number() || !pos[1].is_number()) {
    schema_error(path + "/position", "expected an array of two numbers");
  }
  person.position = {pos[0].get<double>(), pos[1].get<double>()};

  const bool has_rad = node.contains("orientation_rad");
  const bool has_deg = node.contains("orientation_deg");
  if (has_rad == has_deg) {
    schema_error(path, "exactly one of orientation_rad or orientation_deg is required");
  }
  if (has_rad) {
    person.orientation = require_number(node, path, "orientation_rad");
  } else {
    person.orientation = require_number(node, path, "orientation_deg") * std::numbers::pi / 180.0;
  }

  person.height = require_number(node, path, "height_m");
  if (!(person.height > 0.0)) {
    invariant_error(path + "/height_m",
                    "height_m must be positive (got " + node.at("height_m").dump() + ")");
  }
  if (node.contains("speed_mps")) {
    person.speed = require_number(node, path, "speed_mps");
    if (person.speed < 0.0) {
      invariant_error(path + "/speed_mps",
                      "speed_mps must be non-negative (got " + node.at("speed_mps").dump() + ")");
    }
  }
  return person;
}

RegionOverrides parse_region_overrides(const json& node, const std::string& path) {
  if (!node.is_object()) schema_error(path, "expected an object");
  RegionOverrides overrides;
  for (const auto& [name, entry] : node.items()) {
    const auto region = region_from_string(name);
    if (!region) schema_error(path + "/" + name, "unknown region");
    const std::string entry_path = path + "/" + name;
    if (!entry.is_object()) schema_error(entry_path, "expected an object");
    reject_unknown_keys(entry, entry_path, {"discomfort", "sigma_m", "relative_height"});
    RegionOverride o;
    if (entry.contains("discomfort")) {
      o.discomfort = require_number(entry, entry_path, "discomfort");
      if (*o.discomfort < 0.0 || *o.discomfort > 1.0) {
        invariant_error(entry_path + "/discomfort", "discomfort must lie in [0,1]");
      }
    }
    if (entry.contains("sigma_m")) {
      o.sigma = require_number(entry, entry_path, "sigma_m");
      if (!(*o.sigma > 0.0)) invariant_error(entry_path + "/sigma_m", "sigma_m must be positive");
    }
    if (entry.contains("relative_height")) {
      o.relative_height = require_number(entry, entry_path, "relative_height");
      if (!(*o.relative_height > 0.0 && *o.relative_height <= 1.0)) {
        invariant_error(entry_path + "/relative_height", "relative_height must lie in (0,1]");
      }
    }
    overrides[*region] = o;
  }
  return overrides;
}

ModelOptions parse_options(const json& node, const std::string& path) {
  if (!node.is_object()) schema_error(path, "expected an object");
  reject_unknown_keys(
      node, path, {"aggregation", "elongation", "top_mf", "zero_above_m", "region_overrides"});

  ModelOptions options;
  if (node.contains("aggregation")) {
    const json& v = node.at("aggregation");
    if (v == "max") {
      options.aggregation = Aggregation::Max;
    } else if (v == "sum-clamp") {
      options.aggregation = Aggregation::SumClamp;
    } else {
      schema_error(path + "/aggregation", "expected \"max\" or \"sum-clamp\"");
    }
  }
  if (node.contains("elongation")) {
    const json& v = node.at("elongation");
    if (v == "kirby-2v") {
      options.elongation = ElongationRule::Kirby2v;
    } else if (v == "none") {
      options.elongation = ElongationRule::None;
    } else {
      schema_error(path + "/elongation", "expected \"kirby-2v\" or \"none\"");
    }
  }
  if (node.contains("top_mf")) {
    const json& v = node.at("top_mf");
    if (v == "gaussian") {
      options.s_shaped_top = false;
    } else if (v == "s-shaped") {
      options.s_shaped_top = true;
    } else {
      schema_error(path + "/top_mf", "expected \"gaussian\" or \"s-shaped\"");
    }
  }
  if (node.contains("zero_above_m")) {
    options.zero_above = require_number(node, path, "zero_above_m");
    if (!(*options.zero_above > 0.0)) {
      invariant_error(path + "/zero_above_m", "zero_above_m must be positive");
    }
  }
  if (node.contains("region_overrides")) {
    options.region_overrides =
        parse_region_overrides(node.at("region_overrides"), path + "/region_overrides");
  }
  return options;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream msg;
    msg << "scene: JSON syntax error at line " << line << ", column " << column;
    throw SceneError(SceneError::Kind::Syntax, msg.str());
  }

  if (!doc.is_object()) schema_error("/", "expected a JSON object");
  reject_unknown_keys(doc, "", {"schema_version", "persons", "options"});

  if (!doc.contains("schema_version")) schema_error("/schema_version", "missing required key");
  if (!doc.at("schema_version").is_number_integer() || doc.at("schema_version").get<int>() != 1) {
    schema_error("/schema_version", "unsupported schema_version (expected 1)");
  }

  if (!doc.contains("persons")) schema_error("/persons", "missing required key");
  const json& persons_node = doc.at("persons");
  if (!persons_node.is_array()) schema_error("/persons", "expected an array");

  std::vector<Person> persons;
  persons.reserve(persons_node.size());
  for (std::size_t i = 0; i < persons_node.size(); ++i) {
    persons.push_back(parse_person(persons_node[i], "/persons/" + std::to_string(i)));
  }

  ModelOptions options;
  if (doc.contains("options")) options = parse_options(doc.at("options"), "/options");

  try {
    return Scene(std::move(persons), options);
  } catch (const std::invalid_argument& e) {
    throw SceneError(SceneError::Kind::Invariant, std::string("scene: ") + e.what());
  }
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scene file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read scene file: " + path.string());
  return parse_scene(buffer.str());
}

std::string serialize_scene(const Scene& scene) {
  json doc;
  doc["schema_version"] = 1;

  json persons = json::array();
  for (const Person& person : scene.persons()) {
    json p;
    p["position"] = {person.position.x, person.position.y};
    p["orientation_rad"] = person.orientation;
    p["height_m"] = person.height;
    p["speed_mps"] = person.speed;
    persons.push_back(std::move(p));
  }
  doc["persons"] = std::move(persons);

  const ModelOptions& options = scene.options();
  json opts;
  opts["aggregation"] = options.aggregation == Aggregation::Max ? "max" : "sum-clamp";
  opts["elongation"] = options.elongation == ElongationRule::Kirby2v ? "kirby-2v" : "none";
  opts["top_mf"] = options.s_shaped_top ? "s-shaped" : "gaussian";
  if (options.zero_above) opts["zero_above_m"] = *options.zero_above;
  if (!options.region_overrides.empty()) {
    json ro;
    for (const auto& [region, o] : options.region_overrides) {
      json entry;
      if (o.discomfort) entry["discomfort"] = *o.discomfort;
      if (o.sigma) entry["sigma_m"] = *o.sigma;
      if (o.relative_height) entry["relative_height"] = *o.relative_height;
      ro[std::string(to_string(region))] = std::move(entry);
    }
    opts["region_overrides"] = std::move(ro);
  }
  doc["options"] = std::move(opts);

  return doc.dump(2) + "\n";
}

std::uint64_t scene_hash(const Scene& scene) {
  const std::string canonical = serialize_scene(scene);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace proxfield
