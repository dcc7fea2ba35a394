// Scene document parsing and canonical serialization. The on-disk format is
// JSON: schema_version, a persons list, and model options; unknown keys are
// rejected with the offending path.
#ifndef PROXFIELD_SCENE_IO_HPP_
#define PROXFIELD_SCENE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "proxfield/field.hpp"

namespace proxfield {

class SceneError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,     // malformed JSON, reported with line and column
    Schema,     // wrong type, unknown key, or missing key, reported with path
    Invariant,  // well-formed but violates a value constraint
  };

  SceneError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses and validates a scene document. Throws SceneError.
Scene parse_scene(const std::string& text);

/// Reads and parses a scene file. Throws SceneError on bad content and
/// std::runtime_error when the file cannot be read.
Scene load_scene(const std::filesystem::path& path);

/// Canonical document form: sorted keys, orientation in radians, defaults
/// spelled out. parse_scene(serialize_scene(s)) reproduces s, and
/// serialization is byte-stable.
std::string serialize_scene(const Scene& scene);

/// FNV-1a hash of the canonical document, used to stamp sampled fields with
/// their provenance.
std::uint64_t scene_hash(const Scene& scene);

}  // namespace proxfield

#endif  // PROXFIELD_SCENE_IO_HPP_
