#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace peaknet {

/// One scene: the characters sharing it, in first-mention order, no repeats.
using Scene = std::vector<std::string>;

/// Ordered scenes of one script, with canonical character names.
struct SceneSequence {
  std::vector<Scene> scenes;
  std::string source_name;

  friend bool operator==(const SceneSequence&, const SceneSequence&) = default;
};

struct ParsedScenes {
  SceneSequence sequence;
  // Number of names dropped because they repeated within their scene.
  std::size_t duplicate_count = 0;
};

/// Maps alias spellings onto canonical names. Chains are rejected on
/// construction, so resolve() is a single lookup and idempotent.
class AliasMap {
 public:
  AliasMap() = default;
  explicit AliasMap(std::map<std::string, std::string> entries);

  const std::string& resolve(const std::string& name) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::string> entries_;
};

/// Parses the `.scenes` format: one scene per line, names separated by '|',
/// '#' comment lines and blank lines skipped. Throws ParseError.
ParsedScenes parse_scenes(std::string_view text, std::string source_name = {});

/// Parses the `.alias` format: "alias => canonical" per line. Throws
/// ParseError for malformed lines, conflicting entries and chains.
AliasMap parse_aliases(std::string_view text);

SceneSequence resolve_aliases(const SceneSequence& seq, const AliasMap& aliases);

/// Inverse of parse_scenes for any sequence parse_scenes can produce.
std::string serialize_scenes(const SceneSequence& seq);

/// Reads a list file (one entry per line, '#' comments, blanks skipped).
std::vector<std::string> parse_name_list(std::string_view text);

}  // namespace peaknet
