#include "peaknet/corpus.hpp"

#include <algorithm>
#include <cstdint>

#include "peaknet/error.hpp"

namespace peaknet {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

// Calls fn(line_number, trimmed_line) for each content line, validating
// encoding on the way.
template <typename Fn>
std::size_t for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!valid_utf8(raw)) throw ParseError(line_no, "invalid UTF-8");
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
  return line_no;
}

}  // namespace

AliasMap::AliasMap(std::map<std::string, std::string> entries)
    : entries_(std::move(entries)) {
  for (const auto& [alias, canonical] : entries_) {
    if (entries_.count(canonical) != 0) {
      throw ParamError("alias chain: '" + alias + "' => '" + canonical +
                       "', which is itself an alias");
    }
  }
}

const std::string& AliasMap::resolve(const std::string& name) const {
  const auto it = entries_.find(name);
  return it == entries_.end() ? name : it->second;
}

ParsedScenes parse_scenes(std::string_view text, std::string source_name) {
  ParsedScenes out;
  out.sequence.source_name = std::move(source_name);
  const auto lines = for_each_content_line(text, [&](std::size_t line_no,
                                                     std::string_view line) {
    Scene scene;
    std::size_t pos = 0;
    while (true) {
      const auto bar = line.find('|', pos);
      const auto name =
          trim(line.substr(pos, bar == std::string_view::npos ? line.npos : bar - pos));
      if (name.empty()) throw ParseError(line_no, "empty character name");
      if (std::find(scene.begin(), scene.end(), name) == scene.end()) {
        scene.emplace_back(name);
      } else {
        ++out.duplicate_count;
      }
      if (bar == std::string_view::npos) break;
      pos = bar + 1;
    }
    out.sequence.scenes.push_back(std::move(scene));
  });
  if (out.sequence.scenes.empty()) {
    throw ParseError(std::max<std::size_t>(lines, 1), "no scenes");
  }
  return out;
}

AliasMap parse_aliases(std::string_view text) {
  std::map<std::string, std::string> entries;
  std::map<std::string, std::size_t> defined_at;
  for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto arrow = line.find("=>");
    if (arrow == std::string_view::npos) {
      throw ParseError(line_no, "expected 'alias => canonical'");
    }
    const auto alias = std::string(trim(line.substr(0, arrow)));
    const auto canonical = std::string(trim(line.substr(arrow + 2)));
    if (alias.empty() || canonical.empty()) {
      throw ParseError(line_no, "empty alias or canonical name");
    }
    if (alias == canonical) return;
    const auto [it, inserted] = entries.emplace(alias, canonical);
    if (!inserted && it->second != canonical) {
      throw ParseError(line_no, "alias '" + alias + "' already maps to '" +
                                    it->second + "'");
    }
    defined_at.emplace(alias, line_no);
  });
  for (const auto& [alias, canonical] : entries) {
    if (entries.count(canonical) != 0) {
      throw ParseError(defined_at.at(alias),
                       "alias chain: '" + canonical + "' is itself an alias");
    }
  }
  return AliasMap(std::move(entries));
}

SceneSequence resolve_aliases(const SceneSequence& seq, const AliasMap& aliases) {
  SceneSequence out;
  out.source_name = seq.source_name;
  out.scenes.reserve(seq.scenes.size());
  for (const auto& scene : seq.scenes) {
    Scene resolved;
    for (const auto& name : scene) {
      const auto& canonical = aliases.resolve(name);
      if (std::find(resolved.begin(), resolved.end(), canonical) == resolved.end()) {
        resolved.push_back(canonical);
      }
    }
    out.scenes.push_back(std::move(resolved));
  }
  return out;
}

std::string serialize_scenes(const SceneSequence& seq) {
  std::string out;
  for (const auto& scene : seq.scenes) {
    for (std::size_t i = 0; i < scene.size(); ++i) {
      if (i != 0) out += '|';
      out += scene[i];
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> parse_name_list(std::string_view text) {
  std::vector<std::string> names;
  for_each_content_line(text, [&](std::size_t, std::string_view line) {
    names.emplace_back(line);
  });
  return names;
}

}  // namespace peaknet
