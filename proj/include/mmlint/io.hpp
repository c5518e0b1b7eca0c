#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmlint/artifacts.hpp"
#include "mmlint/label.hpp"
#include "mmlint/model.hpp"

namespace mmlint {

// Model DSL (.mm): line oriented, UTF-8, LF or CRLF.
//   goal: <label>          functional goal; 2-space indentation nests children
//   roles: a, b, c         comma-separated label lists, top level only
//   qualities: ...
//   emotions: ...
//   concerns: ...
//   # comment              full-line comments; blank lines are ignored
// Labels may be double-quoted; quoting is required when a label contains
// , # : tab or newline characters, starts with a quote, or has surrounding
// whitespace. Escapes inside quotes: \\ \" \n \r \t.
MotivationalModel parse_model_dsl(std::string_view text, std::string_view file = "");

/// Emits the canonical DSL form: 2-space indentation, one "key: a, b" line per
/// non-empty label set, quoting only where required.
std::string emit_model_dsl(const MotivationalModel& model);

// Model interchange format (.mm.json): object with "root", "nodes"
// (id -> {label, children}), and "roles"/"qualities"/"emotions"/"concerns"
// arrays. Unknown fields are ignored.
MotivationalModel parse_model_json(std::string_view text, std::string_view file = "");

/// Canonical JSON: fixed key order, nodes in pre-order, 2-space indentation.
std::string emit_model_json(const MotivationalModel& model);

struct StoryParts {
  std::string role_phrase;
  std::string want;
  std::optional<std::string> purpose;
};

/// Parses "As a(n) <role>, I want <want>[,] so that <purpose>"; keywords are
/// case-insensitive and the purpose clause is optional. Throws
/// TemplateMismatchError naming the offending segment.
StoryParts parse_story_text(std::string_view line);

// Stories file (.csv): RFC 4180 style quoting, header row required.
// Columns: id, then either `statement` or `role`/`want`[/`purpose`], plus
// optional `epic`, `links`, `qualities`, `emotions`. List cells split on ';'.
std::vector<UserStory> parse_stories_table(std::string_view text, std::string_view file = "");

std::string emit_stories_csv(const std::vector<UserStory>& stories);

// Persona file (.persona.txt): `key: value` header lines (name, role,
// optional id), then a blank line, then the free-text description.
Persona parse_persona(std::string_view text, std::string_view file = "");

std::string emit_persona(const Persona& persona);

// Alias file (.aliases): one equivalence class per line, labels separated by
// '='; the right-most label is the canonical spelling. '#' comments allowed.
AliasTable parse_aliases(std::string_view text, std::string_view file = "");

}  // namespace mmlint
