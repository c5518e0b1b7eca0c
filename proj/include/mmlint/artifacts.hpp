#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmlint/label.hpp"
#include "mmlint/model.hpp"

namespace mmlint {

struct SourceLocation {
  std::string file;
  int line = 0;
};

/// A named archetypical user bound to one model role.
struct Persona {
  std::string id;
  std::string name;
  std::string role;
  std::string description;
};

/// A parsed "As a / I want / so that" statement plus its declared links.
struct UserStory {
  std::string id;
  std::string role_phrase;
  std::string want;
  std::optional<std::string> purpose;
  std::optional<std::string> epic;
  std::vector<std::string> declared_links;      // functional goal ids or labels
  std::vector<std::string> declared_qualities;
  std::vector<std::string> declared_emotions;
  std::optional<SourceLocation> source_location;
};

/// Name of the implicit epic for stories without one; skipped by the epic check.
inline constexpr std::string_view kUnassignedEpic = "(unassigned)";

struct Epic {
  std::string name;
  std::vector<std::string> stories;  // story ids in source order
  std::optional<std::string> declared_node;  // functional goal id or label
};

/// Groups stories into epics by first appearance; stories without an epic end
/// up in the implicit "(unassigned)" epic.
std::vector<Epic> collect_epics(const std::vector<UserStory>& stories);

struct ArtifactBundle {
  MotivationalModel model;
  std::vector<Persona> personas;
  std::vector<UserStory> stories;
  std::vector<Epic> epics;
  AliasTable aliases;
};

/// Assembles a bundle, collecting epics and enforcing unique per-kind ids.
ArtifactBundle make_bundle(MotivationalModel model, std::vector<Persona> personas,
                           std::vector<UserStory> stories, AliasTable aliases);

}  // namespace mmlint
