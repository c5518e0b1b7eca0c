#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mmlint/artifacts.hpp"
#include "mmlint/label.hpp"
#include "mmlint/model.hpp"

namespace mmlint {

/// Resolution of one story's declared links against a model. Functional links
/// hold node ids; quality/emotion links hold the model's stored labels.
/// Entries that matched nothing are kept in `unresolved` (normalized), never
/// dropped silently.
struct StoryLinks {
  std::string story;
  std::set<std::string> functional;
  std::set<std::string> qualities;
  std::set<std::string> emotions;
  std::vector<std::pair<GoalKind, std::string>> unresolved;
};

/// A declared label that matched more than one entry after normalization and
/// alias resolution; collected by link_all instead of aborting the run.
struct AmbiguityNote {
  std::string story_id;
  GoalKind kind;
  std::string label;  // normalized
  std::vector<std::string> candidates;
};

/// Resolves one story. Declared link entries match a functional node by id
/// first, then by normalized + alias-resolved label; declared qualities and
/// emotions resolve against the model's label sets (concerns never match).
/// Throws AmbiguousLabelError when an entry matches two distinct goals.
StoryLinks link_story(const UserStory& story, const MotivationalModel& model,
                      const AliasTable& aliases);

/// Resolves every story. With `notes` non-null, ambiguous entries are recorded
/// there and skipped instead of throwing.
std::vector<StoryLinks> link_all(const std::vector<UserStory>& stories,
                                 const MotivationalModel& model, const AliasTable& aliases,
                                 std::vector<AmbiguityNote>* notes = nullptr);

struct Suggestion {
  std::string node_id;
  double score;  // in [0, 1]
};

/// Top-k functional nodes ranked by token overlap between the story's
/// want/purpose text and each node label (plus declared alias spellings):
/// score = |story tokens ∩ label tokens| / |label tokens|. Ties break in
/// depth-first pre-order. Deterministic.
std::vector<Suggestion> suggest_links(const UserStory& story, const MotivationalModel& model,
                                      const AliasTable& aliases, std::size_t k);

}  // namespace mmlint
