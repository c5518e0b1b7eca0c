#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mmlint/errors.hpp"
#include "mmlint/label.hpp"

namespace mmlint {

enum class GoalKind { Functional, Quality, Emotional, Concern };

/// Lowercase word used in messages: "functional", "quality", "emotional", "concern".
std::string_view goal_kind_name(GoalKind kind);

/// One functional goal. `children` holds node ids in display order.
struct GoalNode {
  std::string id;
  std::string label;
  std::vector<std::string> children;
};

/// Input tree for the nested build_model overload. An empty id means
/// "derive a unique slug from the label".
struct GoalInput {
  std::string label;
  std::vector<GoalInput> children;
  std::string id;
};

/// A rooted tree of functional goals plus the model-wide role, quality,
/// emotional and concern label sets. Immutable after construction; all
/// queries are pure.
class MotivationalModel {
public:
  const std::string& root_id() const { return root_; }

  /// All nodes in depth-first pre-order.
  const std::vector<GoalNode>& nodes() const { return nodes_; }

  bool has_node(const std::string& id) const { return index_.find(id) != index_.end(); }

  /// Throws ModelError(UnknownNode) for ids not in the model.
  const GoalNode& node(const std::string& id) const;

  /// Parent id, or nullopt for the root.
  std::optional<std::string> parent_of(const std::string& id) const;

  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& qualities() const { return qualities_; }
  const std::vector<std::string>& emotions() const { return emotions_; }
  const std::vector<std::string>& concerns() const { return concerns_; }

  /// Label set for Quality, Emotional or Concern. Functional goals live in the
  /// node tree, not a label set; asking for them here is a programming error.
  const std::vector<std::string>& goal_set(GoalKind kind) const;

  friend MotivationalModel build_model(const GoalInput& root_tree,
                                       std::vector<std::string> roles,
                                       std::vector<std::string> qualities,
                                       std::vector<std::string> emotions,
                                       std::vector<std::string> concerns);
  friend MotivationalModel build_model(const std::string& root_id,
                                       const std::vector<GoalNode>& nodes,
                                       std::vector<std::string> roles,
                                       std::vector<std::string> qualities,
                                       std::vector<std::string> emotions,
                                       std::vector<std::string> concerns);

private:
  MotivationalModel() = default;

  std::string root_;
  std::vector<GoalNode> nodes_;  // pre-order
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::string> parent_;
  std::vector<std::string> roles_;
  std::vector<std::string> qualities_;
  std::vector<std::string> emotions_;
  std::vector<std::string> concerns_;
};

/// Builds a model from a nested goal tree. Throws ModelError on DuplicateId,
/// EmptyLabel, or DuplicateLabelInSet violations.
MotivationalModel build_model(const GoalInput& root_tree,
                              std::vector<std::string> roles,
                              std::vector<std::string> qualities = {},
                              std::vector<std::string> emotions = {},
                              std::vector<std::string> concerns = {});

/// Builds a model from a flat node collection with explicit ids. Additionally
/// validates the tree shape: every non-root node has exactly one parent and
/// everything is reachable from the root (CycleDetected otherwise); dangling
/// child references raise UnknownNode.
MotivationalModel build_model(const std::string& root_id,
                              const std::vector<GoalNode>& nodes,
                              std::vector<std::string> roles,
                              std::vector<std::string> qualities = {},
                              std::vector<std::string> emotions = {},
                              std::vector<std::string> concerns = {});

/// Ids of nodes with no children, in depth-first pre-order.
std::vector<std::string> leaf_goals(const MotivationalModel& model);

/// The node plus all of its descendants.
std::set<std::string> subtree_of(const MotivationalModel& model, const std::string& node_id);

/// Deepest node whose subtree contains every input. `node_ids` must be non-empty.
std::string lowest_common_ancestor(const MotivationalModel& model,
                                   const std::vector<std::string>& node_ids);

/// True when both models have the same label tree (shape and labels, ids
/// ignored) and identical role/quality/emotion/concern sequences.
bool structurally_equal(const MotivationalModel& a, const MotivationalModel& b);

struct GoalMatch {
  GoalKind kind;
  std::string id;     // node id for Functional, the stored label otherwise
  std::string label;  // stored display label
};

/// Finds the unique goal of `kind` whose normalized, alias-resolved label equals
/// the query. Returns nullopt when nothing matches; throws AmbiguousLabelError
/// when two distinct entries collide.
std::optional<GoalMatch> find_goal(const MotivationalModel& model, GoalKind kind,
                                   const NormalizedLabel& label, const AliasTable& aliases);

}  // namespace mmlint
