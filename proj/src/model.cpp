#include "mmlint/model.hpp"

#include <algorithm>
#include <utility>

namespace mmlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim_copy(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && ascii_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> validate_label_set(std::vector<std::string> labels,
                                            std::string_view set_name) {
  std::set<std::string> seen;
  for (std::string& label : labels) {
    label = trim_copy(label);
    if (label.empty()) {
      throw ModelError(ModelErrorKind::EmptyLabel,
                       "empty label in " + std::string(set_name) + " set");
    }
    NormalizedLabel normalized = normalize_label(label);
    if (normalized.value.empty()) {
      throw ModelError(ModelErrorKind::EmptyLabel,
                       "label \"" + label + "\" in " + std::string(set_name) +
                           " set normalizes to nothing");
    }
    if (!seen.insert(normalized.value).second) {
      throw ModelError(ModelErrorKind::DuplicateLabelInSet,
                       "duplicate label \"" + label + "\" in " + std::string(set_name) + " set");
    }
  }
  return labels;
}

std::string unique_slug(const std::string& label, std::set<std::string>& used) {
  std::string base = slugify(label);
  std::string candidate = base;
  for (int suffix = 2; !used.insert(candidate).second; ++suffix) {
    candidate = base + "-" + std::to_string(suffix);
  }
  return candidate;
}

void collect_explicit_ids(const GoalInput& goal, std::set<std::string>& ids) {
  if (trim_copy(goal.label).empty()) {
    throw ModelError(ModelErrorKind::EmptyLabel, "goal label is empty");
  }
  if (!goal.id.empty()) {
    if (!ids.insert(goal.id).second) {
      throw ModelError(ModelErrorKind::DuplicateId, "duplicate node id \"" + goal.id + "\"");
    }
  }
  for (const GoalInput& child : goal.children) collect_explicit_ids(child, ids);
}

std::string flatten(const GoalInput& goal, std::set<std::string>& used,
                    std::vector<GoalNode>& out) {
  std::string id = goal.id.empty() ? unique_slug(goal.label, used) : goal.id;
  std::size_t index = out.size();
  out.push_back(GoalNode{id, trim_copy(goal.label), {}});
  std::vector<std::string> child_ids;
  child_ids.reserve(goal.children.size());
  for (const GoalInput& child : goal.children) {
    child_ids.push_back(flatten(child, used, out));
  }
  out[index].children = std::move(child_ids);
  return id;
}

}  // namespace

std::string_view goal_kind_name(GoalKind kind) {
  switch (kind) {
    case GoalKind::Functional: return "functional";
    case GoalKind::Quality: return "quality";
    case GoalKind::Emotional: return "emotional";
    case GoalKind::Concern: return "concern";
  }
  return "unknown";
}

const GoalNode& MotivationalModel::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw ModelError(ModelErrorKind::UnknownNode, "unknown node id \"" + id + "\"");
  }
  return nodes_[it->second];
}

std::optional<std::string> MotivationalModel::parent_of(const std::string& id) const {
  if (!has_node(id)) {
    throw ModelError(ModelErrorKind::UnknownNode, "unknown node id \"" + id + "\"");
  }
  auto it = parent_.find(id);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& MotivationalModel::goal_set(GoalKind kind) const {
  switch (kind) {
    case GoalKind::Quality: return qualities_;
    case GoalKind::Emotional: return emotions_;
    case GoalKind::Concern: return concerns_;
    case GoalKind::Functional: break;
  }
  throw Error("goal_set does not cover functional goals; use nodes()");
}

MotivationalModel build_model(const GoalInput& root_tree,
                              std::vector<std::string> roles,
                              std::vector<std::string> qualities,
                              std::vector<std::string> emotions,
                              std::vector<std::string> concerns) {
  std::set<std::string> ids;
  collect_explicit_ids(root_tree, ids);
  std::vector<GoalNode> flat;
  flatten(root_tree, ids, flat);
  return build_model(flat.front().id, flat, std::move(roles), std::move(qualities),
                     std::move(emotions), std::move(concerns));
}

MotivationalModel build_model(const std::string& root_id,
                              const std::vector<GoalNode>& nodes,
                              std::vector<std::string> roles,
                              std::vector<std::string> qualities,
                              std::vector<std::string> emotions,
                              std::vector<std::string> concerns) {
  std::map<std::string, const GoalNode*> by_id;
  for (const GoalNode& node : nodes) {
    if (trim_copy(node.label).empty()) {
      throw ModelError(ModelErrorKind::EmptyLabel,
                       "goal label is empty for node \"" + node.id + "\"");
    }
    if (node.id.empty()) {
      throw ModelError(ModelErrorKind::EmptyLabel, "node id is empty");
    }
    if (!by_id.emplace(node.id, &node).second) {
      throw ModelError(ModelErrorKind::DuplicateId, "duplicate node id \"" + node.id + "\"");
    }
  }
  if (by_id.find(root_id) == by_id.end()) {
    throw ModelError(ModelErrorKind::UnknownNode, "root node \"" + root_id + "\" not found");
  }

  std::map<std::string, int> parent_count;
  for (const GoalNode& node : nodes) {
    for (const std::string& child : node.children) {
      if (by_id.find(child) == by_id.end()) {
        throw ModelError(ModelErrorKind::UnknownNode,
                         "node \"" + node.id + "\" references unknown child \"" + child + "\"");
      }
      ++parent_count[child];
    }
  }
  if (parent_count.find(root_id) != parent_count.end()) {
    throw ModelError(ModelErrorKind::CycleDetected,
                     "root node \"" + root_id + "\" is listed as a child");
  }
  for (const GoalNode& node : nodes) {
    if (node.id == root_id) continue;
    int count = 0;
    if (auto it = parent_count.find(node.id); it != parent_count.end()) count = it->second;
    if (count > 1) {
      throw ModelError(ModelErrorKind::CycleDetected,
                       "node \"" + node.id + "\" has more than one parent");
    }
    if (count == 0) {
      throw ModelError(ModelErrorKind::CycleDetected,
                       "node \"" + node.id + "\" is not reachable from the root");
    }
  }

  MotivationalModel model;
  model.root_ = root_id;
  model.nodes_.reserve(nodes.size());

  // Iterative pre-order walk; children pushed in reverse so they pop in order.
  std::vector<const GoalNode*> stack = {by_id.at(root_id)};
  std::set<std::string> visited;
  while (!stack.empty()) {
    const GoalNode* current = stack.back();
    stack.pop_back();
    if (!visited.insert(current->id).second) {
      throw ModelError(ModelErrorKind::CycleDetected,
                       "node \"" + current->id + "\" visited twice");
    }
    model.index_[current->id] = model.nodes_.size();
    GoalNode stored{current->id, trim_copy(current->label), current->children};
    model.nodes_.push_back(std::move(stored));
    for (auto it = current->children.rbegin(); it != current->children.rend(); ++it) {
      model.parent_[*it] = current->id;
      stack.push_back(by_id.at(*it));
    }
  }
  if (visited.size() != nodes.size()) {
    throw ModelError(ModelErrorKind::CycleDetected, "model contains unreachable nodes");
  }

  model.roles_ = validate_label_set(std::move(roles), "roles");
  model.qualities_ = validate_label_set(std::move(qualities), "qualities");
  model.emotions_ = validate_label_set(std::move(emotions), "emotions");
  model.concerns_ = validate_label_set(std::move(concerns), "concerns");
  return model;
}

std::vector<std::string> leaf_goals(const MotivationalModel& model) {
  std::vector<std::string> out;
  for (const GoalNode& node : model.nodes()) {
    if (node.children.empty()) out.push_back(node.id);
  }
  return out;
}

std::set<std::string> subtree_of(const MotivationalModel& model, const std::string& node_id) {
  std::set<std::string> out;
  std::vector<const GoalNode*> stack = {&model.node(node_id)};
  while (!stack.empty()) {
    const GoalNode* current = stack.back();
    stack.pop_back();
    out.insert(current->id);
    for (const std::string& child : current->children) stack.push_back(&model.node(child));
  }
  return out;
}

std::string lowest_common_ancestor(const MotivationalModel& model,
                                   const std::vector<std::string>& node_ids) {
  if (node_ids.empty()) {
    throw Error("lowest_common_ancestor requires at least one node id");
  }
  auto ancestors_of = [&](const std::string& id) {
    std::set<std::string> chain;
    std::string current = id;
    chain.insert(current);
    while (auto parent = model.parent_of(current)) {
      current = *parent;
      chain.insert(current);
    }
    return chain;
  };

  std::string candidate = node_ids.front();
  model.node(candidate);  // validate
  for (std::size_t i = 1; i < node_ids.size(); ++i) {
    std::set<std::string> chain = ancestors_of(candidate);
    std::string walker = node_ids[i];
    model.node(walker);  // validate
    while (chain.find(walker) == chain.end()) {
      auto parent = model.parent_of(walker);
      if (!parent) break;
      walker = *parent;
    }
    candidate = walker;
  }
  return candidate;
}

bool structurally_equal(const MotivationalModel& a, const MotivationalModel& b) {
  if (a.roles() != b.roles() || a.qualities() != b.qualities() ||
      a.emotions() != b.emotions() || a.concerns() != b.concerns()) {
    return false;
  }
  std::vector<std::pair<const GoalNode*, const GoalNode*>> stack = {
      {&a.node(a.root_id()), &b.node(b.root_id())}};
  while (!stack.empty()) {
    auto [left, right] = stack.back();
    stack.pop_back();
    if (left->label != right->label) return false;
    if (left->children.size() != right->children.size()) return false;
    for (std::size_t i = 0; i < left->children.size(); ++i) {
      stack.push_back({&a.node(left->children[i]), &b.node(right->children[i])});
    }
  }
  return true;
}

std::optional<GoalMatch> find_goal(const MotivationalModel& model, GoalKind kind,
                                   const NormalizedLabel& label, const AliasTable& aliases) {
  NormalizedLabel query = aliases.resolve(label);
  std::vector<GoalMatch> matches;
  if (kind == GoalKind::Functional) {
    for (const GoalNode& node : model.nodes()) {
      if (aliases.resolve(normalize_label(node.label)) == query) {
        matches.push_back(GoalMatch{kind, node.id, node.label});
      }
    }
  } else {
    for (const std::string& stored : model.goal_set(kind)) {
      if (aliases.resolve(normalize_label(stored)) == query) {
        matches.push_back(GoalMatch{kind, stored, stored});
      }
    }
  }
  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1) {
    std::vector<std::string> candidates;
    candidates.reserve(matches.size());
    for (const GoalMatch& match : matches) candidates.push_back(match.id);
    throw AmbiguousLabelError(std::string(goal_kind_name(kind)), label.value,
                              std::move(candidates));
  }
  return matches.front();
}

}  // namespace mmlint
