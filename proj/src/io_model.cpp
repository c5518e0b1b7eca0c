#include "mmlint/io.hpp"

#include <json.hpp>

#include <optional>
#include <utility>

namespace mmlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim_view(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && ascii_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

struct Line {
  int number;
  std::string_view text;  // without the trailing newline / carriage return
};

std::vector<Line> split_lines(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);  // UTF-8 BOM
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(Line{number, line});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++number;
  }
  // Drop a trailing empty pseudo-line produced by a final newline.
  if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  return lines;
}

// Scans a possibly-quoted label starting at `pos`; returns the label and the
// index just past it. Unquoted labels run to the stop character (or EOL).
std::string scan_label(std::string_view text, std::size_t& pos, char stop,
                       std::string_view file, int line) {
  while (pos < text.size() && ascii_space(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size() && text[pos] == '"') {
    std::string out;
    ++pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\\') {
        if (pos + 1 >= text.size()) {
          throw ParseError(std::string(file), line, "dangling escape in quoted label");
        }
        char escaped = text[pos + 1];
        switch (escaped) {
          case '\\': out.push_back('\\'); break;
          case '"': out.push_back('"'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          default:
            throw ParseError(std::string(file), line,
                             std::string("invalid escape \"\\") + escaped + "\" in quoted label");
        }
        pos += 2;
        continue;
      }
      if (c == '"') {
        ++pos;
        while (pos < text.size() && ascii_space(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] != stop) {
          throw ParseError(std::string(file), line, "unexpected text after quoted label");
        }
        return out;
      }
      out.push_back(c);
      ++pos;
    }
    throw ParseError(std::string(file), line, "unterminated quoted label");
  }
  std::size_t end = stop == '\0' ? text.size() : text.find(stop, pos);
  if (end == std::string_view::npos) end = text.size();
  std::string out(trim_view(text.substr(pos, end - pos)));
  pos = end;
  return out;
}

std::string scan_label_to_eol(std::string_view text, std::string_view file, int line) {
  std::size_t pos = 0;
  std::string out = scan_label(text, pos, '\0', file, line);
  return out;
}

std::vector<std::string> scan_label_list(std::string_view text, std::string_view file,
                                         int line) {
  std::vector<std::string> out;
  if (trim_view(text).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::string label = scan_label(text, pos, ',', file, line);
    if (label.empty()) {
      throw ParseError(std::string(file), line, "empty label in list");
    }
    out.push_back(std::move(label));
    if (pos >= text.size()) break;
    ++pos;  // skip the comma
    if (trim_view(text.substr(pos)).empty()) {
      throw ParseError(std::string(file), line, "trailing comma in label list");
    }
  }
  return out;
}

bool needs_quoting(std::string_view label) {
  if (label.empty()) return true;
  if (ascii_space(static_cast<unsigned char>(label.front())) ||
      ascii_space(static_cast<unsigned char>(label.back()))) {
    return true;
  }
  if (label.front() == '"') return true;
  for (char c : label) {
    if (c == ',' || c == '#' || c == ':' || c == '\n' || c == '\r' || c == '\t') return true;
  }
  return false;
}

std::string render_label(std::string_view label) {
  if (!needs_quoting(label)) return std::string(label);
  std::string out = "\"";
  for (char c : label) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

std::string render_label_list(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_label(labels[i]);
  }
  return out;
}

}  // namespace

MotivationalModel parse_model_dsl(std::string_view text, std::string_view file) {
  std::optional<GoalInput> root;
  std::vector<GoalInput*> stack;  // stack[d] = last goal seen at depth d
  std::vector<std::string> roles, qualities, emotions, concerns;

  for (const Line& line : split_lines(text)) {
    std::size_t spaces = 0;
    while (spaces < line.text.size() && line.text[spaces] == ' ') ++spaces;
    std::string_view content = line.text.substr(spaces);
    if (content.empty()) continue;
    if (content.front() == '\t') {
      throw ParseError(std::string(file), line.number, "tabs are not allowed in indentation");
    }
    if (content.front() == '#') continue;

    if (spaces % 2 != 0) {
      throw ParseError(std::string(file), line.number,
                       "indentation of " + std::to_string(spaces) +
                           " spaces is not a multiple of two");
    }
    int depth = static_cast<int>(spaces / 2);

    if (content.substr(0, 5) == "goal:") {
      std::string label = scan_label_to_eol(content.substr(5), file, line.number);
      if (label.empty()) {
        throw ParseError(std::string(file), line.number, "goal line has no label");
      }
      if (depth == 0) {
        if (root.has_value()) {
          throw ParseError(std::string(file), line.number,
                           "second top-level goal; a model has exactly one root");
        }
        root = GoalInput{std::move(label), {}, ""};
        stack = {&*root};
        continue;
      }
      if (!root.has_value() || depth > static_cast<int>(stack.size())) {
        throw ParseError(std::string(file), line.number,
                         "goal is indented more than one level below its parent");
      }
      stack.resize(static_cast<std::size_t>(depth));
      GoalInput* parent = stack.back();
      parent->children.push_back(GoalInput{std::move(label), {}, ""});
      stack.push_back(&parent->children.back());
      continue;
    }

    auto set_line = [&](std::string_view keyword,
                        std::vector<std::string>* target) -> bool {
      if (content.substr(0, keyword.size()) != keyword) return false;
      if (depth != 0) {
        throw ParseError(std::string(file), line.number,
                         std::string(keyword) + " lines must not be indented");
      }
      std::vector<std::string> labels =
          scan_label_list(content.substr(keyword.size()), file, line.number);
      target->insert(target->end(), labels.begin(), labels.end());
      return true;
    };
    if (set_line("roles:", &roles)) continue;
    if (set_line("qualities:", &qualities)) continue;
    if (set_line("emotions:", &emotions)) continue;
    if (set_line("concerns:", &concerns)) continue;

    throw ParseError(std::string(file), line.number,
                     "unrecognized line; expected goal:, roles:, qualities:, emotions:, "
                     "concerns: or a comment");
  }

  if (!root.has_value()) {
    throw ParseError(std::string(file), 0, "model has no goal lines");
  }
  return build_model(*root, std::move(roles), std::move(qualities), std::move(emotions),
                     std::move(concerns));
}

std::string emit_model_dsl(const MotivationalModel& model) {
  std::string out;
  // Pre-order walk that tracks depth by hand; nodes() is already pre-order
  // but depth is easiest to recover from the parent map.
  struct Frame {
    const GoalNode* node;
    int depth;
  };
  std::vector<Frame> stack = {{&model.node(model.root_id()), 0}};
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    out.append(static_cast<std::size_t>(frame.depth) * 2, ' ');
    out += "goal: ";
    out += render_label(frame.node->label);
    out += "\n";
    for (auto it = frame.node->children.rbegin(); it != frame.node->children.rend(); ++it) {
      stack.push_back({&model.node(*it), frame.depth + 1});
    }
  }
  if (!model.roles().empty()) out += "roles: " + render_label_list(model.roles()) + "\n";
  if (!model.qualities().empty()) {
    out += "qualities: " + render_label_list(model.qualities()) + "\n";
  }
  if (!model.emotions().empty()) out += "emotions: " + render_label_list(model.emotions()) + "\n";
  if (!model.concerns().empty()) out += "concerns: " + render_label_list(model.concerns()) + "\n";
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_array(const ordered_json& doc, const char* key,
                                      std::string_view file) {
  std::vector<std::string> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) {
    throw ParseError(std::string(file), 0, std::string("field \"") + key + "\" must be an array");
  }
  for (const auto& entry : *it) {
    if (!entry.is_string()) {
      throw ParseError(std::string(file), 0,
                       std::string("field \"") + key + "\" must contain only strings");
    }
    out.push_back(entry.get<std::string>());
  }
  return out;
}

}  // namespace

MotivationalModel parse_model_json(std::string_view text, std::string_view file) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(file), 0, e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(file), 0, "model document must be a JSON object");
  }
  auto root_it = doc.find("root");
  if (root_it == doc.end() || !root_it->is_string()) {
    throw ParseError(std::string(file), 0, "missing string field \"root\"");
  }
  auto nodes_it = doc.find("nodes");
  if (nodes_it == doc.end() || !nodes_it->is_object()) {
    throw ParseError(std::string(file), 0, "missing object field \"nodes\"");
  }

  std::vector<GoalNode> nodes;
  for (const auto& [id, value] : nodes_it->items()) {
    if (!value.is_object()) {
      throw ParseError(std::string(file), 0, "node \"" + id + "\" must be an object");
    }
    auto label_it = value.find("label");
    if (label_it == value.end() || !label_it->is_string()) {
      throw ParseError(std::string(file), 0, "node \"" + id + "\" has no string label");
    }
    GoalNode node{id, label_it->get<std::string>(), {}};
    if (auto children_it = value.find("children"); children_it != value.end()) {
      if (!children_it->is_array()) {
        throw ParseError(std::string(file), 0, "node \"" + id + "\" children must be an array");
      }
      for (const auto& child : *children_it) {
        if (!child.is_string()) {
          throw ParseError(std::string(file), 0,
                           "node \"" + id + "\" children must be strings");
        }
        node.children.push_back(child.get<std::string>());
      }
    }
    nodes.push_back(std::move(node));
  }

  return build_model(root_it->get<std::string>(), nodes, string_array(doc, "roles", file),
                     string_array(doc, "qualities", file), string_array(doc, "emotions", file),
                     string_array(doc, "concerns", file));
}

std::string emit_model_json(const MotivationalModel& model) {
  ordered_json doc;
  doc["root"] = model.root_id();
  ordered_json nodes = ordered_json::object();
  for (const GoalNode& node : model.nodes()) {
    ordered_json entry;
    entry["label"] = node.label;
    entry["children"] = node.children;
    nodes[node.id] = std::move(entry);
  }
  doc["nodes"] = std::move(nodes);
  doc["roles"] = model.roles();
  doc["qualities"] = model.qualities();
  doc["emotions"] = model.emotions();
  doc["concerns"] = model.concerns();
  return doc.dump(2) + "\n";
}

}  // namespace mmlint
