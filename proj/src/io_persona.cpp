#include "mmlint/io.hpp"

#include <utility>

namespace mmlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char ascii_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

std::string trim_copy(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && ascii_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

Persona parse_persona(std::string_view text, std::string_view file) {
  std::vector<std::string_view> lines = split_lines(text);
  Persona persona;
  bool saw_name = false;
  bool saw_role = false;
  bool saw_id = false;

  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    if (trim_copy(lines[i]).empty()) {
      ++i;  // blank line ends the header; the rest is the description
      break;
    }
    std::size_t colon = lines[i].find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(std::string(file), static_cast<int>(i + 1),
                       "expected \"key: value\" in the persona header");
    }
    std::string key = trim_copy(lines[i].substr(0, colon));
    for (char& c : key) c = ascii_lower(static_cast<unsigned char>(c));
    std::string value = trim_copy(lines[i].substr(colon + 1));
    if (key == "name") {
      if (saw_name) {
        throw ParseError(std::string(file), static_cast<int>(i + 1), "duplicate field \"name\"");
      }
      saw_name = true;
      persona.name = std::move(value);
    } else if (key == "role") {
      if (saw_role) {
        throw ParseError(std::string(file), static_cast<int>(i + 1), "duplicate field \"role\"");
      }
      saw_role = true;
      persona.role = std::move(value);
    } else if (key == "id") {
      if (saw_id) {
        throw ParseError(std::string(file), static_cast<int>(i + 1), "duplicate field \"id\"");
      }
      saw_id = true;
      persona.id = std::move(value);
    }
    // Unknown header keys are ignored for forward compatibility.
  }

  if (!saw_name || persona.name.empty()) {
    throw MissingFieldError(std::string(file), "name");
  }
  if (!saw_role || persona.role.empty()) {
    throw MissingFieldError(std::string(file), "role");
  }
  if (persona.id.empty()) persona.id = slugify(persona.name);

  std::string description;
  for (; i < lines.size(); ++i) {
    if (!description.empty()) description += "\n";
    description += std::string(lines[i]);
  }
  while (!description.empty() && ascii_space(static_cast<unsigned char>(description.back()))) {
    description.pop_back();
  }
  persona.description = std::move(description);
  return persona;
}

std::string emit_persona(const Persona& persona) {
  std::string out = "name: " + persona.name + "\nrole: " + persona.role + "\nid: " + persona.id +
                    "\n";
  if (!persona.description.empty()) {
    out += "\n" + persona.description + "\n";
  }
  return out;
}

AliasTable parse_aliases(std::string_view text, std::string_view file) {
  AliasTable table;
  int line_number = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_number;
    std::string trimmed = trim_copy(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<NormalizedLabel> members;
    std::size_t start = 0;
    while (start <= trimmed.size()) {
      std::size_t eq = trimmed.find('=', start);
      std::string_view piece = eq == std::string::npos
                                   ? std::string_view(trimmed).substr(start)
                                   : std::string_view(trimmed).substr(start, eq - start);
      NormalizedLabel member = normalize_label(piece);
      if (member.value.empty()) {
        throw ParseError(std::string(file), line_number, "empty label in alias class");
      }
      members.push_back(std::move(member));
      if (eq == std::string::npos) break;
      start = eq + 1;
    }
    if (members.size() < 2) {
      throw ParseError(std::string(file), line_number,
                       "an alias class needs at least two '='-separated labels");
    }
    table.add_class(members);
  }
  return table;
}

}  // namespace mmlint
