#include "mmlint/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace mmlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char ascii_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

std::string lower_copy(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) out.push_back(ascii_lower(c));
  return out;
}

std::string trim_copy(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && ascii_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

struct CsvRecord {
  int line;  // line the record starts on, 1-based
  std::vector<std::string> fields;
};

std::vector<CsvRecord> read_csv(std::string_view text, std::string_view file) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<CsvRecord> records;
  std::vector<std::string> fields;
  std::string field;
  int line = 1;
  int record_line = 1;
  bool quoted = false;
  bool field_was_quoted = false;

  auto end_field = [&] {
    fields.push_back(field_was_quoted ? field : trim_copy(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    bool all_empty = std::all_of(fields.begin(), fields.end(),
                                 [](const std::string& f) { return f.empty(); });
    if (!all_empty) records.push_back(CsvRecord{record_line, std::move(fields)});
    fields = {};
    record_line = line;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      if (c == '\n') ++line;
      field.push_back(c);
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!trim_copy(field).empty()) {
          throw ParseError(std::string(file), line, "quote in the middle of a field");
        }
        field.clear();
        quoted = true;
        field_was_quoted = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        ++i;
        break;
      case '\n':
        ++line;
        ++i;
        end_record();
        break;
      default:
        if (field_was_quoted && !ascii_space(static_cast<unsigned char>(c))) {
          throw ParseError(std::string(file), line, "text after closing quote");
        }
        if (!field_was_quoted) field.push_back(c);
        ++i;
    }
  }
  if (quoted) {
    throw ParseError(std::string(file), record_line, "unterminated quoted field");
  }
  if (!field.empty() || !fields.empty()) end_record();
  return records;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find(';', start);
    std::string_view piece =
        sep == std::string_view::npos ? text.substr(start) : text.substr(start, sep - start);
    std::string item = trim_copy(piece);
    if (!item.empty()) out.push_back(std::move(item));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  bool needs = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs = true;
      break;
    }
  }
  if (!needs && (field.empty() || !ascii_space(static_cast<unsigned char>(field.front())))) {
    if (field.empty() || !ascii_space(static_cast<unsigned char>(field.back()))) {
      return std::string(field);
    }
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += "; ";
    out += items[i];
  }
  return out;
}

std::string head_of(std::string_view text) {
  std::string trimmed = trim_copy(text);
  if (trimmed.size() > 40) return trimmed.substr(0, 40) + "...";
  return trimmed;
}

}  // namespace

StoryParts parse_story_text(std::string_view line) {
  std::string_view text = line;
  while (!text.empty() && ascii_space(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && ascii_space(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  std::string low = lower_copy(text);

  if (low.substr(0, 4) != "as a") {
    throw TemplateMismatchError(head_of(text), "expected the statement to start with \"As a\"");
  }
  std::size_t pos = 4;
  if (pos < low.size() && low[pos] == 'n') ++pos;  // "As an"
  if (pos >= low.size() || !ascii_space(static_cast<unsigned char>(low[pos]))) {
    throw TemplateMismatchError(head_of(text), "expected a role after \"As a\"");
  }
  ++pos;

  // Role runs up to the first ", I want ".
  std::size_t comma = std::string::npos;
  std::size_t want_start = 0;
  for (std::size_t c = low.find(',', pos); c != std::string::npos; c = low.find(',', c + 1)) {
    std::size_t k = c + 1;
    while (k < low.size() && ascii_space(static_cast<unsigned char>(low[k]))) ++k;
    if (low.size() - k >= 6 && low.compare(k, 6, "i want") == 0) {
      std::size_t w = k + 6;
      if (w < low.size() && ascii_space(static_cast<unsigned char>(low[w]))) {
        comma = c;
        want_start = w + 1;
        break;
      }
    }
  }
  if (comma == std::string::npos) {
    throw TemplateMismatchError(head_of(text), "expected \", I want\" after the role");
  }
  std::string role = trim_copy(text.substr(pos, comma - pos));
  if (role.empty()) {
    throw TemplateMismatchError(head_of(text), "the role before \", I want\" is empty");
  }

  // Optional "[,] so that <purpose>"; first word-boundary occurrence wins.
  std::size_t so_that = std::string::npos;
  std::size_t purpose_start = 0;
  for (std::size_t t = low.find("so that", want_start); t != std::string::npos;
       t = low.find("so that", t + 1)) {
    if (t <= want_start) continue;
    char before = low[t - 1];
    if (!ascii_space(static_cast<unsigned char>(before)) && before != ',') continue;
    std::size_t after = t + 7;
    if (after < low.size() && !ascii_space(static_cast<unsigned char>(low[after]))) continue;
    so_that = t;
    purpose_start = after;
    break;
  }

  StoryParts parts;
  parts.role_phrase = std::move(role);
  if (so_that == std::string::npos) {
    parts.want = trim_copy(text.substr(want_start));
  } else {
    std::string want = trim_copy(text.substr(want_start, so_that - want_start));
    if (!want.empty() && want.back() == ',') {
      want.pop_back();
      want = trim_copy(want);
    }
    parts.want = std::move(want);
    std::string purpose = trim_copy(text.substr(purpose_start));
    if (purpose.empty()) {
      throw TemplateMismatchError("so that", "expected a purpose after \"so that\"");
    }
    parts.purpose = std::move(purpose);
  }
  if (parts.want.empty()) {
    throw TemplateMismatchError(head_of(text), "the want clause after \"I want\" is empty");
  }
  return parts;
}

std::vector<UserStory> parse_stories_table(std::string_view text, std::string_view file) {
  std::vector<CsvRecord> records = read_csv(text, file);
  if (records.empty()) {
    throw ParseError(std::string(file), 0, "stories file has no header row");
  }

  const CsvRecord& header = records.front();
  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    std::string name = lower_copy(trim_copy(header.fields[i]));
    if (name.empty()) {
      throw ParseError(std::string(file), header.line, "empty column name in header");
    }
    if (!columns.emplace(name, i).second) {
      throw ParseError(std::string(file), header.line, "duplicate column \"" + name + "\"");
    }
  }
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    auto it = columns.find(name);
    if (it == columns.end()) return std::nullopt;
    return it->second;
  };

  auto id_col = column("id");
  if (!id_col) {
    throw ParseError(std::string(file), header.line, "missing required column \"id\"");
  }
  auto statement_col = column("statement");
  auto role_col = column("role");
  auto want_col = column("want");
  auto purpose_col = column("purpose");
  if (statement_col && (role_col || want_col || purpose_col)) {
    throw ParseError(std::string(file), header.line,
                     "use either a statement column or role/want/purpose columns, not both");
  }
  if (!statement_col && (!role_col || !want_col)) {
    throw ParseError(std::string(file), header.line,
                     "missing story columns: need \"statement\" or \"role\" and \"want\"");
  }
  auto epic_col = column("epic");
  auto links_col = column("links");
  auto qualities_col = column("qualities");
  auto emotions_col = column("emotions");

  std::vector<UserStory> stories;
  std::set<std::string> seen_ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& row = records[r];
    if (row.fields.size() != header.fields.size()) {
      throw ParseError(std::string(file), row.line,
                       "expected " + std::to_string(header.fields.size()) + " fields, got " +
                           std::to_string(row.fields.size()));
    }
    auto cell = [&](std::optional<std::size_t> col) -> std::string {
      return col ? row.fields[*col] : std::string();
    };

    UserStory story;
    story.id = trim_copy(cell(id_col));
    if (story.id.empty()) {
      throw ParseError(std::string(file), row.line, "story id is empty");
    }
    if (!seen_ids.insert(story.id).second) {
      throw DuplicateStoryIdError(std::string(file), row.line, story.id);
    }

    if (statement_col) {
      try {
        StoryParts parts = parse_story_text(cell(statement_col));
        story.role_phrase = std::move(parts.role_phrase);
        story.want = std::move(parts.want);
        story.purpose = std::move(parts.purpose);
      } catch (const TemplateMismatchError& e) {
        throw ParseError(std::string(file), row.line, e.what());
      }
    } else {
      story.role_phrase = trim_copy(cell(role_col));
      story.want = trim_copy(cell(want_col));
      if (story.role_phrase.empty()) {
        throw ParseError(std::string(file), row.line, "story role is empty");
      }
      if (story.want.empty()) {
        throw ParseError(std::string(file), row.line, "story want is empty");
      }
      std::string purpose = trim_copy(cell(purpose_col));
      if (!purpose.empty()) story.purpose = std::move(purpose);
    }

    std::string epic = trim_copy(cell(epic_col));
    if (!epic.empty()) story.epic = std::move(epic);
    story.declared_links = split_list(cell(links_col));
    story.declared_qualities = split_list(cell(qualities_col));
    story.declared_emotions = split_list(cell(emotions_col));
    story.source_location = SourceLocation{std::string(file), row.line};
    stories.push_back(std::move(story));
  }
  return stories;
}

std::string emit_stories_csv(const std::vector<UserStory>& stories) {
  std::string out = "id,role,want,purpose,epic,links,qualities,emotions\n";
  for (const UserStory& story : stories) {
    out += csv_escape(story.id);
    out += ",";
    out += csv_escape(story.role_phrase);
    out += ",";
    out += csv_escape(story.want);
    out += ",";
    out += csv_escape(story.purpose.value_or(""));
    out += ",";
    out += csv_escape(story.epic.value_or(""));
    out += ",";
    out += csv_escape(join_list(story.declared_links));
    out += ",";
    out += csv_escape(join_list(story.declared_qualities));
    out += ",";
    out += csv_escape(join_list(story.declared_emotions));
    out += "\n";
  }
  return out;
}

}  // namespace mmlint
