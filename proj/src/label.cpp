#include "mmlint/label.hpp"

#include <algorithm>
#include <cctype>

namespace mmlint {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool ascii_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

char ascii_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

bool token_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

NormalizedLabel normalize_label(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end) {
    unsigned char c = static_cast<unsigned char>(text[begin]);
    if (!ascii_space(c) && !ascii_punct(c)) break;
    ++begin;
  }
  while (end > begin) {
    unsigned char c = static_cast<unsigned char>(text[end - 1]);
    if (!ascii_space(c) && !ascii_punct(c)) break;
    --end;
  }

  std::string out;
  out.reserve(end - begin);
  bool pending_space = false;
  for (std::size_t i = begin; i < end; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80 && ascii_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ascii_lower(c));
  }
  return {std::move(out)};
}

std::string slugify(std::string_view label) {
  NormalizedLabel normalized = normalize_label(label);
  std::string out;
  bool pending_dash = false;
  for (unsigned char c : normalized.value) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80;
    if (keep) {
      if (pending_dash && !out.empty()) out.push_back('-');
      pending_dash = false;
      out.push_back(static_cast<char>(c));
    } else {
      pending_dash = true;
    }
  }
  if (out.empty()) out = "goal";
  return out;
}

const StopWords kSuggestStopWords = {
    "a", "an", "the", "to", "of", "i", "so", "that", "want", "as",
};

const StopWords kPurposeStopWords = {
    "a",    "an",    "the",   "to",    "of",   "i",     "so",    "that",  "want",
    "as",   "and",   "are",   "at",    "be",   "been",  "being", "but",   "by",
    "can",  "could", "do",    "does",  "each", "for",   "from",  "get",   "had",
    "has",  "have",  "he",    "her",   "him",  "his",   "how",   "if",    "in",
    "into", "is",    "it",    "its",   "ll",   "m",     "me",    "much",  "my",
    "no",   "not",   "on",    "or",    "our",  "over",  "re",    "s",     "shall",
    "she",  "should", "some", "t",     "their", "them", "then",  "there", "these",
    "they", "this",  "those", "us",    "ve",   "was",   "we",    "were",  "what",
    "when", "where", "which", "while", "who",  "whom",  "why",   "will",  "with",
    "would", "you",  "your",
};

std::set<std::string> tokenize(std::string_view text, const StopWords& stop_words) {
  std::set<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      if (stop_words.find(current) == stop_words.end()) out.insert(current);
      current.clear();
    }
  };
  for (unsigned char c : text) {
    if (token_char(c)) {
      current.push_back(ascii_lower(c));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

void AliasTable::add_class(const std::vector<NormalizedLabel>& members) {
  const std::string* previous = nullptr;
  for (const NormalizedLabel& member : members) {
    if (member.value.empty()) continue;
    parent_.try_emplace(member.value, member.value);
    if (previous != nullptr) {
      std::string left_root = find_root(*previous);
      std::string right_root = find_root(member.value);
      if (left_root != right_root) parent_[left_root] = right_root;
    }
    previous = &member.value;
  }
}

NormalizedLabel AliasTable::resolve(const NormalizedLabel& label) const {
  return {find_root(label.value)};
}

bool AliasTable::same_class(const NormalizedLabel& a, const NormalizedLabel& b) const {
  return find_root(a.value) == find_root(b.value);
}

std::vector<std::string> AliasTable::class_members(const NormalizedLabel& label) const {
  std::vector<std::string> out;
  std::string root = find_root(label.value);
  for (const auto& [value, _] : parent_) {
    if (find_root(value) == root) out.push_back(value);
  }
  if (parent_.find(label.value) == parent_.end()) out.push_back(label.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> AliasTable::classes() const {
  std::map<std::string, std::vector<std::string>> by_root;
  for (const auto& [value, _] : parent_) {
    by_root[find_root(value)].push_back(value);
  }
  std::vector<std::vector<std::string>> out;
  out.reserve(by_root.size());
  for (auto& [_, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::string AliasTable::find_root(std::string value) const {
  auto it = parent_.find(value);
  while (it != parent_.end() && it->second != value) {
    value = it->second;
    it = parent_.find(value);
  }
  return value;
}

}  // namespace mmlint
