#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mmlint {

/// Canonical spelling of a label: surrounding whitespace and punctuation removed,
/// inner whitespace collapsed to single spaces, ASCII letters case-folded.
/// Normalization is idempotent; empty input stays empty.
struct NormalizedLabel {
  std::string value;
  auto operator<=>(const NormalizedLabel&) const = default;
};

NormalizedLabel normalize_label(std::string_view text);

/// Identifier-safe slug, e.g. "Add a new version" -> "add-a-new-version".
/// Falls back to "goal" when nothing survives.
std::string slugify(std::string_view label);

using StopWords = std::set<std::string, std::less<>>;

/// Fixed list used by suggest_links scoring.
extern const StopWords kSuggestStopWords;

/// Wider function-word list used by the purpose-alignment check.
extern const StopWords kPurposeStopWords;

/// Lowercased alphanumeric runs of `text`, minus stop words. Bytes >= 0x80 are
/// treated as token characters so UTF-8 content stays intact.
std::set<std::string> tokenize(std::string_view text, const StopWords& stop_words);

/// Equivalence classes of label spellings. Within a declared class the
/// right-hand side wins as the representative ("alias = canonical"), and a
/// later declaration may re-root an earlier class.
class AliasTable {
public:
  /// Unions all members into one class, left to right. Empty members are skipped.
  void add_class(const std::vector<NormalizedLabel>& members);

  /// Canonical representative of the label's class; the label itself if unaliased.
  NormalizedLabel resolve(const NormalizedLabel& label) const;

  bool same_class(const NormalizedLabel& a, const NormalizedLabel& b) const;

  /// All declared spellings in the label's class, including the label itself. Sorted.
  std::vector<std::string> class_members(const NormalizedLabel& label) const;

  /// Every class with its members, sorted; used for digests and debugging.
  std::vector<std::vector<std::string>> classes() const;

  bool empty() const { return parent_.empty(); }

private:
  std::string find_root(std::string value) const;

  std::map<std::string, std::string> parent_;
};

}  // namespace mmlint
