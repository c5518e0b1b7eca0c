#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmlint {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

enum class ModelErrorKind {
  DuplicateId,
  DuplicateLabelInSet,
  EmptyLabel,
  CycleDetected,
  UnknownNode,
};

/// A model violates one of the MotivationalModel invariants.
class ModelError : public Error {
public:
  ModelError(ModelErrorKind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  ModelErrorKind kind() const { return kind_; }

private:
  ModelErrorKind kind_;
};

/// A text artifact could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(std::string file, int line, std::string reason)
      : Error(format(file, line, reason)),
        file_(std::move(file)),
        line_(line),
        reason_(std::move(reason)) {}

  ParseError(int line, std::string reason) : ParseError("", line, std::move(reason)) {}
  explicit ParseError(std::string reason) : ParseError("", 0, std::move(reason)) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

private:
  static std::string format(const std::string& file, int line, const std::string& reason) {
    std::string out;
    if (!file.empty()) {
      out += file;
      out += ":";
    }
    if (line > 0) {
      out += std::to_string(line);
      out += ":";
    }
    if (!out.empty()) out += " ";
    out += reason;
    return out;
  }

  std::string file_;
  int line_;
  std::string reason_;
};

class DuplicateStoryIdError : public ParseError {
public:
  DuplicateStoryIdError(std::string file, int line, std::string story_id)
      : ParseError(std::move(file), line, "duplicate story id \"" + story_id + "\""),
        story_id_(std::move(story_id)) {}

  const std::string& story_id() const { return story_id_; }

private:
  std::string story_id_;
};

class MissingFieldError : public ParseError {
public:
  MissingFieldError(std::string file, std::string field)
      : ParseError(std::move(file), 0, "missing required field \"" + field + "\""),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// Story text does not match the "As a <role>, I want <want> so that <purpose>" template.
class TemplateMismatchError : public Error {
public:
  TemplateMismatchError(std::string segment, const std::string& reason)
      : Error(reason + " near \"" + segment + "\""), segment_(std::move(segment)) {}

  const std::string& segment() const { return segment_; }

private:
  std::string segment_;
};

/// A label lookup matched more than one distinct entry after normalization.
class AmbiguousLabelError : public Error {
public:
  AmbiguousLabelError(std::string kind_word, std::string label,
                      std::vector<std::string> candidates)
      : Error(format(kind_word, label, candidates)),
        kind_word_(std::move(kind_word)),
        label_(std::move(label)),
        candidates_(std::move(candidates)) {}

  const std::string& kind_word() const { return kind_word_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& candidates() const { return candidates_; }

private:
  static std::string format(const std::string& kind_word, const std::string& label,
                            const std::vector<std::string>& candidates) {
    std::string out = "ambiguous " + kind_word + " label \"" + label + "\" matches: ";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (i > 0) out += ", ";
      out += candidates[i];
    }
    return out;
  }

  std::string kind_word_;
  std::string label_;
  std::vector<std::string> candidates_;
};

/// scaffold_stories cannot pick a role placeholder.
class ScaffoldError : public Error {
public:
  using Error::Error;
};

}  // namespace mmlint
