#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace komori {

/// Base of every error thrown by the core library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files or records. The CLI maps these to exit code 2.
class FormatError : public Error {
public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}

  /// 1-based line number of the offending record, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class DuplicateGloss : public FormatError {
public:
  DuplicateGloss(std::string gloss, std::size_t line)
      : FormatError("duplicate gloss '" + gloss + "' at line " + std::to_string(line), line),
        gloss_(std::move(gloss)) {}

  const std::string& gloss() const noexcept { return gloss_; }

private:
  std::string gloss_;
};

class MalformedRow : public FormatError {
public:
  MalformedRow(std::size_t line, const std::string& reason)
      : FormatError("malformed row at line " + std::to_string(line) + ": " + reason, line) {}
};

/// Input that is well formed but on which an operation is undefined.
/// The CLI maps these to exit code 3.
class DomainError : public Error {
public:
  using Error::Error;
};

class UnknownLanguage : public DomainError {
public:
  explicit UnknownLanguage(std::string lang)
      : DomainError("unknown language '" + lang + "'"), lang_(std::move(lang)) {}

  const std::string& language() const noexcept { return lang_; }

private:
  std::string lang_;
};

class NoComparablePairs : public DomainError {
public:
  NoComparablePairs(std::string a, std::string b)
      : DomainError("no concept has forms in both '" + a + "' and '" + b + "'"),
        first_(std::move(a)), second_(std::move(b)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

private:
  std::string first_;
  std::string second_;
};

/// Normalized distance of two empty words (division by a zero length).
class BothEmpty : public DomainError {
public:
  BothEmpty() : DomainError("normalized distance is undefined for two empty words") {}
};

class EmptyLexicon : public DomainError {
public:
  EmptyLexicon() : DomainError("cannot index an empty lexicon") {}
};

class LengthMismatch : public FormatError {
public:
  LengthMismatch(std::size_t refs, std::size_t hyps)
      : FormatError("reference count " + std::to_string(refs) + " != hypothesis count " +
                        std::to_string(hyps),
                    0),
        refs_(refs), hyps_(hyps) {}

  std::size_t refs() const noexcept { return refs_; }
  std::size_t hyps() const noexcept { return hyps_; }

private:
  std::size_t refs_;
  std::size_t hyps_;
};

class EmptyReference : public FormatError {
public:
  explicit EmptyReference(std::size_t index)
      : FormatError("reference " + std::to_string(index) + " is empty after tokenization",
                    index + 1),
        index_(index) {}

  /// 0-based index of the empty reference.
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

}  // namespace komori
