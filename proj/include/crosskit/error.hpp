#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crosskit {

enum class ErrorCode {
  kEmptyPattern,
  kRuleAbsent,
  kEpsilonRule,
  kEpsilonAxiom,
  kEmptyAxioms,
  kEpsilonInLanguage,
  kEmptyWord,
  kInconsistentProfile,
  kRegexSyntax,
  kSchemaError,
  kNotAClosure,
  kAlphabetTooLarge,
  kWordSyntax,
  kInvalidArgument,
  kClosureDiverged,
};

/// Name used in messages and JSON reports, e.g. "EmptyPattern".
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Regex parse failure; position is 1-based over code points.
class RegexSyntaxError : public Error {
 public:
  RegexSyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::kRegexSyntax, "at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Automaton/system JSON that violates the schema; path is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(ErrorCode::kSchemaError, path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace crosskit
