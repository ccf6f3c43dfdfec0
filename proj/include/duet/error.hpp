#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace duet {

// Process exit codes shared between library error types and the CLI.
enum class ExitCode : int {
  ok = 0,
  usage = 2,
  data = 3,
  numeric = 4,
  config = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, std::string_view tag, const std::string& what)
      : std::runtime_error(what), code_(code), tag_(tag) {}

  ExitCode exit_code() const { return code_; }

  // Stable machine-readable identifier, e.g. "schema_error".
  const std::string& tag() const { return tag_; }

 private:
  ExitCode code_;
  std::string tag_;
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& w) : Error(ExitCode::data, "argument_error", w) {}
};

struct StateError : Error {
  explicit StateError(const std::string& w) : Error(ExitCode::data, "state_error", w) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& w) : Error(ExitCode::data, "schema_error", w) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& w, long line)
      : Error(ExitCode::data, "parse_error", w + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ExitCode::numeric, "numeric_error", w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ExitCode::config, "config_error", w) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ExitCode::usage, "usage_error", w) {}
};

}  // namespace duet
