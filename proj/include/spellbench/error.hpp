#pragma once

#include <stdexcept>
#include <string>

namespace spellbench {

// Base for all toolkit errors. Subtypes map onto CLI exit codes:
// user/config/input problems exit 1, anything else exits 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad flags, inconsistent settings, mismatched table modes.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed input files (TSV/JSON/CSV schema violations).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Filesystem failures.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

}  // namespace spellbench
