#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lecq {

// Malformed or inconsistent RDF data.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  // 1-based line of the offending input, 0 if not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid SPARQL that lies outside the supported BGP subset.
class UnsupportedFeatureError : public QueryError {
 public:
  using QueryError::QueryError;
};

class PartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lecq
