#pragma once

#include <stdexcept>
#include <string>

namespace farey {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (matrices, fractions, symbols, group specs).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally well-formed input violating a precondition or invariant.
// For symbols, `edge` is the offending edge index (-1 if not edge-specific).
struct ValidationError : Error {
  long edge;
  explicit ValidationError(const std::string& what, long edge_index = -1)
      : Error(what), edge(edge_index) {}
};

// A resource cap was hit (BFS index cap, construction edge cap, ...).
struct CapError : Error {
  explicit CapError(const std::string& what) : Error(what) {}
};

// Signals a broken internal invariant, e.g. an invalid symbol that slipped
// through validation.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace farey
