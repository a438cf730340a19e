#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class DimacsErrorKind {
  MalformedLine,
  MissingHeader,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  EdgeCountMismatch,
};

class DimacsError : public std::runtime_error {
 public:
  DimacsError(DimacsErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  DimacsErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  DimacsErrorKind kind_;
  int line_;
};

/// Parses "p edge n m" followed by m lines "e i j" with 1-based ids.
/// Lines starting with 'c' and blank lines are ignored.
Graph read_dimacs(std::string_view text);

/// Canonical form: header, then edges (i < j) in lexicographic order, 1-based.
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace hopdom
