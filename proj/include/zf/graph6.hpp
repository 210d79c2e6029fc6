#pragma once

#include <stdexcept>
#include <string>

#include "zf/graph.hpp"

namespace zf {

/// Raised for malformed graph6/sparse6 input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one graph6 line (">>graph6<<" header allowed). Vertex labels are
/// preserved exactly as encoded; no canonicalization.
Graph parse_graph6(const std::string& line);

/// Parses one sparse6 line (leading ':', ">>sparse6<<" header allowed).
Graph parse_sparse6(const std::string& line);

/// Dispatches on the leading ':' to parse either format.
Graph parse_graph_line(const std::string& line);

/// Canonical graph6 encoding of g under its current labeling: no header,
/// zero padding bits. parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

}  // namespace zf
