#pragma once

#include <iosfwd>
#include <string>

#include "homcyl/graph.hpp"

namespace homcyl {

/**
 * Native graph text format:
 *
 *   graph <name> <n>
 *   v <label>            (n lines; order fixes vertex indices)
 *   e <label> <label>    (loops allowed as `e x x`)
 *
 * Blank lines and `#` comments are ignored. Parse errors carry line numbers.
 */
Graph read_graph(std::istream& in, const std::string& origin = "<stream>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// DIMACS .col import (`p edge n m`, `e u v` with 1-based indices, `c`
/// comments). Loops are rejected.
Graph read_dimacs(std::istream& in, const std::string& name = "dimacs");
Graph read_dimacs_file(const std::string& path);

/// Reads either format, picking by extension (.col -> DIMACS).
Graph read_graph_auto(const std::string& path);

std::string graph_to_dot(const Graph& g);

}  // namespace homcyl
