#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "cheegerlab/graph.hpp"

namespace cheegerlab {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n 7          optional header fixing the vertex count (before any edge)
//   0 1          one edge per line, two non-negative integers
//
// Blank lines are ignored. Without a header the vertex count is the largest
// index plus one. Syntax problems raise ParseError; structural problems raise
// the matching validation error. Both carry the offending line number.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);

/// One "u v" line per canonical edge, preceded by a "# ..." line per comment.
/// No header is written: graphs have no isolated vertices, so the largest
/// index already fixes the vertex count.
void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});
std::string to_edge_list(const Graph& g, std::span<const std::string> comments = {});

}  // namespace cheegerlab
