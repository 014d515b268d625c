#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "compidx/digraph.hpp"
#include "compidx/simple_graph.hpp"

namespace compidx {

// Text interchange format, line oriented, '#' starts a comment:
//
//   digraph <n>
//   parts <p0> ... <p{n-1}>     (optional; declares a multipartite tournament)
//   <u> <v>                     (one arc per line)
//
// read_digraph() also accepts the DOT produced by to_dot(const Digraph&).

Digraph parse_digraph(std::string_view text);
Digraph read_digraph(const std::filesystem::path& path);

std::string to_text(const Digraph& d);
void write_digraph(const std::filesystem::path& path, const Digraph& d);

/// DOT with vertices "v0".. ascending and arcs in lexicographic order.
std::string to_dot(const Digraph& d);
/// Same conventions for an undirected graph; `name` is the graph id.
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace compidx
