#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "orientdia/graph.hpp"

namespace orientdia {

// Edge-list text format:
//   # optional comment lines
//   n m
//   u v      (m lines, 0 <= u,v < n, u != v)
// The arc-list format is identical with each line read as the arc u->v.
// Parse failures throw InputError naming the offending line number.

MultiGraph parse_edge_list(std::string_view text);
Digraph parse_arc_list(std::string_view text);

MultiGraph load_edge_list(const std::string& path);
Digraph load_arc_list(const std::string& path);

std::string to_edge_list(const MultiGraph& g);
std::string to_arc_list(const Digraph& d);
std::string to_dot(const Digraph& d);

void save_text(const std::string& path, std::string_view text);

}  // namespace orientdia
