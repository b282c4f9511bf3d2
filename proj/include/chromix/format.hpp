#pragma once

#include <chromix/core.hpp>

#include <string>
#include <string_view>

namespace chromix {

// Line-oriented UTF-8 text, '#' starts a comment, blank lines ignored.
//
//   nmgraph <n> <m>
//   vertices <N>
//   label <i> <text>        (optional, text runs to end of line)
//   arc <tail> <head> <type>
//   edge <u> <v> <type>
//
// and for plain graphs
//
//   graph
//   vertices <N>
//   edge <u> <v>
//
// Parse errors carry the offending line number and a distinct kind
// (syntax / type range / duplicate adjacency / loop / signature).

auto parse_nmgraph(std::string_view text) -> NmGraph;
auto serialize(const NmGraph & g) -> std::string;

auto parse_undirected(std::string_view text) -> UndirectedGraph;
auto serialize(const UndirectedGraph & g) -> std::string;

} // namespace chromix
