#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// nauty graph6 short form (n <= 62). Errors name the offending byte offset.
Graph parse_graph6(const std::string& line);
std::string serialize_graph6(const Graph& g);

// Plain edge list: "n m" on the first line, then m lines "u v" (0-based).
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Newline-separated graph6 lines; an optional ">>graph6<<" header is skipped,
// blank lines are ignored.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Streaming variant for large corpora; stops early if fn returns false.
void for_each_graph6(std::istream& in, const std::function<bool(Graph&&, const std::string&)>& fn);

}  // namespace rigidity
