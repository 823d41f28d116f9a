#pragma once

#include <iosfwd>
#include <string>

#include "treematch/graph.hpp"

namespace treematch {

// Text graph format:
//   c <comment>
//   p <n> <m>
//   e <u> <v> [<w>]      (m lines, 0-based ids, weight defaults to 0)
// Parse failures throw Error(ParseError) naming the offending line.

WeightedGraph readGraph(std::istream& in);
WeightedGraph readGraphFile(const std::string& path);
WeightedGraph parseGraph(const std::string& text);

/// Edges are written in id order, so reading the output back yields an equal graph.
void writeGraph(std::ostream& out, const WeightedGraph& g);
std::string formatGraph(const WeightedGraph& g);
void writeGraphFile(const std::string& path, const WeightedGraph& g);

}  // namespace treematch
