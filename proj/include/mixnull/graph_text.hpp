#pragma once

#include <string>
#include <string_view>

#include "mixnull/graph.hpp"

namespace mixnull {

// Plain-text mixed graph format, one graph per document:
//
//   n <order>
//   e <u> <v> <s>      s in {u, f, b}; f means directed u -> v
//
// '#' starts a comment. serialize() always emits u < v in sorted order.

/// Throws InputError with a "line N:" prefix on malformed text, loops,
/// repeated edges or vertex indices >= order.
MixedGraph parse_graph(std::string_view text);

std::string serialize_graph(const MixedGraph& g);

char state_code(EdgeState s);

}  // namespace mixnull
