#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "mixnull/graph.hpp"

namespace mixnull {

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxCanonicalOrder = 11;
inline constexpr std::uint64_t kDefaultOrientationCap = 531441;  // 3^12

struct EnumerationScope {
  std::size_t n_min = 1;
  std::size_t n_max = 6;
  std::size_t e_max = 9;
  bool connected_only = true;
  std::uint64_t orientation_cap = kDefaultOrientationCap;
};

/// Upper-triangle adjacency bits, column by column ((0,1), (0,2), (1,2),
/// (0,3), ...), first pair most significant. Requires order <= 11.
std::uint64_t adjacency_code(const UnderlyingGraph& g);

/// Minimum adjacency_code over all relabelings. Labelings are restricted to
/// those ordering vertices by an isomorphism-invariant colour refinement,
/// which leaves the minimum an isomorphism invariant.
std::uint64_t canonical_code(const UnderlyingGraph& g);
UnderlyingGraph canonical_form(const UnderlyingGraph& g);
bool isomorphic(const UnderlyingGraph& a, const UnderlyingGraph& b);

/// Every graph in scope exactly once up to isomorphism, ordered by
/// (order, size, canonical code). Throws InputError if n_max exceeds
/// kMaxEnumerationOrder or n_min is not in 1..n_max.
std::vector<UnderlyingGraph> enumerate_underlying(const EnumerationScope& scope);

/// 3^|E|; throws InputError if that exceeds `cap`.
std::uint64_t orientation_count(const UnderlyingGraph& g, std::uint64_t cap);

/// States of orientation `index`: base-3 digit j (0 = u, 1 = f, 2 = b) is edge j.
std::vector<EdgeState> orientation_states(std::size_t edges, std::uint64_t index);

/// Index of the orientation with every directed edge reversed.
std::uint64_t converse_index(std::size_t edges, std::uint64_t index);

/// Visits all orientations in index order. With `halve`, an orientation is
/// skipped when its converse has a smaller index.
void for_each_orientation(const UnderlyingGraph& g, std::uint64_t cap, bool halve,
                          const std::function<void(const MixedGraph&, std::uint64_t)>& visit);

/// graph6 codec (standard 6-bit packing; orders up to 68719476735 in the header).
UnderlyingGraph parse_graph6(std::string_view line);
std::string to_graph6(const UnderlyingGraph& g);
/// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<UnderlyingGraph> read_graph6_stream(std::istream& in);

}  // namespace mixnull
