#include "mixnull/errors.hpp"
#include "mixnull/invariants.hpp"

namespace mixnull {
namespace {

MixedGraph delete_pendant_edge(const MixedGraph& g, VertexId pendant) {
  const VertexId pair[] = {pendant, g.neighbors(pendant)[0]};
  return delete_vertices(g, pair).graph;
}

}  // namespace

MixedGraph ped(const MixedGraph& g) {
  const auto pendants = pendant_vertices(g);
  if (pendants.empty()) throw InputError("pendant edge deletion needs a pendant vertex");
  return delete_pendant_edge(g, pendants.front());
}

MixedGraph ped_closure(const MixedGraph& g) {
  MixedGraph cur = g;
  for (;;) {
    const auto pendants = pendant_vertices(cur);
    if (pendants.empty()) return cur;
    const auto membership = cycle_membership(underlying(cur));
    VertexId chosen = pendants.front();
    for (VertexId x : pendants) {
      if (membership[cur.neighbors(x)[0]] == CycleMembership::None) {
        chosen = x;
        break;
      }
    }
    cur = delete_pendant_edge(cur, chosen);
  }
}

}  // namespace mixnull
