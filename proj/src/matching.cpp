#include <algorithm>
#include <deque>
#include <string>

#include "mixnull/errors.hpp"
#include "mixnull/invariants.hpp"

namespace mixnull {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Edmonds' algorithm with explicit blossom bases (O(V^3)).
class Blossom {
 public:
  explicit Blossom(const UnderlyingGraph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  Matching run() {
    // Greedy start shortens the search considerably on small dense graphs.
    for (const Edge& e : g_.edges()) {
      if (match_[e.u] == kNone && match_[e.v] == kNone) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
    for (VertexId root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      VertexId end = find_path(root);
      while (end != kNone) {
        const VertexId pv = parent_[end];
        const VertexId next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    Matching m;
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) m.edges.push_back({v, match_[v]});
    }
    return m;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const VertexId cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  const UnderlyingGraph& g_;
  std::size_t n_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::size_t brute(std::span<const Edge> edges, std::size_t next, std::vector<bool>& busy,
                  std::size_t chosen, std::size_t best) {
  if (chosen + (edges.size() - next) <= best) return best;
  if (next == edges.size()) return std::max(best, chosen);
  const Edge& e = edges[next];
  if (!busy[e.u] && !busy[e.v]) {
    busy[e.u] = busy[e.v] = true;
    best = brute(edges, next + 1, busy, chosen + 1, best);
    busy[e.u] = busy[e.v] = false;
  }
  return brute(edges, next + 1, busy, chosen, best);
}

bool extend_alternating(const UnderlyingGraph& g, const std::vector<VertexId>& mate,
                        std::vector<VertexId>& path, std::vector<bool>& on_path) {
  // The path ends at a vertex reached through a matched edge (or the free
  // start); the next step must use an unmatched edge.
  const VertexId tail = path.back();
  for (VertexId y : g.neighbors(tail)) {
    if (on_path[y] || mate[tail] == y) continue;
    if (mate[y] == kNone) {
      path.push_back(y);
      return true;
    }
    const VertexId z = mate[y];
    if (on_path[z]) continue;
    path.push_back(y);
    path.push_back(z);
    on_path[y] = on_path[z] = true;
    if (extend_alternating(g, mate, path, on_path)) return true;
    on_path[y] = on_path[z] = false;
    path.pop_back();
    path.pop_back();
  }
  return false;
}

}  // namespace

Matching maximum_matching(const UnderlyingGraph& g) { return Blossom(g).run(); }

std::size_t matching_number(const UnderlyingGraph& g) { return maximum_matching(g).size(); }

std::size_t matching_bruteforce(const UnderlyingGraph& g) {
  if (g.size() > kBruteforceEdgeLimit) {
    throw InputError("matching_bruteforce: " + std::to_string(g.size()) + " edges exceeds limit " +
                     std::to_string(kBruteforceEdgeLimit));
  }
  std::vector<bool> busy(g.order(), false);
  return brute(g.edges(), 0, busy, 0, 0);
}

bool is_matching(const UnderlyingGraph& g, const Matching& m) {
  std::vector<bool> busy(g.order(), false);
  for (const Edge& e : m.edges) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
    if (busy[e.u] || busy[e.v]) return false;
    busy[e.u] = busy[e.v] = true;
  }
  return true;
}

std::optional<std::vector<VertexId>> find_augmenting_path(const UnderlyingGraph& g,
                                                          const Matching& m) {
  std::vector<VertexId> mate(g.order(), kNone);
  for (const Edge& e : m.edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  for (VertexId start = 0; start < g.order(); ++start) {
    if (mate[start] != kNone) continue;
    std::vector<VertexId> path{start};
    std::vector<bool> on_path(g.order(), false);
    on_path[start] = true;
    if (extend_alternating(g, mate, path, on_path)) return path;
  }
  return std::nullopt;
}

bool in_some_maximum_matching(const UnderlyingGraph& g, VertexId a, VertexId b) {
  if (!g.adjacent(a, b)) return false;
  const VertexId pair[] = {a, b};
  return matching_number(delete_vertices(g, pair).graph) + 1 == matching_number(g);
}

}  // namespace mixnull
