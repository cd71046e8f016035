#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "rigid/certify.hpp"
#include "rigid/error.hpp"

namespace rigid {

namespace {

constexpr int kExhaustiveLimit = 12;

bool connected_without(const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (removed[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == remaining;
}

// Does some subset of exactly `size` vertices (chosen from index `from`
// onward) disconnect the graph?
bool has_cut_of_size(const std::vector<std::vector<int>>& adj, std::vector<char>& removed, int from,
                     int size) {
  if (size == 0) return !connected_without(adj, removed);
  const int n = static_cast<int>(adj.size());
  for (int v = from; v <= n - size; ++v) {
    removed[v] = 1;
    const bool cut = has_cut_of_size(adj, removed, v + 1, size - 1);
    removed[v] = 0;
    if (cut) return true;
  }
  return false;
}

// Unit-capacity max flow on the vertex-split digraph; counts internally
// vertex-disjoint s-t paths, stopping at cap.
int local_connectivity(const std::vector<std::vector<int>>& adj, int s, int t, int cap) {
  const int n = static_cast<int>(adj.size());
  struct Arc {
    int to;
    int capacity;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
  auto add = [&](int a, int b, int capacity) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, capacity});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n + 1;
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) add(2 * v + 1, 2 * w, big);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> via(static_cast<std::size_t>(2 * n), -1);
    std::queue<int> frontier;
    frontier.push(source);
    via[source] = -2;
    while (!frontier.empty() && via[sink] == -1) {
      const int x = frontier.front();
      frontier.pop();
      for (int a : out[x]) {
        if (arcs[a].capacity > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          frontier.push(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      const int a = via[x];
      arcs[a].capacity -= 1;
      arcs[a ^ 1].capacity += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

namespace detail {

int vertex_connectivity_exhaustive(const TensegrityGraph& g, int cap) {
  const auto adj = g.adjacency();
  const int n = g.vertex_count();
  const int limit = std::min(cap, n - 1);
  std::vector<char> removed(adj.size(), 0);
  for (int size = 0; size < limit; ++size) {
    if (has_cut_of_size(adj, removed, 0, size)) return size;
  }
  return std::max(limit, 0);
}

int vertex_connectivity_flow(const TensegrityGraph& g, int cap) {
  const auto adj = g.adjacency();
  const int n = g.vertex_count();
  int best = std::min(cap, n - 1);
  // Any cut of size < best misses one of the first best + 1 vertices, so
  // those suffice as sources.
  for (int s = 0; s < n && s <= best; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s || std::binary_search(adj[s].begin(), adj[s].end(), t)) continue;
      best = std::min(best, local_connectivity(adj, s, t, best));
      if (best == 0) return 0;
    }
  }
  return std::max(best, 0);
}

}  // namespace detail

bool vertex_connectivity_at_least(const TensegrityGraph& g, int m) {
  if (m < 1) throw InputError("connectivity threshold must be at least 1");
  const int kappa = g.vertex_count() <= kExhaustiveLimit ? detail::vertex_connectivity_exhaustive(g, m)
                                                         : detail::vertex_connectivity_flow(g, m);
  return kappa >= m;
}

}  // namespace rigid
