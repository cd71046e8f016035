#include <algorithm>
#include <vector>

#include "rigid/certify.hpp"

namespace rigid {

namespace {

// (2,3) pebble game on a directed pebble graph. Every vertex starts with two
// pebbles; an edge is independent when four pebbles can be gathered on its
// endpoints, after which it is oriented away from the endpoint that pays.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(static_cast<std::size_t>(n), 2), out_(static_cast<std::size_t>(n)) {}

  bool insert(int u, int v) {
    while (pebbles_[u] < 2 && gather(u, v)) {}
    while (pebbles_[v] < 2 && gather(v, u)) {}
    if (pebbles_[u] + pebbles_[v] < 4) return false;
    out_[u].push_back(v);
    --pebbles_[u];
    return true;
  }

 private:
  // Depth-first search from root along directed edges for a free pebble,
  // never touching `keep`. The path found is reversed, moving the pebble to root.
  bool gather(int root, int keep) {
    const std::size_t n = pebbles_.size();
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    seen[keep] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : out_[x]) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = x;
        if (pebbles_[w] > 0) {
          --pebbles_[w];
          ++pebbles_[root];
          for (int y = w; y != root; y = parent[y]) reverse(parent[y], y);
          return true;
        }
        stack.push_back(w);
      }
    }
    return false;
  }

  void reverse(int from, int to) {
    auto& edges = out_[from];
    edges.erase(std::find(edges.begin(), edges.end(), to));
    out_[to].push_back(from);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

int pebble_game_independent_edges(const TensegrityGraph& g) {
  PebbleGame game(g.vertex_count());
  int independent = 0;
  for (const Member& m : g.members()) {
    if (game.insert(m.ends.first(), m.ends.second())) ++independent;
  }
  return independent;
}

bool pebble_game_rigid_2d(const TensegrityGraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return true;
  return pebble_game_independent_edges(g) == 2 * n - 3;
}

}  // namespace rigid
