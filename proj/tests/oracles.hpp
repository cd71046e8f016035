#pragma once

// Independent reference computations used to freeze expected values. Nothing
// here calls into the library's numerics.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int exact_rank(std::vector<std::vector<long long>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Rigidity matrix of an integer planar configuration, built from scratch.
inline std::vector<std::vector<long long>> integer_rigidity_matrix(
    const std::vector<std::pair<long long, long long>>& pts, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<long long>> r(edges.size(), std::vector<long long>(2 * n, 0));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    const long long dx = pts[i].first - pts[j].first;
    const long long dy = pts[i].second - pts[j].second;
    r[k][2 * i] = dx;
    r[k][2 * i + 1] = dy;
    r[k][2 * j] = -dx;
    r[k][2 * j + 1] = -dy;
  }
  return r;
}

/// Rank by full-pivot LU with a relative threshold (different algorithm from
/// the library's SVD).
inline int lu_rank(const Eigen::MatrixXd& m, double rel = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(rel);
  return static_cast<int>(lu.rank());
}

/// Stress matrix from an edge list and per-edge stresses.
inline Eigen::MatrixXd stress_matrix(int n, const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<double>& w) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    s(i, j) -= w[k];
    s(j, i) -= w[k];
    s(i, i) += w[k];
    s(j, j) += w[k];
  }
  return s;
}

/// (2,3)-sparsity rank by matroid greedy with brute-force subset counts.
/// Exponential in n; meant for n <= 10.
inline int laman_rank(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> kept;
  for (const auto& e : edges) {
    kept.push_back(e);
    bool sparse = true;
    for (std::uint32_t mask = 0; mask < (1u << n) && sparse; ++mask) {
      const int k = __builtin_popcount(mask);
      if (k < 2) continue;
      int inside = 0;
      for (const auto& [a, b] : kept)
        if ((mask >> a & 1u) && (mask >> b & 1u)) ++inside;
      if (inside > 2 * k - 3) sparse = false;
    }
    if (!sparse) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

/// Smallest number of vertices whose removal disconnects the graph, or n - 1
/// for complete graphs. Brute force over all vertex subsets.
inline int brute_connectivity(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int removed = __builtin_popcount(mask);
    if (removed >= best || n - removed < 2) continue;
    // Union-find over the remaining vertices.
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [a, b] : edges)
      if (!(mask >> a & 1u) && !(mask >> b & 1u)) parent[find(a)] = find(b);
    int root = -1;
    bool split = false;
    for (int v = 0; v < n && !split; ++v) {
      if (mask >> v & 1u) continue;
      if (root < 0) root = find(v);
      else if (find(v) != root) split = true;
    }
    if (split) best = removed;
  }
  return best;
}

/// Random orthogonal matrix from QR of a matrix with entries drawn by `draw`.
template <typename Draw>
Eigen::MatrixXd random_orthogonal(int n, Draw&& draw) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = draw();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace oracle
