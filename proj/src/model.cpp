#include "rigid/model.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "rigid/error.hpp"
#include "rigid/linalg.hpp"

namespace rigid {

namespace {

void require_same_shape(const Configuration& p, const Configuration& q) {
  if (p.size() != q.size() || p.dimension() != q.dimension()) {
    throw InputError("configurations differ in shape: " + std::to_string(p.size()) + "x" +
                     std::to_string(p.dimension()) + " vs " + std::to_string(q.size()) + "x" +
                     std::to_string(q.dimension()));
  }
}

double distance(const Configuration& p, int i, int j) {
  return (p.points().row(i) - p.points().row(j)).norm();
}

}  // namespace

Configuration::Configuration(int dimension, Eigen::MatrixXd points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ < 1) throw InputError("dimension must be positive");
  if (points_.rows() < 1) throw InputError("configuration needs at least one point");
  if (points_.cols() != dimension_) {
    throw InputError("points have " + std::to_string(points_.cols()) +
                     " coordinates, expected " + std::to_string(dimension_));
  }
  if (!points_.allFinite()) throw InputError("configuration has non-finite coordinates");
}

static Eigen::MatrixXd to_matrix(int dimension, const std::vector<std::vector<double>>& points) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), std::max(dimension, 0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != dimension) {
      throw InputError("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                       " coordinates, expected " + std::to_string(dimension));
    }
    for (int k = 0; k < dimension; ++k) m(static_cast<Eigen::Index>(i), k) = points[i][k];
  }
  return m;
}

Configuration::Configuration(int dimension, const std::vector<std::vector<double>>& points)
    : Configuration(dimension, to_matrix(dimension, points)) {}

Eigen::VectorXd Configuration::point(int i) const {
  if (i < 0 || i >= size()) throw InputError("point index out of range: " + std::to_string(i));
  return points_.row(i).transpose();
}

double Configuration::max_abs_coordinate() const { return points_.cwiseAbs().maxCoeff(); }

int Configuration::affine_dimension(double rank_threshold_factor) const {
  if (size() < 2) return 0;
  const Eigen::RowVectorXd centroid = points_.colwise().mean();
  const Eigen::MatrixXd centered = points_.rowwise() - centroid;
  // An all-coincident configuration is rank 0 regardless of threshold.
  if (centered.cwiseAbs().maxCoeff() <= 1e-14 * (1.0 + max_abs_coordinate())) return 0;
  return numeric_rank(centered, NumericTolerance{rank_threshold_factor, 1e-9});
}

std::string_view to_string(MemberKind kind) {
  switch (kind) {
    case MemberKind::Cable: return "cable";
    case MemberKind::Strut: return "strut";
    case MemberKind::Bar: return "bar";
  }
  return "bar";
}

std::optional<MemberKind> parse_member_kind(std::string_view text) {
  if (text == "cable") return MemberKind::Cable;
  if (text == "strut") return MemberKind::Strut;
  if (text == "bar") return MemberKind::Bar;
  return std::nullopt;
}

VertexPair::VertexPair(int a, int b) : first_(std::min(a, b)), second_(std::max(a, b)) {}

TensegrityGraph::TensegrityGraph(int vertex_count, std::vector<Member> members)
    : vertex_count_(vertex_count), members_(std::move(members)) {
  if (vertex_count_ < 1) throw InputError("vertex count must be positive");
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const VertexPair& e = members_[k].ends;
    if (e.first() == e.second()) {
      throw InputError("member " + std::to_string(k) + " is a loop at vertex " +
                       std::to_string(e.first()));
    }
    if (e.first() < 0 || e.second() >= vertex_count_) {
      throw InputError("member " + std::to_string(k) + " {" + std::to_string(e.first()) + "," +
                       std::to_string(e.second()) + "} is out of range for " +
                       std::to_string(vertex_count_) + " vertices");
    }
    if (!index_.emplace(e, k).second) {
      throw InputError("duplicate member {" + std::to_string(e.first()) + "," +
                       std::to_string(e.second()) + "}");
    }
  }
}

std::optional<std::size_t> TensegrityGraph::index_of(VertexPair pair) const {
  auto it = index_.find(pair);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Member& TensegrityGraph::member(VertexPair pair) const {
  auto idx = index_of(pair);
  if (!idx) {
    throw InputError("{" + std::to_string(pair.first()) + "," + std::to_string(pair.second()) +
                     "} is not a member");
  }
  return members_[*idx];
}

bool TensegrityGraph::all_bars() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](const Member& m) { return m.kind == MemberKind::Bar; });
}

bool TensegrityGraph::is_complete() const {
  const auto n = static_cast<std::size_t>(vertex_count_);
  return members_.size() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> TensegrityGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
  for (const Member& m : members_) {
    adj[m.ends.first()].push_back(m.ends.second());
    adj[m.ends.second()].push_back(m.ends.first());
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool TensegrityGraph::is_connected() const {
  const auto adj = adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == adj.size();
}

TensegrityGraph TensegrityGraph::with_member(Member m) const {
  auto members = members_;
  members.push_back(m);
  return TensegrityGraph(vertex_count_, std::move(members));
}

TensegrityGraph TensegrityGraph::without_member(VertexPair pair) const {
  auto members = members_;
  auto it = std::find_if(members.begin(), members.end(),
                         [&](const Member& m) { return m.ends == pair; });
  if (it == members.end()) {
    throw InputError("{" + std::to_string(pair.first()) + "," + std::to_string(pair.second()) +
                     "} is not a member");
  }
  members.erase(it);
  return TensegrityGraph(vertex_count_, std::move(members));
}

Framework::Framework(TensegrityGraph graph, Configuration configuration)
    : graph_(std::move(graph)), configuration_(std::move(configuration)) {
  if (graph_.vertex_count() != configuration_.size()) {
    throw InputError("graph has " + std::to_string(graph_.vertex_count()) +
                     " vertices but configuration has " + std::to_string(configuration_.size()) +
                     " points");
  }
}

Framework Framework::with_configuration(Configuration q) const { return Framework(graph_, std::move(q)); }

Stress::Stress(std::map<VertexPair, double> values) : values_(std::move(values)) {
  for (const auto& [pair, w] : values_) {
    if (pair.first() == pair.second()) throw InputError("stress keyed by a loop");
    if (!std::isfinite(w)) throw InputError("stress value is not finite");
  }
}

Stress Stress::zero(const TensegrityGraph& graph) {
  std::map<VertexPair, double> values;
  for (const Member& m : graph.members()) values.emplace(m.ends, 0.0);
  return Stress(std::move(values));
}

Stress Stress::from_vector(const TensegrityGraph& graph, const Eigen::VectorXd& values) {
  if (static_cast<std::size_t>(values.size()) != graph.member_count()) {
    throw InputError("stress vector has " + std::to_string(values.size()) + " entries for " +
                     std::to_string(graph.member_count()) + " members");
  }
  std::map<VertexPair, double> out;
  const auto members = graph.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    out.emplace(members[k].ends, values(static_cast<Eigen::Index>(k)));
  }
  return Stress(std::move(out));
}

double Stress::at(VertexPair pair) const {
  auto it = values_.find(pair);
  return it == values_.end() ? 0.0 : it->second;
}

double Stress::max_abs() const {
  double m = 0.0;
  for (const auto& [pair, w] : values_) m = std::max(m, std::abs(w));
  return m;
}

bool Stress::is_zero() const { return max_abs() == 0.0; }

bool Stress::keyed_by(const TensegrityGraph& graph) const {
  if (values_.size() != graph.member_count()) return false;
  return std::all_of(values_.begin(), values_.end(),
                     [&](const auto& kv) { return graph.contains(kv.first); });
}

void Stress::require_keyed_by(const TensegrityGraph& graph) const {
  if (keyed_by(graph)) return;
  for (const auto& [pair, w] : values_) {
    if (!graph.contains(pair)) {
      throw InputError("stress has a value on {" + std::to_string(pair.first()) + "," +
                       std::to_string(pair.second()) + "}, which is not a member");
    }
  }
  for (const Member& m : graph.members()) {
    if (!values_.contains(m.ends)) {
      throw InputError("stress is missing member {" + std::to_string(m.ends.first()) + "," +
                       std::to_string(m.ends.second()) + "}");
    }
  }
}

Eigen::VectorXd Stress::to_vector(const TensegrityGraph& graph) const {
  require_keyed_by(graph);
  Eigen::VectorXd out(static_cast<Eigen::Index>(graph.member_count()));
  const auto members = graph.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    out(static_cast<Eigen::Index>(k)) = values_.at(members[k].ends);
  }
  return out;
}

Stress Stress::scaled(double factor) const {
  auto values = values_;
  for (auto& [pair, w] : values) w *= factor;
  return Stress(std::move(values));
}

double default_tolerance(const Configuration& p) { return 1e-9 * (1.0 + p.max_abs_coordinate()); }

double member_length(const Framework& f, VertexPair m) {
  f.graph().member(m);
  return distance(f.configuration(), m.first(), m.second());
}

bool dominates(const Framework& strong, const Configuration& weak, double tol) {
  require_same_shape(strong.configuration(), weak);
  for (const Member& m : strong.graph().members()) {
    const double before = distance(strong.configuration(), m.ends.first(), m.ends.second());
    const double after = distance(weak, m.ends.first(), m.ends.second());
    switch (m.kind) {
      case MemberKind::Cable:
        if (after > before + tol) return false;
        break;
      case MemberKind::Strut:
        if (after < before - tol) return false;
        break;
      case MemberKind::Bar:
        if (std::abs(after - before) > tol) return false;
        break;
    }
  }
  return true;
}

bool equivalent(const Framework& f, const Configuration& q, double tol) {
  require_same_shape(f.configuration(), q);
  for (const Member& m : f.graph().members()) {
    const double before = distance(f.configuration(), m.ends.first(), m.ends.second());
    const double after = distance(q, m.ends.first(), m.ends.second());
    if (std::abs(after - before) > tol) return false;
  }
  return true;
}

bool congruent(const Configuration& p, const Configuration& q, double tol) {
  require_same_shape(p, q);
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (std::abs(distance(p, i, j) - distance(q, i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace rigid
