#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rigid {

/// Points p_0 .. p_{n-1} in d-dimensional Euclidean space, stored as an n x d
/// matrix (one point per row). Coincident points are allowed.
class Configuration {
 public:
  Configuration(int dimension, Eigen::MatrixXd points);
  Configuration(int dimension, const std::vector<std::vector<double>>& points);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.rows()); }
  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::VectorXd point(int i) const;

  /// Largest absolute coordinate value (0 for an all-zero configuration).
  double max_abs_coordinate() const;

  /// Dimension of the affine span of the points, via numeric rank of the
  /// centered coordinate matrix.
  int affine_dimension(double rank_threshold_factor = 1e-10) const;

  bool operator==(const Configuration&) const = default;

 private:
  int dimension_;
  Eigen::MatrixXd points_;
};

enum class MemberKind { Cable, Strut, Bar };

std::string_view to_string(MemberKind kind);
std::optional<MemberKind> parse_member_kind(std::string_view text);

/// Unordered vertex pair, stored canonically with first < second.
class VertexPair {
 public:
  VertexPair(int a, int b);

  int first() const { return first_; }
  int second() const { return second_; }
  bool contains(int v) const { return v == first_ || v == second_; }

  auto operator<=>(const VertexPair&) const = default;

 private:
  int first_;
  int second_;
};

struct Member {
  VertexPair ends;
  MemberKind kind = MemberKind::Bar;

  bool operator==(const Member&) const = default;
};

/// Vertex count plus a list of typed members. Member order is preserved and
/// defines the row order of the rigidity matrix.
class TensegrityGraph {
 public:
  TensegrityGraph(int vertex_count, std::vector<Member> members);

  int vertex_count() const { return vertex_count_; }
  std::span<const Member> members() const { return members_; }
  std::size_t member_count() const { return members_.size(); }

  std::optional<std::size_t> index_of(VertexPair pair) const;
  bool contains(VertexPair pair) const { return index_of(pair).has_value(); }
  /// Throws InputError when the pair is not a member.
  const Member& member(VertexPair pair) const;

  bool all_bars() const;
  bool is_complete() const;
  bool is_connected() const;
  std::vector<std::vector<int>> adjacency() const;

  TensegrityGraph with_member(Member m) const;
  TensegrityGraph without_member(VertexPair pair) const;

  bool operator==(const TensegrityGraph& other) const {
    return vertex_count_ == other.vertex_count_ && members_ == other.members_;
  }

 private:
  int vertex_count_;
  std::vector<Member> members_;
  std::map<VertexPair, std::size_t> index_;
};

/// A graph placed at a configuration; the graph's vertex count equals the
/// number of points.
class Framework {
 public:
  Framework(TensegrityGraph graph, Configuration configuration);

  const TensegrityGraph& graph() const { return graph_; }
  const Configuration& configuration() const { return configuration_; }
  int dimension() const { return configuration_.dimension(); }
  int vertex_count() const { return graph_.vertex_count(); }

  Framework with_configuration(Configuration q) const;

  bool operator==(const Framework&) const = default;

 private:
  TensegrityGraph graph_;
  Configuration configuration_;
};

/// Scalar per member. Non-members are implicitly zero.
class Stress {
 public:
  Stress() = default;
  explicit Stress(std::map<VertexPair, double> values);

  static Stress zero(const TensegrityGraph& graph);
  /// values[k] is the stress on graph.members()[k].
  static Stress from_vector(const TensegrityGraph& graph, const Eigen::VectorXd& values);

  const std::map<VertexPair, double>& values() const { return values_; }
  double at(VertexPair pair) const;
  double max_abs() const;
  bool is_zero() const;
  std::size_t size() const { return values_.size(); }

  /// True when the key set is exactly the graph's member set.
  bool keyed_by(const TensegrityGraph& graph) const;
  /// Throws InputError unless keyed_by(graph).
  void require_keyed_by(const TensegrityGraph& graph) const;
  Eigen::VectorXd to_vector(const TensegrityGraph& graph) const;

  Stress scaled(double factor) const;

  bool operator==(const Stress&) const = default;

 private:
  std::map<VertexPair, double> values_;
};

/// Scale-aware default comparison tolerance: 1e-9 * (1 + max |coordinate|).
double default_tolerance(const Configuration& p);

/// Euclidean length of member m in f. Throws InputError if m is not a member.
double member_length(const Framework& f, VertexPair m);

/// G(q) <= G(p): cables do not lengthen, struts do not shorten, bars keep
/// their length (each within tol). p is strong's configuration.
bool dominates(const Framework& strong, const Configuration& weak, double tol);

/// Every member keeps its length within tol.
bool equivalent(const Framework& f, const Configuration& q, double tol);

/// All pairwise distances agree within tol.
bool congruent(const Configuration& p, const Configuration& q, double tol);

}  // namespace rigid
