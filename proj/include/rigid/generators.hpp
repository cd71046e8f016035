#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigid/model.hpp"
#include "rigid/random.hpp"

namespace rigid {

TensegrityGraph complete_graph(int n);

/// Parts {0..a-1} and {a..a+b-1}.
TensegrityGraph complete_bipartite(int a, int b);

/// Coordinates uniform on [0, 1), drawn row by row from rng.
Configuration random_configuration(int n, int d, SeededRandomSource& rng);

struct StressedFramework {
  Framework framework;
  Stress stress;
};

/// K4 tensegrity on four planar points given in cyclic order around a
/// strictly convex quadrilateral: sides are cables, diagonals struts. The
/// stress is w_ij = -a_i a_j with a the affine dependence built from signed
/// triangle areas, so a unit square gives exactly +1 on sides and -1 on
/// diagonals.
StressedFramework convex_quadrilateral_tensegrity(const std::array<Eigen::Vector2d, 4>& points,
                                                  double tol);

/// Same stress construction for any four planar points with no three
/// collinear; kinds follow the sign of the stress (positive -> cable).
StressedFramework four_point_tensegrity(const std::array<Eigen::Vector2d, 4>& points, double tol);

/// Two frameworks and the identification of their shared vertices
/// (index in first, index in second).
struct GlueInstance {
  Framework first;
  Framework second;
  std::vector<std::pair<int, int>> shared;
  std::optional<Stress> first_stress;
  std::optional<Stress> second_stress;
};

struct NamedExample {
  Framework framework;
  std::optional<Stress> stress;
};

/// Deterministic named instances:
///   frameworks: fig2-square, k4, k4-minus-edge, c4, two-triangles, k55-d3
///   glue instances: two-k4-glue, fig3-pentagon, fig1c-pair
struct ExampleRegistry {
  std::map<std::string, NamedExample> frameworks;
  std::map<std::string, GlueInstance> glue_instances;
};

const ExampleRegistry& paper_examples();

}  // namespace rigid
