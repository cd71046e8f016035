#include "rigid/generators.hpp"

#include <cmath>
#include <string>

#include "rigid/error.hpp"

namespace rigid {

namespace {

double det3(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  // Determinant of the rows (a,1), (b,1), (c,1): twice the signed area of abc.
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

double cross(const Eigen::Vector2d& u, const Eigen::Vector2d& v) { return u.x() * v.y() - u.y() * v.x(); }

Configuration planar(const std::array<Eigen::Vector2d, 4>& points) {
  Eigen::MatrixXd m(4, 2);
  for (int i = 0; i < 4; ++i) m.row(i) = points[static_cast<std::size_t>(i)].transpose();
  return Configuration(2, std::move(m));
}

double scale_of(const std::array<Eigen::Vector2d, 4>& points) {
  double s = 0.0;
  for (const auto& p : points) s = std::max(s, p.cwiseAbs().maxCoeff());
  return 1.0 + s;
}

// Members in the order 01, 12, 23, 30, 02, 13 with w_ij = -a_i a_j.
std::pair<std::vector<VertexPair>, std::map<VertexPair, double>> quad_stress(
    const std::array<Eigen::Vector2d, 4>& p) {
  const std::array<double, 4> a = {det3(p[1], p[2], p[3]), -det3(p[0], p[2], p[3]),
                                   det3(p[0], p[1], p[3]), -det3(p[0], p[1], p[2])};
  const std::vector<VertexPair> pairs = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}};
  std::map<VertexPair, double> w;
  for (const auto& e : pairs) {
    w.emplace(e, -a[static_cast<std::size_t>(e.first())] * a[static_cast<std::size_t>(e.second())]);
  }
  return {pairs, w};
}

}  // namespace

TensegrityGraph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<Member> members;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) members.push_back({VertexPair(i, j), MemberKind::Bar});
  }
  return TensegrityGraph(n, std::move(members));
}

TensegrityGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs nonempty parts");
  std::vector<Member> members;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) members.push_back({VertexPair(i, a + j), MemberKind::Bar});
  }
  return TensegrityGraph(a + b, std::move(members));
}

Configuration random_configuration(int n, int d, SeededRandomSource& rng) {
  if (n < 1 || d < 1) throw InputError("random configuration needs n, d >= 1");
  Eigen::MatrixXd points(n, d);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) points(i, k) = rng.uniform01();
  }
  return Configuration(d, std::move(points));
}

StressedFramework four_point_tensegrity(const std::array<Eigen::Vector2d, 4>& points, double tol) {
  const double area_tol = tol * scale_of(points) * scale_of(points);
  for (int skip = 0; skip < 4; ++skip) {
    std::array<Eigen::Vector2d, 3> tri;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) tri[static_cast<std::size_t>(k++)] = points[static_cast<std::size_t>(i)];
    }
    if (std::abs(det3(tri[0], tri[1], tri[2])) <= area_tol) {
      throw InputError("three of the four points are collinear");
    }
  }
  auto [pairs, w] = quad_stress(points);
  std::vector<Member> members;
  for (const auto& e : pairs) {
    members.push_back({e, w.at(e) > 0 ? MemberKind::Cable : MemberKind::Strut});
  }
  return {Framework(TensegrityGraph(4, std::move(members)), planar(points)), Stress(std::move(w))};
}

StressedFramework convex_quadrilateral_tensegrity(const std::array<Eigen::Vector2d, 4>& points,
                                                  double tol) {
  const double area_tol = tol * scale_of(points) * scale_of(points);
  int positive = 0;
  int negative = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Eigen::Vector2d e1 = points[(i + 1) % 4] - points[i];
    const Eigen::Vector2d e2 = points[(i + 2) % 4] - points[(i + 1) % 4];
    const double turn = cross(e1, e2);
    if (turn > area_tol) {
      ++positive;
    } else if (turn < -area_tol) {
      ++negative;
    }
  }
  if (positive != 4 && negative != 4) {
    throw InputError("points are not in strictly convex cyclic order");
  }
  auto [pairs, w] = quad_stress(points);
  std::vector<Member> members;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    members.push_back({pairs[k], k < 4 ? MemberKind::Cable : MemberKind::Strut});
  }
  return {Framework(TensegrityGraph(4, std::move(members)), planar(points)), Stress(std::move(w))};
}

namespace {

ExampleRegistry build_registry() {
  ExampleRegistry reg;
  const double tol = 1e-9;

  auto square = convex_quadrilateral_tensegrity(
      {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 1)}, tol);
  reg.frameworks.emplace("fig2-square", NamedExample{square.framework, square.stress});

  {
    SeededRandomSource rng(20110401);
    reg.frameworks.emplace("k4", NamedExample{Framework(complete_graph(4), random_configuration(4, 2, rng)),
                                              std::nullopt});
  }
  {
    SeededRandomSource rng(20110402);
    auto config = random_configuration(4, 2, rng);
    reg.frameworks.emplace("k4-minus-edge",
                           NamedExample{Framework(complete_graph(4).without_member({0, 1}), config),
                                        std::nullopt});
    std::vector<Member> cycle = {{{0, 1}, MemberKind::Bar},
                                 {{1, 2}, MemberKind::Bar},
                                 {{2, 3}, MemberKind::Bar},
                                 {{0, 3}, MemberKind::Bar}};
    reg.frameworks.emplace(
        "c4", NamedExample{Framework(TensegrityGraph(4, std::move(cycle)),
                                     Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}})),
                           std::nullopt});
  }
  {
    SeededRandomSource rng(20110403);
    std::vector<Member> bowtie = {{{0, 1}, MemberKind::Bar}, {{1, 2}, MemberKind::Bar},
                                  {{0, 2}, MemberKind::Bar}, {{2, 3}, MemberKind::Bar},
                                  {{3, 4}, MemberKind::Bar}, {{2, 4}, MemberKind::Bar}};
    reg.frameworks.emplace("two-triangles",
                           NamedExample{Framework(TensegrityGraph(5, std::move(bowtie)),
                                                  random_configuration(5, 2, rng)),
                                        std::nullopt});
  }
  {
    SeededRandomSource rng(20110404);
    reg.frameworks.emplace(
        "k55-d3", NamedExample{Framework(complete_bipartite(5, 5), random_configuration(10, 3, rng)),
                               std::nullopt});
  }
  {
    // K4 on vertices {0,1,2,3} and K4 on {1,2,3,4} of one random planar
    // configuration; the second framework is indexed locally 0..3.
    SeededRandomSource rng(20110405);
    const Configuration all = random_configuration(5, 2, rng);
    const Configuration left(2, Eigen::MatrixXd(all.points().topRows(4)));
    const Configuration right(2, Eigen::MatrixXd(all.points().bottomRows(4)));
    reg.glue_instances.emplace(
        "two-k4-glue", GlueInstance{Framework(complete_graph(4), left), Framework(complete_graph(4), right),
                                    {{1, 0}, {2, 1}, {3, 2}}, std::nullopt, std::nullopt});
  }
  {
    // Five points in convex position. The first quadrilateral is 0,1,2,3 and
    // the second 0,1,3,4 (local 0,1,2,3); {1,3} is a strut in the first and a
    // cable in the second, {0,3} a cable in the first and a strut in the second.
    const std::array<Eigen::Vector2d, 5> v = {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(2.0, -0.4),
                                              Eigen::Vector2d(3.1, 1.1), Eigen::Vector2d(1.7, 2.6),
                                              Eigen::Vector2d(-0.6, 1.5)};
    auto first = convex_quadrilateral_tensegrity({v[0], v[1], v[2], v[3]}, tol);
    auto second = convex_quadrilateral_tensegrity({v[0], v[1], v[3], v[4]}, tol);
    reg.glue_instances.emplace("fig3-pentagon",
                               GlueInstance{first.framework, second.framework, {{0, 0}, {1, 1}, {3, 2}},
                                            first.stress, second.stress});
  }
  {
    // Triangle with an interior point (outer struts, inner cables) next to a
    // square (side cables, diagonal struts); they share only the vertical
    // segment x = 0, a strut on the left and a cable on the right.
    auto inner = four_point_tensegrity({Eigen::Vector2d(-2.0, 0.0), Eigen::Vector2d(0.0, -1.0),
                                        Eigen::Vector2d(0.0, 1.0), Eigen::Vector2d(-0.7, 0.1)},
                                       tol);
    auto box = convex_quadrilateral_tensegrity({Eigen::Vector2d(0.0, -1.0), Eigen::Vector2d(2.0, -1.0),
                                                Eigen::Vector2d(2.0, 1.0), Eigen::Vector2d(0.0, 1.0)},
                                               tol);
    reg.glue_instances.emplace("fig1c-pair", GlueInstance{inner.framework, box.framework, {{1, 0}, {2, 3}},
                                                          inner.stress, box.stress});
  }
  return reg;
}

}  // namespace

const ExampleRegistry& paper_examples() {
  static const ExampleRegistry registry = build_registry();
  return registry;
}

}  // namespace rigid
