#include <gtest/gtest.h>

#include <cmath>

#include "rigid/error.hpp"
#include "rigid/generators.hpp"
#include "rigid/model.hpp"

using namespace rigid;

namespace {

Framework single(int d, std::vector<std::vector<double>> pts, MemberKind kind) {
  return Framework(TensegrityGraph(2, {{VertexPair(0, 1), kind}}), Configuration(d, pts));
}

Framework unit_square_cycle() {
  return Framework(TensegrityGraph(4, {{VertexPair(0, 1), MemberKind::Bar},
                                       {VertexPair(1, 2), MemberKind::Bar},
                                       {VertexPair(2, 3), MemberKind::Bar},
                                       {VertexPair(0, 3), MemberKind::Bar}}),
                   Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

}  // namespace

TEST(Configuration, RejectsWrongArityAndNonFinite) {
  EXPECT_THROW(Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1}}), InputError);
  EXPECT_THROW(Configuration(1, std::vector<std::vector<double>>{{NAN}}), InputError);
  EXPECT_THROW(Configuration(2, std::vector<std::vector<double>>{}), InputError);
  EXPECT_THROW(Configuration(0, std::vector<std::vector<double>>{{}}), InputError);
}

TEST(Configuration, AffineDimension) {
  EXPECT_EQ(Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {2, 0}}).affine_dimension(), 1);
  EXPECT_EQ(Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {0, 1}}).affine_dimension(), 2);
  EXPECT_EQ(Configuration(3, std::vector<std::vector<double>>{{1, 1, 1}, {1, 1, 1}}).affine_dimension(), 0);
}

TEST(TensegrityGraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(TensegrityGraph(3, {{VertexPair(1, 1), MemberKind::Bar}}), InputError);
  EXPECT_THROW(TensegrityGraph(3, {{VertexPair(0, 1), MemberKind::Bar}, {VertexPair(1, 0), MemberKind::Cable}}),
               InputError);
  EXPECT_THROW(TensegrityGraph(3, {{VertexPair(0, 3), MemberKind::Bar}}), InputError);
  EXPECT_THROW(TensegrityGraph(0, {}), InputError);
}

TEST(TensegrityGraph, PairsAreCanonical) {
  const TensegrityGraph g(3, {{VertexPair(2, 0), MemberKind::Strut}});
  EXPECT_EQ(g.members()[0].ends.first(), 0);
  EXPECT_EQ(g.members()[0].ends.second(), 2);
  EXPECT_TRUE(g.contains(VertexPair(0, 2)));
  EXPECT_EQ(g.member(VertexPair(2, 0)).kind, MemberKind::Strut);
}

TEST(Framework, VertexCountMustMatch) {
  EXPECT_THROW(Framework(complete_graph(3), Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}})),
               InputError);
}

TEST(MemberLength, Examples) {
  EXPECT_DOUBLE_EQ(member_length(single(2, {{0, 0}, {3, 4}}, MemberKind::Bar), VertexPair(0, 1)), 5.0);
  EXPECT_DOUBLE_EQ(member_length(single(1, {{0}, {0}}, MemberKind::Bar), VertexPair(0, 1)), 0.0);
  EXPECT_DOUBLE_EQ(member_length(unit_square_cycle(), VertexPair(1, 2)), 1.0);
  EXPECT_THROW(member_length(unit_square_cycle(), VertexPair(0, 2)), InputError);
}

TEST(Dominates, Examples) {
  const Framework sq = unit_square_cycle();
  EXPECT_TRUE(dominates(sq, sq.configuration(), 0.0));

  const Framework cable = single(1, {{0}, {1}}, MemberKind::Cable);
  EXPECT_TRUE(dominates(cable, Configuration(1, std::vector<std::vector<double>>{{0}, {0.5}}), 0.0));
  EXPECT_FALSE(dominates(cable, Configuration(1, std::vector<std::vector<double>>{{0}, {2}}), 0.0));

  const Framework strut = single(1, {{0}, {1}}, MemberKind::Strut);
  EXPECT_TRUE(dominates(strut, Configuration(1, std::vector<std::vector<double>>{{0}, {2}}), 0.0));
  EXPECT_FALSE(dominates(strut, Configuration(1, std::vector<std::vector<double>>{{0}, {0.5}}), 0.0));

  EXPECT_THROW(dominates(sq, Configuration(3, std::vector<std::vector<double>>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}), 0.0),
               InputError);
}

TEST(Equivalent, Examples) {
  const Framework sq = unit_square_cycle();
  EXPECT_TRUE(equivalent(sq, sq.configuration(), 1e-12));
  const double h = std::sqrt(3.0) / 2.0;
  // Unit rhombus with a 60 degree angle at vertex 0.
  const Configuration rhombus(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1.5, h}, {0.5, h}});
  EXPECT_TRUE(equivalent(sq, rhombus, 1e-12));
  const Configuration rectangle(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 2}, {0, 2}});
  EXPECT_FALSE(equivalent(sq, rectangle, 1e-12));
}

TEST(Congruent, Examples) {
  const Configuration p(2, std::vector<std::vector<double>>{{0, 0}, {2, 1}, {1, 3}});
  const Configuration reflected(2, std::vector<std::vector<double>>{{0, 0}, {2, -1}, {1, -3}});
  EXPECT_TRUE(congruent(p, reflected, 1e-12));
  EXPECT_FALSE(congruent(p, Configuration(2, Eigen::MatrixXd(2.0 * p.points())), 1e-12));
  Eigen::MatrixXd shifted = p.points();
  shifted.rowwise() += Eigen::RowVector2d(5.0, -7.0);
  EXPECT_TRUE(congruent(p, Configuration(2, shifted), 1e-12));
}

// Relations between dominates, equivalent and congruent on random instances.
TEST(Relations, RandomProperties) {
  SeededRandomSource rng(7);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const int d = 1 + static_cast<int>(rng.below(3));
    const Configuration p = random_configuration(n, d, rng);
    std::vector<Member> members;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform01() < 0.6) members.push_back({VertexPair(i, j), MemberKind::Bar});
    const Framework f(TensegrityGraph(n, members), p);

    // Orthogonal image plus translation.
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(d, d);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd rot = qr.householderQ();
    Eigen::MatrixXd moved = p.points() * rot.transpose();
    moved.rowwise() += Eigen::RowVectorXd::Constant(d, rng.uniform(-3, 3));
    const Configuration q(d, moved);

    const double tol = 1e-9;
    EXPECT_TRUE(dominates(f, p, 0.0));
    EXPECT_TRUE(congruent(p, q, tol));
    EXPECT_TRUE(equivalent(f, q, tol));  // congruent => equivalent
    // For bar graphs: equivalent <=> dominates both ways.
    const Configuration r = random_configuration(n, d, rng);
    EXPECT_EQ(equivalent(f, r, tol), dominates(f, r, tol) && dominates(f.with_configuration(r), p, tol));
    EXPECT_EQ(equivalent(f, q, tol), dominates(f, q, tol) && dominates(f.with_configuration(q), p, tol));
  }
}

TEST(Congruent, Transitive) {
  const Configuration p(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {0, 2}});
  const Configuration q(2, std::vector<std::vector<double>>{{1, 1}, {2, 1}, {1, 3}});
  const Configuration r(2, std::vector<std::vector<double>>{{1, 1}, {0, 1}, {1, -1}});
  ASSERT_TRUE(congruent(p, q, 0.0));
  ASSERT_TRUE(congruent(q, r, 0.0));
  EXPECT_TRUE(congruent(p, r, 0.0));
}

TEST(Stress, KeyingAndVectors) {
  const TensegrityGraph g = complete_graph(3);
  const Stress s = Stress::from_vector(g, Eigen::Vector3d(1, 2, 3));
  EXPECT_TRUE(s.keyed_by(g));
  EXPECT_DOUBLE_EQ(s.at(VertexPair(2, 0)), 2.0);
  EXPECT_DOUBLE_EQ(s.at(VertexPair(5, 6)), 0.0);
  EXPECT_EQ(s.to_vector(g), Eigen::Vector3d(1, 2, 3));
  const Stress partial({{VertexPair(0, 1), 1.0}});
  EXPECT_THROW(partial.to_vector(g), InputError);
  const Stress extra({{VertexPair(0, 1), 1.0}, {VertexPair(0, 2), 1.0}, {VertexPair(1, 2), 1.0}, {VertexPair(0, 3), 1.0}});
  EXPECT_THROW(extra.require_keyed_by(g), InputError);
  EXPECT_TRUE(Stress::zero(g).is_zero());
}
