#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigid/certify.hpp"
#include "rigid/error.hpp"
#include "rigid/generators.hpp"

using namespace rigid;

namespace {

TensegrityGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Member> m;
  for (auto [i, j] : edges) m.push_back({VertexPair(i, j), MemberKind::Bar});
  return TensegrityGraph(n, m);
}

std::vector<std::pair<int, int>> edges_of(const TensegrityGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (const auto& m : g.members()) e.emplace_back(m.ends.first(), m.ends.second());
  return e;
}

const TensegrityGraph kTriangle = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
const TensegrityGraph kCycle = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const TensegrityGraph kK4MinusEdge = graph_of(4, {{1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
const TensegrityGraph kBowtie = graph_of(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});

TensegrityGraph random_graph(SeededRandomSource& rng, int n, double density) {
  std::vector<Member> m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < density) m.push_back({VertexPair(i, j), MemberKind::Bar});
  return TensegrityGraph(n, m);
}

}  // namespace

TEST(Verdict, StringRoundTrip) {
  for (Verdict v : {Verdict::CertifiedYes, Verdict::CertifiedNo, Verdict::ProbablyNo, Verdict::Inconclusive})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  EXPECT_FALSE(parse_verdict("maybe").has_value());
  for (CheckKind k : {CheckKind::GenericGlobal, CheckKind::SuperStability, CheckKind::Combinatorial2d,
                      CheckKind::StressWitness})
    EXPECT_EQ(parse_check_kind(to_string(k)), k);
}

TEST(GenericGlobal, Examples) {
  const auto k4 = certify_generic_global_rigidity(complete_graph(4), 2, 8, 1);
  EXPECT_EQ(k4.verdict, Verdict::CertifiedYes);
  ASSERT_TRUE(k4.witness.has_value());
  EXPECT_EQ(k4.witness->rigidity_rank, 5);
  EXPECT_EQ(k4.witness->stress_rank, 1);

  EXPECT_EQ(certify_generic_global_rigidity(kCycle, 2, 8, 1).verdict, Verdict::ProbablyNo);
  EXPECT_EQ(certify_generic_global_rigidity(complete_bipartite(5, 5), 3, 8, 1).verdict, Verdict::ProbablyNo);
  EXPECT_EQ(certify_generic_global_rigidity(kTriangle, 2, 8, 1).verdict, Verdict::CertifiedYes);
  EXPECT_EQ(certify_generic_global_rigidity(kK4MinusEdge, 2, 8, 1).verdict, Verdict::ProbablyNo);
}

TEST(GenericGlobal, SmallAndDisconnected) {
  // n <= d + 1: decided by completeness.
  EXPECT_EQ(certify_generic_global_rigidity(graph_of(3, {{0, 1}, {1, 2}}), 2, 8, 1).verdict,
            Verdict::CertifiedNo);
  EXPECT_EQ(certify_generic_global_rigidity(graph_of(2, {{0, 1}}), 3, 8, 1).verdict, Verdict::CertifiedYes);
  EXPECT_EQ(certify_generic_global_rigidity(graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), 2, 8, 1)
                .verdict,
            Verdict::CertifiedNo);
}

TEST(GenericGlobal, RejectsNonBars) {
  const TensegrityGraph g(2, {{VertexPair(0, 1), MemberKind::Cable}});
  EXPECT_THROW(certify_generic_global_rigidity(g, 1, 8, 1), InputError);
}

TEST(GenericGlobal, Reproducible) {
  const auto a = certify_generic_global_rigidity(complete_graph(6), 3, 4, 99);
  const auto b = certify_generic_global_rigidity(complete_graph(6), 3, 4, 99);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->configuration, b.witness->configuration);
  EXPECT_EQ(a.witness->stress, b.witness->stress);
  EXPECT_EQ(a.fingerprint, graph_fingerprint(complete_graph(6)));
}

// Adding a member never turns CertifiedYes into a non-Yes.
TEST(GenericGlobal, Monotone) {
  SeededRandomSource rng(31);
  int yes_seen = 0;
  for (int round = 0; round < 40; ++round) {
    const int n = 5 + static_cast<int>(rng.below(3));
    TensegrityGraph g = random_graph(rng, n, 0.75);
    const auto base = certify_generic_global_rigidity(g, 2, 8, 4);
    if (base.verdict != Verdict::CertifiedYes) continue;
    ++yes_seen;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.contains(VertexPair(i, j)))
          EXPECT_EQ(certify_generic_global_rigidity(g.with_member({VertexPair(i, j), MemberKind::Bar}), 2, 8, 4)
                        .verdict,
                    Verdict::CertifiedYes);
  }
  EXPECT_GT(yes_seen, 0);
}

namespace {

Framework square_tensegrity() { return paper_examples().frameworks.at("fig2-square").framework; }
Stress square_stress() { return *paper_examples().frameworks.at("fig2-square").stress; }

}  // namespace

TEST(SuperStability, UnitSquare) {
  const auto c = check_super_stability(square_tensegrity(), square_stress());
  EXPECT_EQ(c.verdict, Verdict::CertifiedYes) << c.reason;
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->stress_rank, 1);
}

TEST(SuperStability, NegativeCableIsImproper) {
  std::map<VertexPair, double> v = square_stress().values();
  v[VertexPair(0, 1)] = -1.0;
  const auto c = check_super_stability(square_tensegrity(), Stress(v));
  EXPECT_EQ(c.verdict, Verdict::CertifiedNo);
  EXPECT_NE(c.reason.find("equilibrium"), std::string::npos) << c.reason;
  // An equilibrium stress with the wrong sign on cables fails properness.
  const auto flipped = check_super_stability(square_tensegrity(), square_stress().scaled(-1.0));
  EXPECT_EQ(flipped.verdict, Verdict::CertifiedNo);
  EXPECT_EQ(flipped.reason.rfind("proper", 0), 0u) << flipped.reason;
}

TEST(SuperStability, ZeroStressAndDegenerateSpan) {
  const auto z = check_super_stability(square_tensegrity(), Stress::zero(square_tensegrity().graph()));
  EXPECT_EQ(z.verdict, Verdict::CertifiedNo);
  const Framework line(TensegrityGraph(3, {{VertexPair(0, 1), MemberKind::Cable}, {VertexPair(1, 2), MemberKind::Cable},
                                           {VertexPair(0, 2), MemberKind::Strut}}),
                       Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {2, 0}}));
  const Stress w({{VertexPair(0, 1), 2.0}, {VertexPair(1, 2), 2.0}, {VertexPair(0, 2), -1.0}});
  EXPECT_THROW(check_super_stability(line, w), InputError);
}

TEST(SuperStability, RankShortfall) {
  // Two unconnected collinear rows, each stressed on its own.
  const Framework f(TensegrityGraph(6, {{VertexPair(0, 1), MemberKind::Cable},
                                        {VertexPair(1, 2), MemberKind::Cable},
                                        {VertexPair(0, 2), MemberKind::Strut},
                                        {VertexPair(3, 4), MemberKind::Cable},
                                        {VertexPair(4, 5), MemberKind::Cable},
                                        {VertexPair(3, 5), MemberKind::Strut}}),
                    Configuration(2, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}));
  const Stress w({{VertexPair(0, 1), 2.0}, {VertexPair(1, 2), 2.0}, {VertexPair(0, 2), -1.0},
                  {VertexPair(3, 4), 2.0}, {VertexPair(4, 5), 2.0}, {VertexPair(3, 5), -1.0}});
  const auto c = check_super_stability(f, w);
  EXPECT_EQ(c.verdict, Verdict::CertifiedNo);
  EXPECT_EQ(c.reason.rfind("rank", 0), 0u) << c.reason;
}

TEST(Pebble, Examples) {
  EXPECT_TRUE(pebble_game_rigid_2d(kTriangle));
  EXPECT_FALSE(pebble_game_rigid_2d(kCycle));
  EXPECT_TRUE(pebble_game_rigid_2d(kK4MinusEdge));
  EXPECT_TRUE(pebble_game_rigid_2d(complete_graph(1)));
  EXPECT_EQ(pebble_game_independent_edges(complete_graph(4)), 5);
}

TEST(Pebble, MatchesLamanOracle) {
  SeededRandomSource rng(41);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const auto g = random_graph(rng, n, rng.uniform(0.2, 0.9));
    EXPECT_EQ(pebble_game_independent_edges(g), oracle::laman_rank(n, edges_of(g)));
  }
}

TEST(RedundantRigidity, Examples) {
  EXPECT_TRUE(is_redundantly_rigid(complete_graph(4), 2, 1));
  EXPECT_FALSE(is_redundantly_rigid(kTriangle, 2, 1));
  EXPECT_FALSE(is_redundantly_rigid(kCycle, 2, 1));
  EXPECT_TRUE(is_redundantly_rigid(complete_bipartite(5, 5), 3, 1));
  EXPECT_FALSE(is_redundantly_rigid(complete_bipartite(3, 3), 3, 1));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(vertex_connectivity_at_least(complete_graph(4), 3));
  EXPECT_FALSE(vertex_connectivity_at_least(complete_graph(4), 4));
  EXPECT_FALSE(vertex_connectivity_at_least(graph_of(3, {{0, 1}, {1, 2}}), 2));
  const auto k55 = complete_bipartite(5, 5);
  ASSERT_EQ(oracle::brute_connectivity(10, edges_of(k55)), 5);
  EXPECT_TRUE(vertex_connectivity_at_least(k55, 4));
  EXPECT_TRUE(vertex_connectivity_at_least(k55, 5));
  EXPECT_FALSE(vertex_connectivity_at_least(k55, 6));
  EXPECT_EQ(detail::vertex_connectivity_flow(k55, 10), 5);
  EXPECT_FALSE(vertex_connectivity_at_least(kBowtie, 2));
}

TEST(Connectivity, ExhaustiveAndFlowAgreeWithOracle) {
  SeededRandomSource rng(17);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng.below(10));
    const auto g = random_graph(rng, n, rng.uniform(0.2, 0.95));
    const int expected = oracle::brute_connectivity(n, edges_of(g));
    EXPECT_EQ(detail::vertex_connectivity_exhaustive(g, n), expected);
    EXPECT_EQ(detail::vertex_connectivity_flow(g, n), expected);
  }
}

TEST(Connectivity, LargeGraphUsesFlow) {
  // 14-cycle: connectivity 2, exercising the n > 12 path.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
  const auto g = graph_of(14, e);
  EXPECT_TRUE(vertex_connectivity_at_least(g, 2));
  EXPECT_FALSE(vertex_connectivity_at_least(g, 3));
  EXPECT_TRUE(vertex_connectivity_at_least(complete_graph(14), 13));
}

TEST(Hendrickson, Examples) {
  EXPECT_TRUE(hendrickson_property(complete_bipartite(5, 5), 3, 1));
  EXPECT_TRUE(hendrickson_property(complete_graph(4), 2, 1));
  EXPECT_FALSE(hendrickson_property(kCycle, 2, 1));
}

// Every CertifiedYes graph has the Hendrickson property.
TEST(Hendrickson, NecessaryForCertifiedYes) {
  SeededRandomSource rng(53);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    const int d = 2 + static_cast<int>(rng.below(2));
    const int n = d + 2 + static_cast<int>(rng.below(4));
    const auto g = random_graph(rng, n, 0.8);
    const auto c = certify_generic_global_rigidity(g, d, 8, 5);
    if (c.verdict != Verdict::CertifiedYes) continue;
    ++checked;
    EXPECT_TRUE(hendrickson_property(g, d, 5));
  }
  for (const auto& [name, ex] : paper_examples().frameworks) {
    const auto& g = ex.framework.graph();
    if (!g.all_bars()) continue;
    const int d = ex.framework.dimension();
    if (certify_generic_global_rigidity(g, d, 8, 5).verdict == Verdict::CertifiedYes) {
      ++checked;
      EXPECT_TRUE(hendrickson_property(g, d, 5)) << name;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(Combinatorial2d, Examples) {
  EXPECT_EQ(certify_global_rigidity_2d_combinatorial(complete_graph(4)).verdict, Verdict::CertifiedYes);
  const auto bowtie = certify_global_rigidity_2d_combinatorial(kBowtie);
  EXPECT_EQ(bowtie.verdict, Verdict::CertifiedNo);
  const auto minus = certify_global_rigidity_2d_combinatorial(kK4MinusEdge);
  EXPECT_EQ(minus.verdict, Verdict::CertifiedNo);
  EXPECT_NE(minus.reason.find("redundant"), std::string::npos) << minus.reason;
}

// The randomized route never says Yes where the combinatorial one says No.
TEST(Combinatorial2d, AgreesWithRandomizedRoute) {
  SeededRandomSource rng(61);
  for (int round = 0; round < 80; ++round) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const auto g = random_graph(rng, n, rng.uniform(0.4, 0.95));
    const auto comb = certify_global_rigidity_2d_combinatorial(g);
    const auto rnd = certify_generic_global_rigidity(g, 2, 8, 2);
    if (rnd.verdict == Verdict::CertifiedYes) EXPECT_EQ(comb.verdict, Verdict::CertifiedYes);
    if (comb.verdict == Verdict::CertifiedYes) EXPECT_EQ(rnd.verdict, Verdict::CertifiedYes);
  }
}

TEST(Replay, ReproducesVerdicts) {
  const std::vector<Certificate> certs{
      certify_generic_global_rigidity(complete_graph(5), 2, 8, 3),
      certify_generic_global_rigidity(complete_bipartite(5, 5), 3, 8, 3),
      check_super_stability(square_tensegrity(), square_stress()),
      certify_global_rigidity_2d_combinatorial(kBowtie),
  };
  for (const auto& c : certs) {
    const auto r = replay(c);
    EXPECT_EQ(r.verdict, c.verdict) << to_string(c.check);
    EXPECT_EQ(r.fingerprint, c.fingerprint);
    EXPECT_EQ(r.witness.has_value(), c.witness.has_value());
    if (r.witness && c.witness) {
      EXPECT_EQ(r.witness->stress_rank, c.witness->stress_rank);
      EXPECT_EQ(r.witness->rigidity_rank, c.witness->rigidity_rank);
    }
  }
}

TEST(Fingerprint, DependsOnMembers) {
  EXPECT_EQ(graph_fingerprint(complete_graph(4)), graph_fingerprint(complete_graph(4)));
  EXPECT_NE(graph_fingerprint(complete_graph(4)), graph_fingerprint(kK4MinusEdge));
  EXPECT_EQ(graph_fingerprint(complete_graph(4)).size(), 16u);
}
