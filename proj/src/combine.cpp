#include "rigid/combine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "rigid/error.hpp"
#include "rigid/random.hpp"

namespace rigid {

namespace {

// Stress on the erased bar counts as zero below this fraction of the largest entry.
constexpr double kZeroStressRelTol = 1e-9;
constexpr int kStressTrials = 8;

std::string pair_text(VertexPair e) {
  return "{" + std::to_string(e.first()) + "," + std::to_string(e.second()) + "}";
}

VertexPair map_pair(VertexPair e, const std::vector<int>& embedding) {
  return VertexPair(embedding[static_cast<std::size_t>(e.first())],
                    embedding[static_cast<std::size_t>(e.second())]);
}

void require_same_dimension(const Framework& f1, const Framework& f2, const SharedVertexMap& shared) {
  if (f1.dimension() != f2.dimension()) throw InputError("frameworks live in different dimensions");
  if (f1.vertex_count() != shared.first_size() || f2.vertex_count() != shared.second_size()) {
    throw InputError("shared vertex map does not match the frameworks' sizes");
  }
}

void require_shared_coordinates(const Framework& f1, const Framework& f2, const SharedVertexMap& shared,
                                double tol) {
  for (const auto& [a, b] : shared.pairs()) {
    const double gap = (f1.configuration().point(a) - f2.configuration().point(b)).cwiseAbs().maxCoeff();
    if (gap > tol) {
      throw InputError("shared vertex " + std::to_string(a) + ":" + std::to_string(b) +
                       " has different coordinates (gap " + std::to_string(gap) + ")");
    }
  }
}

void require_spanning_shared(const Framework& f1, const SharedVertexMap& shared, const NumericTolerance& t) {
  const int d = f1.dimension();
  Eigen::MatrixXd pts(shared.shared_count(), d);
  for (int k = 0; k < shared.shared_count(); ++k) {
    pts.row(k) = f1.configuration().points().row(shared.pairs()[static_cast<std::size_t>(k)].first);
  }
  if (Configuration(d, std::move(pts)).affine_dimension(t.rank_threshold_factor) != d) {
    throw PreconditionError("shared vertices lie in a hyperplane of dimension < " + std::to_string(d));
  }
}

Configuration combined_configuration(const Framework& f1, const Framework& f2, const SharedVertexMap& shared) {
  Eigen::MatrixXd pts(shared.combined_size(), f1.dimension());
  for (int v = 0; v < f2.vertex_count(); ++v) pts.row(shared.from_second(v)) = f2.configuration().points().row(v);
  for (int v = 0; v < f1.vertex_count(); ++v) pts.row(shared.from_first(v)) = f1.configuration().points().row(v);
  return Configuration(f1.dimension(), std::move(pts));
}

// Second-framework pair corresponding to a pair of shared first-framework vertices.
std::optional<VertexPair> partner_pair(const SharedVertexMap& shared, VertexPair e) {
  const auto a = shared.partner_of_first(e.first());
  const auto b = shared.partner_of_first(e.second());
  if (!a || !b) return std::nullopt;
  return VertexPair(*a, *b);
}

}  // namespace

SharedVertexMap::SharedVertexMap(int first_size, int second_size, std::vector<std::pair<int, int>> pairs)
    : first_size_(first_size), second_size_(second_size), pairs_(std::move(pairs)) {
  if (first_size_ < 1 || second_size_ < 1) throw InputError("shared vertex map needs nonempty frameworks");
  first_embedding_.assign(static_cast<std::size_t>(first_size_), -1);
  second_embedding_.assign(static_cast<std::size_t>(second_size_), -1);
  int next = 0;
  for (const auto& [a, b] : pairs_) {
    if (a < 0 || a >= first_size_ || b < 0 || b >= second_size_) {
      throw InputError("shared pair " + std::to_string(a) + ":" + std::to_string(b) + " is out of range");
    }
    if (first_embedding_[a] >= 0 || second_embedding_[b] >= 0) {
      throw InputError("shared pair " + std::to_string(a) + ":" + std::to_string(b) + " repeats a vertex");
    }
    first_embedding_[a] = next;
    second_embedding_[b] = next;
    ++next;
  }
  for (auto& slot : first_embedding_) {
    if (slot < 0) slot = next++;
  }
  for (auto& slot : second_embedding_) {
    if (slot < 0) slot = next++;
  }
}

int SharedVertexMap::from_first(int v) const {
  if (v < 0 || v >= first_size_) throw InputError("vertex " + std::to_string(v) + " out of range");
  return first_embedding_[static_cast<std::size_t>(v)];
}

int SharedVertexMap::from_second(int v) const {
  if (v < 0 || v >= second_size_) throw InputError("vertex " + std::to_string(v) + " out of range");
  return second_embedding_[static_cast<std::size_t>(v)];
}

bool SharedVertexMap::shared_in_first(int v) const { return from_first(v) < shared_count(); }

std::optional<int> SharedVertexMap::partner_of_first(int v) const {
  for (const auto& [a, b] : pairs_) {
    if (a == v) return b;
  }
  return std::nullopt;
}

StressMatrixForm extend_stress_matrix(const StressMatrixForm& s, const std::vector<int>& embedding, int total_n) {
  const int n = s.size();
  if (static_cast<int>(embedding.size()) != n) {
    throw InputError("embedding has " + std::to_string(embedding.size()) + " entries for a " +
                     std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  std::vector<char> used(static_cast<std::size_t>(std::max(total_n, 0)), 0);
  for (int target : embedding) {
    if (target < 0 || target >= total_n) throw InputError("embedding target out of range");
    if (used[static_cast<std::size_t>(target)]) throw InputError("embedding is not injective");
    used[static_cast<std::size_t>(target)] = 1;
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(total_n, total_n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(embedding[i], embedding[j]) = s.omega(i, j);
  }
  return StressMatrixForm{std::move(out)};
}

BlendResult blend_stress_matrices(const StressMatrixForm& s1, const StressMatrixForm& s2, double t,
                                  const NumericTolerance& tol) {
  if (s1.size() != s2.size()) throw InputError("blended matrices differ in size");
  if (t == 0.0 || t == 1.0) throw InputError("blend parameter must differ from 0 and 1");
  if (!std::isfinite(t)) throw InputError("blend parameter is not finite");
  StressMatrixForm m{t * s1.omega + (1.0 - t) * s2.omega};
  const int rank = numeric_rank(m.omega, tol);
  return {std::move(m), rank};
}

Framework glue_union(const Framework& f1, const Framework& f2, const SharedVertexMap& shared, double tol) {
  require_same_dimension(f1, f2, shared);
  const int d = f1.dimension();
  if (shared.shared_count() < d + 1) {
    throw PreconditionError("gluing needs at least d + 1 = " + std::to_string(d + 1) + " shared vertices");
  }
  require_shared_coordinates(f1, f2, shared, tol);

  std::vector<Member> members;
  std::map<VertexPair, bool> present;
  for (const Member& m : f1.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.first_embedding());
    members.push_back({e, m.kind});
    present[e] = true;
  }
  for (const Member& m : f2.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.second_embedding());
    const bool spanned_by_shared = e.second() < shared.shared_count();
    if (spanned_by_shared || present.contains(e)) continue;
    members.push_back({e, m.kind});
  }
  return Framework(TensegrityGraph(shared.combined_size(), std::move(members)),
                   combined_configuration(f1, f2, shared));
}

Framework align_second_to_first(const Framework& f1, const Framework& f2, const SharedVertexMap& shared) {
  require_same_dimension(f1, f2, shared);
  const int d = f1.dimension();
  const int s = shared.shared_count();
  if (s == 0) throw PreconditionError("alignment needs shared vertices");
  Eigen::MatrixXd target(s, d);
  Eigen::MatrixXd source(s, d);
  for (int k = 0; k < s; ++k) {
    target.row(k) = f1.configuration().points().row(shared.pairs()[static_cast<std::size_t>(k)].first);
    source.row(k) = f2.configuration().points().row(shared.pairs()[static_cast<std::size_t>(k)].second);
  }
  const Eigen::RowVectorXd target_mean = target.colwise().mean();
  const Eigen::RowVectorXd source_mean = source.colwise().mean();
  const Eigen::MatrixXd cross = (source.rowwise() - source_mean).transpose() * (target.rowwise() - target_mean);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rotation = svd.matrixU() * svd.matrixV().transpose();
  Eigen::MatrixXd moved = (f2.configuration().points().rowwise() - source_mean) * rotation;
  moved.rowwise() += target_mean;
  return f2.with_configuration(Configuration(d, std::move(moved)));
}

CombineResult combine_erase_bar(const Framework& f1, const Framework& f2, const SharedVertexMap& shared,
                                VertexPair bar, std::uint64_t seed, double tol, const NumericTolerance& t) {
  require_same_dimension(f1, f2, shared);
  const int d = f1.dimension();
  if (shared.shared_count() != d + 1) {
    throw PreconditionError("combining needs exactly d + 1 = " + std::to_string(d + 1) + " shared vertices, got " +
                            std::to_string(shared.shared_count()));
  }
  if (f1.vertex_count() < d + 2 || f2.vertex_count() < d + 2) {
    throw PreconditionError("each framework needs at least d + 2 = " + std::to_string(d + 2) + " vertices");
  }
  if (!f1.graph().all_bars() || !f2.graph().all_bars()) throw InputError("combining needs bar frameworks");
  if (!f1.graph().contains(bar)) throw InputError("bar " + pair_text(bar) + " is not a member of the first framework");
  const auto bar2 = partner_pair(shared, bar);
  if (!bar2) throw InputError("bar " + pair_text(bar) + " does not join two shared vertices");
  if (!f2.graph().contains(*bar2)) {
    throw InputError("bar " + pair_text(bar) + " (second framework " + pair_text(*bar2) + ") is not a member of the second framework");
  }
  require_shared_coordinates(f1, f2, shared, tol);
  require_spanning_shared(f1, shared, t);

  SeededRandomSource rng(seed);
  const std::uint64_t seed1 = rng.next_u64();
  const std::uint64_t seed2 = rng.next_u64();
  const MaxRankStress s1 = max_rank_stress(f1, kStressTrials, seed1, t);
  const MaxRankStress s2 = max_rank_stress(f2, kStressTrials, seed2, t);

  // Superimposed member set without the erased bar.
  const VertexPair erased = map_pair(bar, shared.first_embedding());
  std::vector<Member> members;
  std::map<VertexPair, double> witness;
  for (const Member& m : f1.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.first_embedding());
    if (e == erased) continue;
    members.push_back({e, MemberKind::Bar});
    witness.emplace(e, 0.0);
  }
  for (const Member& m : f2.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.second_embedding());
    if (e == erased || witness.contains(e)) continue;
    members.push_back({e, MemberKind::Bar});
    witness.emplace(e, 0.0);
  }
  Framework combined(TensegrityGraph(shared.combined_size(), std::move(members)),
                     combined_configuration(f1, f2, shared));

  const double w1 = s1.stress.at(bar);
  const double w2 = s2.stress.at(*bar2);
  const bool zero1 = std::abs(w1) <= kZeroStressRelTol * s1.stress.max_abs();
  const bool zero2 = std::abs(w2) <= kZeroStressRelTol * s2.stress.max_abs();

  CombineResult result{combined, Stress(), 0.0, 0, shared.combined_size() - (d + 1), s1.rank, s2.rank, false,
                       Verdict::Inconclusive, ""};
  // Adds weight * (s / divisor) and returns the contribution on the erased bar.
  auto add = [&](const Stress& s, const std::vector<int>& embedding, double divisor, double weight) {
    double on_bar = 0.0;
    for (const auto& [e, value] : s.values()) {
      const VertexPair mapped = map_pair(e, embedding);
      const double contribution = weight * (value / divisor);
      if (mapped == erased) {
        on_bar = contribution;
      } else {
        witness[mapped] += contribution;
      }
    }
    return on_bar;
  };
  if (zero1 || zero2) {
    result.union_fallback = true;
    result.erased_bar_stress = zero1 ? add(s1.stress, shared.first_embedding(), 1.0, 1.0)
                                     : add(s2.stress, shared.second_embedding(), 1.0, 1.0);
  } else {
    // Rescale to +1 on the bar in the first stress and -1 in the second, then
    // blend at t = 1/2; the bar's stress cancels exactly.
    result.erased_bar_stress = add(s1.stress, shared.first_embedding(), w1, 0.5) +
                               add(s2.stress, shared.second_embedding(), -w2, 0.5);
  }
  result.witness = Stress(std::move(witness));
  result.witness_rank = numeric_rank(stress_matrix(combined.graph(), result.witness).omega, t);

  const int want1 = f1.vertex_count() - d - 1;
  const int want2 = f2.vertex_count() - d - 1;
  if (s1.rank != want1 || s2.rank != want2) {
    result.reason = "input stress ranks " + std::to_string(s1.rank) + "/" + std::to_string(want1) + " and " +
                    std::to_string(s2.rank) + "/" + std::to_string(want2) + " are not maximal";
  } else if (result.union_fallback) {
    result.reason = "bar carries zero stress in the " + std::string(zero1 ? "first" : "second") +
                    " framework; witness is that stress alone (rank " + std::to_string(result.witness_rank) + ")";
  } else if (result.witness_rank != result.expected_rank) {
    result.reason = "witness rank " + std::to_string(result.witness_rank) + " below " +
                    std::to_string(result.expected_rank);
  } else {
    result.status = Verdict::CertifiedYes;
    result.reason = "blended witness reaches rank n - d - 1 with zero stress on the erased bar";
  }
  return result;
}

SuperimposeResult superimpose_tensegrities(const Framework& t1, const Stress& w1, const Framework& t2,
                                           const Stress& w2, const SharedVertexMap& shared, VertexPair cancel,
                                           double tol, const NumericTolerance& t) {
  require_same_dimension(t1, t2, shared);
  const int d = t1.dimension();
  if (shared.shared_count() < d + 1) {
    throw PreconditionError("superimposing needs at least d + 1 = " + std::to_string(d + 1) + " shared vertices");
  }
  w1.require_keyed_by(t1.graph());
  w2.require_keyed_by(t2.graph());
  require_shared_coordinates(t1, t2, shared, tol);
  require_spanning_shared(t1, shared, t);

  if (!t1.graph().contains(cancel)) throw InputError("member " + pair_text(cancel) + " is not in the first tensegrity");
  const auto cancel2 = partner_pair(shared, cancel);
  if (!cancel2 || !t2.graph().contains(*cancel2)) {
    throw InputError("member " + pair_text(cancel) + " is not shared with the second tensegrity");
  }
  const MemberKind k1 = t1.graph().member(cancel).kind;
  const MemberKind k2 = t2.graph().member(*cancel2).kind;
  const bool opposite = (k1 == MemberKind::Cable && k2 == MemberKind::Strut) ||
                        (k1 == MemberKind::Strut && k2 == MemberKind::Cable);
  if (!opposite) {
    throw InputError("cancelled member must be a cable in one tensegrity and a strut in the other (got " +
                     std::string(to_string(k1)) + " and " + std::string(to_string(k2)) + ")");
  }
  for (const auto& [f, w, name] : {std::tuple{&t1, &w1, "first"}, std::tuple{&t2, &w2, "second"}}) {
    const Certificate c = check_super_stability(*f, *w, t);
    if (c.verdict != Verdict::CertifiedYes) {
      throw PreconditionError(std::string(name) + " tensegrity is not super stable: " + c.reason);
    }
  }
  const double c1 = w1.at(cancel);
  const double c2 = w2.at(*cancel2);
  if (c1 == 0.0 || c2 == 0.0) throw PreconditionError("cancelled member carries zero stress");
  const double a = 1.0 / std::abs(c1);
  const double b = 1.0 / std::abs(c2);

  struct Slot {
    double stress = 0.0;
    std::optional<MemberKind> first;
    std::optional<MemberKind> second;
  };
  std::map<VertexPair, Slot> slots;
  std::vector<VertexPair> order;
  for (const Member& m : t1.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.first_embedding());
    order.push_back(e);
    slots[e].stress += a * w1.at(m.ends);
    slots[e].first = m.kind;
  }
  for (const Member& m : t2.graph().members()) {
    const VertexPair e = map_pair(m.ends, shared.second_embedding());
    if (!slots.contains(e)) order.push_back(e);
    slots[e].stress += b * w2.at(m.ends);
    slots[e].second = m.kind;
  }
  const VertexPair cancelled = map_pair(cancel, shared.first_embedding());
  double scale = 0.0;
  for (const auto& [e, slot] : slots) scale = std::max(scale, std::abs(slot.stress));
  const double zero_tol = t.psd_slack * scale;

  std::vector<Member> members;
  std::map<VertexPair, double> stress;
  for (const VertexPair& e : order) {
    if (e == cancelled) continue;
    const Slot& slot = slots.at(e);
    MemberKind kind;
    if (slot.first && slot.second) {
      if (*slot.first == MemberKind::Bar || *slot.second == MemberKind::Bar) {
        kind = MemberKind::Bar;
      } else if (slot.stress > zero_tol) {
        kind = MemberKind::Cable;
      } else if (slot.stress < -zero_tol) {
        kind = MemberKind::Strut;
      } else {
        continue;
      }
    } else {
      kind = slot.first ? *slot.first : *slot.second;
    }
    members.push_back({e, kind});
    stress.emplace(e, slot.stress);
  }
  return {Framework(TensegrityGraph(shared.combined_size(), std::move(members)), combined_configuration(t1, t2, shared)),
          Stress(std::move(stress))};
}

}  // namespace rigid
