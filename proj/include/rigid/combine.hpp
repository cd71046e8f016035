#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rigid/certify.hpp"
#include "rigid/linalg.hpp"
#include "rigid/model.hpp"

namespace rigid {

/// Identification of vertices of two frameworks. Combined indices put the
/// shared vertices first (in pair order), then the first framework's other
/// vertices, then the second's, each in ascending original order.
class SharedVertexMap {
 public:
  SharedVertexMap(int first_size, int second_size, std::vector<std::pair<int, int>> pairs);

  int first_size() const { return first_size_; }
  int second_size() const { return second_size_; }
  int shared_count() const { return static_cast<int>(pairs_.size()); }
  int combined_size() const { return first_size_ + second_size_ - shared_count(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// Combined index of a vertex of the first / second framework.
  int from_first(int v) const;
  int from_second(int v) const;
  /// Whole relabelings, indexed by original vertex.
  const std::vector<int>& first_embedding() const { return first_embedding_; }
  const std::vector<int>& second_embedding() const { return second_embedding_; }

  bool shared_in_first(int v) const;
  /// Partner in the second framework of a shared first-framework vertex.
  std::optional<int> partner_of_first(int v) const;

 private:
  int first_size_;
  int second_size_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> first_embedding_;
  std::vector<int> second_embedding_;
};

/// Zero-pad s into a total_n x total_n matrix; row k of s lands on row
/// embedding[k]. Throws InputError for a non-injective or out-of-range map.
StressMatrixForm extend_stress_matrix(const StressMatrixForm& s, const std::vector<int>& embedding,
                                      int total_n);

struct BlendResult {
  StressMatrixForm matrix;
  int rank = 0;
};

/// t * s1 + (1 - t) * s2 and its numeric rank; t = 0 or 1 is rejected.
BlendResult blend_stress_matrices(const StressMatrixForm& s1, const StressMatrixForm& s2, double t,
                                  const NumericTolerance& tol = {});

/// Union of two frameworks sharing at least d + 1 vertices. Members of the
/// second framework joining two shared vertices are kept only if the first
/// framework has them too.
Framework glue_union(const Framework& f1, const Framework& f2, const SharedVertexMap& shared, double tol);

/// Rigidly move f2 so its shared vertices land on f1's (orthogonal Procrustes
/// on the shared points). Reflections are allowed.
Framework align_second_to_first(const Framework& f1, const Framework& f2, const SharedVertexMap& shared);

struct CombineResult {
  Framework framework;
  /// Keyed by framework's members; the erased bar is not among them.
  Stress witness;
  /// Blended stress the erased bar would carry; 0 exactly when the blend is used.
  double erased_bar_stress = 0.0;
  int witness_rank = 0;
  int expected_rank = 0;
  int first_rank = 0;
  int second_rank = 0;
  /// The bar carried zero stress in one input and that input's stress was
  /// used alone.
  bool union_fallback = false;
  /// CertifiedYes when the witness reaches expected_rank, Inconclusive otherwise.
  Verdict status = Verdict::Inconclusive;
  std::string reason;
};

/// Superimpose two globally rigid bar frameworks sharing exactly d + 1
/// affinely independent vertices and erase the common bar (given in the
/// first framework's indices). The witness blends max-rank stresses rescaled
/// to +1 / -1 on the bar, at t = 1/2.
CombineResult combine_erase_bar(const Framework& f1, const Framework& f2, const SharedVertexMap& shared,
                                VertexPair bar, std::uint64_t seed, double tol,
                                const NumericTolerance& t = {});

struct SuperimposeResult {
  Framework framework;
  Stress stress;
};

/// Superimpose two super stable tensegrities whose stresses are supplied,
/// cancelling a member that is a cable in one and a strut in the other
/// (given in the first framework's indices). Other doubly covered members
/// become cables or struts by the sign of their summed stress, or vanish.
SuperimposeResult superimpose_tensegrities(const Framework& t1, const Stress& w1, const Framework& t2,
                                           const Stress& w2, const SharedVertexMap& shared, VertexPair cancel,
                                           double tol, const NumericTolerance& t = {});

}  // namespace rigid
