#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rigid/linalg.hpp"
#include "rigid/model.hpp"

namespace rigid {

enum class Verdict { CertifiedYes, CertifiedNo, ProbablyNo, Inconclusive };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Which check produced a certificate; needed to replay it.
enum class CheckKind { GenericGlobal, SuperStability, Combinatorial2d, StressWitness };

std::string_view to_string(CheckKind k);
std::optional<CheckKind> parse_check_kind(std::string_view text);

/// Numerical evidence behind a verdict.
struct Witness {
  Configuration configuration;
  Stress stress;
  int rigidity_rank = 0;
  int stress_rank = 0;
};

struct Certificate {
  CheckKind check = CheckKind::GenericGlobal;
  Verdict verdict = Verdict::Inconclusive;
  int dimension = 0;
  /// Graph the verdict is about (kept so the certificate can be replayed).
  TensegrityGraph graph{1, {}};
  std::string fingerprint;
  std::optional<Witness> witness;
  int expected_rigidity_rank = 0;
  int expected_stress_rank = 0;
  NumericTolerance tolerance;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string reason;
};

/// FNV-1a 64 over the canonical text "n;i-j:kind;..." in member order, hex.
std::string graph_fingerprint(const TensegrityGraph& g);

/// Stress-rank certification of generic global rigidity for a bar graph.
/// n <= d + 1 is decided by completeness. Otherwise up to `trials` random
/// configurations are sampled; CertifiedYes as soon as one attains
/// rank R = dn - d(d+1)/2 and stress rank n - d - 1, else ProbablyNo.
Certificate certify_generic_global_rigidity(const TensegrityGraph& g, int d, int trials,
                                            std::uint64_t seed, const NumericTolerance& t = {});

/// Super stability of a tensegrity under a supplied stress: equilibrium,
/// properness, PSD, rank n - d - 1, stressed directions off every conic at
/// infinity. The first failing condition is named in the reason.
Certificate check_super_stability(const Framework& f, const Stress& w, const NumericTolerance& t = {});

/// Certificate for a framework together with an explicit stress at its own
/// configuration: CertifiedYes when R(p) has full rank, w is in equilibrium
/// and its stress matrix has rank n - d - 1; Inconclusive otherwise.
Certificate certify_with_witness(const Framework& f, const Stress& w, const NumericTolerance& t = {});

/// (2,3) pebble game: does g contain a spanning (2,3)-tight subgraph?
bool pebble_game_rigid_2d(const TensegrityGraph& g);

/// Number of independent edges found by the (2,3) pebble game.
int pebble_game_independent_edges(const TensegrityGraph& g);

/// Generic rigidity of g in dimension d: pebble game for d = 2, rigidity
/// matrix rank at a seeded random configuration otherwise.
bool is_generically_rigid(const TensegrityGraph& g, int d, std::uint64_t seed,
                          const NumericTolerance& t = {});

/// g rigid and g - e rigid for every member e.
bool is_redundantly_rigid(const TensegrityGraph& g, int d, std::uint64_t seed,
                          const NumericTolerance& t = {});

/// No vertex cut of size < m. K_k counts as (k-1)-connected.
bool vertex_connectivity_at_least(const TensegrityGraph& g, int m);

/// (d+1)-connected and redundantly rigid in dimension d.
bool hendrickson_property(const TensegrityGraph& g, int d, std::uint64_t seed,
                          const NumericTolerance& t = {});

/// Deterministic planar certificate: redundantly rigid and 3-connected.
Certificate certify_global_rigidity_2d_combinatorial(const TensegrityGraph& g);

/// Re-run the check recorded in c and return the recomputed certificate.
Certificate replay(const Certificate& c);

namespace detail {
// Both connectivity paths are exposed so they can be checked against each other.
int vertex_connectivity_exhaustive(const TensegrityGraph& g, int cap);
int vertex_connectivity_flow(const TensegrityGraph& g, int cap);
}  // namespace detail

}  // namespace rigid
