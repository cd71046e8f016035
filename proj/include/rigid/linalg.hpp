#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rigid/model.hpp"

namespace rigid {

/// Relative cutoffs for numeric rank and PSD tests.
struct NumericTolerance {
  /// Singular values below factor * max(rows, cols) * sigma_max count as zero.
  double rank_threshold_factor = 1e-10;
  /// Smallest eigenvalue may dip to -psd_slack * (1 + max |eigenvalue|).
  double psd_slack = 1e-9;

  /// Throws InputError unless both fields are positive and finite.
  void validate() const;
};

/// e x dn matrix R(p). Row k belongs to members[k]; the row for {i, j} holds
/// p_i - p_j in block i and p_j - p_i in block j (no factor 2).
struct RigidityMatrixForm {
  Eigen::MatrixXd matrix;
  std::vector<VertexPair> rows;

  /// Row index of a member; throws InputError if absent.
  std::size_t row_of(VertexPair member) const;
};

/// Symmetric n x n stress matrix with zero row sums.
struct StressMatrixForm {
  Eigen::MatrixXd omega;

  int size() const { return static_cast<int>(omega.rows()); }
};

RigidityMatrixForm rigidity_matrix(const Framework& f);

int numeric_rank(const Eigen::MatrixXd& m, const NumericTolerance& t = {});

/// Orthonormal basis (as columns) of the numeric null space of m.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, const NumericTolerance& t = {});

/// rank R(p) == d n - d(d+1)/2. Requires n >= d.
bool is_locally_rigid_at(const Framework& f, const NumericTolerance& t = {});

/// Rank of R(p), 0 when there are no members.
int rigidity_rank(const Framework& f, const NumericTolerance& t = {});

/// Rank a generically rigid graph on n vertices attains in dimension d:
/// dn - d(d+1)/2 for n >= d + 1, otherwise n(n-1)/2.
int full_rigidity_rank(int n, int d);

/// Basis of the left null space of R(p), one Stress per basis vector.
std::vector<Stress> equilibrium_stress_basis(const Framework& f, const NumericTolerance& t = {});

/// |sum_i w_ij (p_i - p_j)| <= tol componentwise at every vertex j.
bool verify_equilibrium(const Framework& f, const Stress& w, double tol);

/// Largest componentwise equilibrium residual over all vertices.
double equilibrium_residual(const Framework& f, const Stress& w);

StressMatrixForm stress_matrix(const TensegrityGraph& g, const Stress& w);

bool is_positive_semidefinite(const StressMatrixForm& s, const NumericTolerance& t = {});

struct MaxRankStress {
  Stress stress;
  int rank = 0;
};

/// Random combinations of the equilibrium stress basis; keeps the one whose
/// stress matrix has the largest numeric rank (first one on ties).
MaxRankStress max_rank_stress(const Framework& f, int trials, std::uint64_t seed,
                              const NumericTolerance& t = {});

/// Configuration in dimension k - 1 read off the kernel of s (k = kernel
/// dimension). Throws DegenerateKernelError when k < 2.
Configuration universal_configuration(const StressMatrixForm& s, const NumericTolerance& t = {});

/// Nonzero w whose stress matrix has rank n - d - 1. Throws InputError if
/// the configuration's affine span is not d-dimensional.
bool is_universal_for(const Framework& f, const Stress& w, const NumericTolerance& t = {});

/// Whether a nonzero quadratic form on R^d vanishes on every direction.
bool lies_on_conic_at_infinity(const std::vector<Eigen::VectorXd>& directions, int d,
                               const NumericTolerance& t = {});

}  // namespace rigid
