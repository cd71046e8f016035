#include "rigid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rigid/error.hpp"
#include "rigid/random.hpp"

namespace rigid {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) throw InputError(std::string(what) + " has non-finite entries");
}

double rank_cutoff(const Eigen::MatrixXd& m, double sigma_max, const NumericTolerance& t) {
  return t.rank_threshold_factor * static_cast<double>(std::max(m.rows(), m.cols())) * sigma_max;
}

int count_above(const Eigen::VectorXd& singular_values, double cutoff) {
  int rank = 0;
  for (Eigen::Index k = 0; k < singular_values.size(); ++k) {
    if (singular_values(k) > cutoff) ++rank;
  }
  return rank;
}

Eigen::MatrixXd stress_matrix_from_vector(const TensegrityGraph& g, const Eigen::VectorXd& w) {
  const int n = g.vertex_count();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  const auto members = g.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const int i = members[k].ends.first();
    const int j = members[k].ends.second();
    const double wk = w(static_cast<Eigen::Index>(k));
    omega(i, j) = -wk;
    omega(j, i) = -wk;
    omega(i, i) += wk;
    omega(j, j) += wk;
  }
  return omega;
}

Eigen::MatrixXd rigidity_matrix_raw(const Framework& f) {
  const auto& g = f.graph();
  const auto& p = f.configuration().points();
  const int d = f.dimension();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.member_count()),
                                            static_cast<Eigen::Index>(d) * g.vertex_count());
  const auto members = g.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const int i = members[k].ends.first();
    const int j = members[k].ends.second();
    const Eigen::RowVectorXd diff = p.row(i) - p.row(j);
    const auto row = static_cast<Eigen::Index>(k);
    r.block(row, static_cast<Eigen::Index>(i) * d, 1, d) = diff;
    r.block(row, static_cast<Eigen::Index>(j) * d, 1, d) = -diff;
  }
  return r;
}

}  // namespace

void NumericTolerance::validate() const {
  if (!(rank_threshold_factor > 0.0) || !std::isfinite(rank_threshold_factor)) {
    throw InputError("rank_threshold_factor must be positive");
  }
  if (!(psd_slack > 0.0) || !std::isfinite(psd_slack)) {
    throw InputError("psd_slack must be positive");
  }
}

std::size_t RigidityMatrixForm::row_of(VertexPair member) const {
  auto it = std::find(rows.begin(), rows.end(), member);
  if (it == rows.end()) {
    throw InputError("{" + std::to_string(member.first()) + "," + std::to_string(member.second()) +
                     "} has no row in the rigidity matrix");
  }
  return static_cast<std::size_t>(it - rows.begin());
}

RigidityMatrixForm rigidity_matrix(const Framework& f) {
  if (f.graph().member_count() == 0) throw InputError("rigidity matrix of a framework with no members");
  RigidityMatrixForm out;
  out.matrix = rigidity_matrix_raw(f);
  for (const Member& m : f.graph().members()) out.rows.push_back(m.ends);
  return out;
}

int numeric_rank(const Eigen::MatrixXd& m, const NumericTolerance& t) {
  t.validate();
  require_finite(m, "matrix");
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return count_above(sv, rank_cutoff(m, sv(0), t));
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, const NumericTolerance& t) {
  t.validate();
  require_finite(m, "matrix");
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int rank = (sv.size() == 0 || sv(0) == 0.0) ? 0 : count_above(sv, rank_cutoff(m, sv(0), t));
  return svd.matrixV().rightCols(cols - rank);
}

int rigidity_rank(const Framework& f, const NumericTolerance& t) {
  if (f.graph().member_count() == 0) return 0;
  return numeric_rank(rigidity_matrix_raw(f), t);
}

int full_rigidity_rank(int n, int d) {
  if (n >= d + 1) return d * n - d * (d + 1) / 2;
  return n * (n - 1) / 2;
}

bool is_locally_rigid_at(const Framework& f, const NumericTolerance& t) {
  const int n = f.vertex_count();
  const int d = f.dimension();
  if (n < d) {
    throw UnsupportedError("local rigidity test needs n >= d (n = " + std::to_string(n) +
                           ", d = " + std::to_string(d) + ")");
  }
  return rigidity_rank(f, t) == d * n - d * (d + 1) / 2;
}

std::vector<Stress> equilibrium_stress_basis(const Framework& f, const NumericTolerance& t) {
  const Eigen::MatrixXd r = rigidity_matrix(f).matrix;
  const Eigen::MatrixXd left_null = null_space(r.transpose(), t);
  std::vector<Stress> basis;
  basis.reserve(static_cast<std::size_t>(left_null.cols()));
  for (Eigen::Index c = 0; c < left_null.cols(); ++c) {
    basis.push_back(Stress::from_vector(f.graph(), left_null.col(c)));
  }
  return basis;
}

double equilibrium_residual(const Framework& f, const Stress& w) {
  const auto& g = f.graph();
  const Eigen::VectorXd values = w.to_vector(g);
  const auto& p = f.configuration().points();
  Eigen::MatrixXd force = Eigen::MatrixXd::Zero(p.rows(), p.cols());
  const auto members = g.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const int i = members[k].ends.first();
    const int j = members[k].ends.second();
    const Eigen::RowVectorXd diff = p.row(i) - p.row(j);
    const double wk = values(static_cast<Eigen::Index>(k));
    force.row(j) += wk * diff;
    force.row(i) -= wk * diff;
  }
  return force.size() == 0 ? 0.0 : force.cwiseAbs().maxCoeff();
}

bool verify_equilibrium(const Framework& f, const Stress& w, double tol) {
  return equilibrium_residual(f, w) <= tol;
}

StressMatrixForm stress_matrix(const TensegrityGraph& g, const Stress& w) {
  return StressMatrixForm{stress_matrix_from_vector(g, w.to_vector(g))};
}

bool is_positive_semidefinite(const StressMatrixForm& s, const NumericTolerance& t) {
  t.validate();
  require_finite(s.omega, "stress matrix");
  if (s.omega.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.omega, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const double largest = ev.cwiseAbs().maxCoeff();
  return ev.minCoeff() >= -t.psd_slack * (1.0 + largest);
}

MaxRankStress max_rank_stress(const Framework& f, int trials, std::uint64_t seed,
                              const NumericTolerance& t) {
  if (trials < 1) throw InputError("max_rank_stress needs at least one trial");
  const Eigen::MatrixXd r = rigidity_matrix(f).matrix;
  const Eigen::MatrixXd basis = null_space(r.transpose(), t);
  if (basis.cols() == 0) return {Stress::zero(f.graph()), 0};

  SeededRandomSource rng(seed);
  MaxRankStress best{Stress::zero(f.graph()), -1};
  Eigen::VectorXd coefficients(basis.cols());
  for (int trial = 0; trial < trials; ++trial) {
    for (Eigen::Index c = 0; c < coefficients.size(); ++c) coefficients(c) = rng.uniform(-1.0, 1.0);
    const Eigen::VectorXd w = basis * coefficients;
    const int rank = numeric_rank(stress_matrix_from_vector(f.graph(), w), t);
    if (rank > best.rank) best = {Stress::from_vector(f.graph(), w), rank};
  }
  return best;
}

Configuration universal_configuration(const StressMatrixForm& s, const NumericTolerance& t) {
  const Eigen::MatrixXd kernel = null_space(s.omega, t);
  const auto k = kernel.cols();
  if (k < 2) {
    throw DegenerateKernelError("stress matrix kernel has dimension " + std::to_string(k) +
                                "; a universal configuration needs at least 2");
  }
  const Eigen::Index n = s.omega.rows();
  const Eigen::VectorXd ones_unit = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd projected = kernel - ones_unit * (ones_unit.transpose() * kernel);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(projected, Eigen::ComputeThinU);
  return Configuration(static_cast<int>(k - 1), Eigen::MatrixXd(svd.matrixU().leftCols(k - 1)));
}

bool is_universal_for(const Framework& f, const Stress& w, const NumericTolerance& t) {
  const int d = f.dimension();
  const int n = f.vertex_count();
  if (f.configuration().affine_dimension(t.rank_threshold_factor) != d) {
    throw InputError("configuration does not affinely span dimension " + std::to_string(d));
  }
  if (w.to_vector(f.graph()).isZero(0.0)) return false;
  return numeric_rank(stress_matrix(f.graph(), w).omega, t) == n - d - 1;
}

bool lies_on_conic_at_infinity(const std::vector<Eigen::VectorXd>& directions, int d,
                               const NumericTolerance& t) {
  if (d < 1) throw InputError("dimension must be positive");
  const int unknowns = d * (d + 1) / 2;
  Eigen::MatrixXd system(static_cast<Eigen::Index>(directions.size()), unknowns);
  for (std::size_t row = 0; row < directions.size(); ++row) {
    const Eigen::VectorXd& v = directions[row];
    if (v.size() != d) {
      throw InputError("direction " + std::to_string(row) + " has length " +
                       std::to_string(v.size()) + ", expected " + std::to_string(d));
    }
    if (!v.allFinite()) throw InputError("direction " + std::to_string(row) + " is not finite");
    const double norm = v.norm();
    if (norm == 0.0) throw InputError("direction " + std::to_string(row) + " is the zero vector");
    const Eigen::VectorXd u = v / norm;
    int col = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        system(static_cast<Eigen::Index>(row), col++) = (a == b ? 1.0 : 2.0) * u(a) * u(b);
      }
    }
  }
  if (static_cast<int>(directions.size()) < unknowns) return true;
  return numeric_rank(system, t) < unknowns;
}

}  // namespace rigid
