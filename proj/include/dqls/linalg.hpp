#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqls {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

struct DqlsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMatrix : DqlsError { using DqlsError::DqlsError; };
struct DimensionMismatch : DqlsError { using DqlsError::DqlsError; };
struct InvalidIndexSet : DqlsError { using DqlsError::DqlsError; };
struct InvalidName : DqlsError { using DqlsError::DqlsError; };
struct InvalidParameter : DqlsError { using DqlsError::DqlsError; };
struct InvalidState : DqlsError { using DqlsError::DqlsError; };
struct ConstructionError : DqlsError { using DqlsError::DqlsError; };
struct SingularSLOCC : DqlsError { using DqlsError::DqlsError; };
struct SloccDegenerate : DqlsError { using DqlsError::DqlsError; };
struct PreconditionFailed : DqlsError { using DqlsError::DqlsError; };
struct TooLarge : DqlsError { using DqlsError::DqlsError; };
struct NotDQLSTarget : DqlsError { using DqlsError::DqlsError; };
struct CertificateFailed : DqlsError { using DqlsError::DqlsError; };
struct IntegrationUnstable : DqlsError { using DqlsError::DqlsError; };
struct IncompleteNeighborhoods : DqlsError { using DqlsError::DqlsError; };

/// Numerical rank threshold. In relative mode the effective cutoff scales
/// with the largest singular value and the matrix size.
struct RankTolerance {
  enum class Mode { Relative, Absolute };
  Mode mode = Mode::Relative;
  double value = 1e-10;

  static RankTolerance relative(double v = 1e-10) { return {Mode::Relative, v}; }
  static RankTolerance absolute(double v) { return {Mode::Absolute, v}; }

  double threshold(Index rows, Index cols, double sigma_max) const {
    if (mode == Mode::Absolute) return value;
    return value * static_cast<double>(std::max(rows, cols)) * sigma_max;
  }
};

/// Default tolerance, overridable through the DQLS_TOL environment variable.
RankTolerance default_tolerance();

/// Linear subspace of C^ambient_dim given by an orthonormal column basis.
/// Equality of subspaces is always judged by projector distance, never by
/// comparing bases.
struct Subspace {
  Index ambient_dim = 0;
  CMatrix basis;  // ambient_dim x k, orthonormal columns
  double tol = 1e-10;

  Index dim() const { return basis.cols(); }
  CMatrix projector() const { return basis * basis.adjoint(); }

  static Subspace full(Index n, double tol = 1e-10);
  static Subspace zero(Index n, double tol = 1e-10);
  static Subspace from_span(const CMatrix& vectors, const RankTolerance& tol);
};

/// Spectral-norm distance between the projectors of two subspaces.
double subspace_distance(const Subspace& a, const Subspace& b);

/// Squared-overlap of a unit vector with a subspace, <v|P|v>.
double subspace_overlap(const Subspace& s, const CVector& v);

Index svd_rank(const CMatrix& m, const RankTolerance& tol);

Subspace range(const CMatrix& m, const RankTolerance& tol);
Subspace kernel(const CMatrix& m, const RankTolerance& tol);
Subspace cokernel(const CMatrix& m, const RankTolerance& tol);

/// Orthonormal basis of the intersection of the given subspaces, computed as
/// the kernel of the complement-projector sum, sum_j (I - P_j).
Subspace intersect(const std::vector<Subspace>& subspaces, const RankTolerance& tol);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-stacking vectorization, vec([[1,3],[2,4]]) = (1,2,3,4).
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Index rows, Index cols);

/// Dimension of {X : [X, M_i] = 0 for all i}.
Index commutant_dimension(const std::vector<CMatrix>& matrices, const RankTolerance& tol);

}  // namespace dqls
