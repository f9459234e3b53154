#include "dqls/linalg.hpp"

#include <cstdlib>

namespace dqls {

namespace {

void require_finite(const CMatrix& m) {
  if (!m.allFinite()) throw InvalidMatrix("matrix has non-finite entries");
}

}  // namespace

RankTolerance default_tolerance() {
  if (const char* env = std::getenv("DQLS_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return RankTolerance::relative(v);
  }
  return RankTolerance::relative(1e-10);
}

Subspace Subspace::full(Index n, double tol) {
  return {n, CMatrix::Identity(n, n), tol};
}

Subspace Subspace::zero(Index n, double tol) {
  return {n, CMatrix(n, 0), tol};
}

Subspace Subspace::from_span(const CMatrix& vectors, const RankTolerance& tol) {
  Subspace s = range(vectors, tol);
  return s;
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw DimensionMismatch("subspace_distance: ambient dimensions differ");
  CMatrix diff = a.projector() - b.projector();
  if (diff.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(diff);
  return svd.singularValues()(0);
}

double subspace_overlap(const Subspace& s, const CVector& v) {
  if (s.ambient_dim != v.size())
    throw DimensionMismatch("subspace_overlap: ambient dimension mismatch");
  return (s.basis.adjoint() * v).squaredNorm();
}

Index svd_rank(const CMatrix& m, const RankTolerance& tol) {
  require_finite(m);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double thr = tol.threshold(m.rows(), m.cols(), sv(0));
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return r;
}

Subspace range(const CMatrix& m, const RankTolerance& tol) {
  require_finite(m);
  if (m.cols() == 0) return Subspace::zero(m.rows());
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double thr = sv.size() ? tol.threshold(m.rows(), m.cols(), sv(0)) : 0.0;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return {m.rows(), svd.matrixU().leftCols(r), thr};
}

Subspace kernel(const CMatrix& m, const RankTolerance& tol) {
  require_finite(m);
  if (m.rows() == 0) return Subspace::full(m.cols());
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double thr = sv.size() ? tol.threshold(m.rows(), m.cols(), sv(0)) : 0.0;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return {m.cols(), svd.matrixV().rightCols(m.cols() - r), thr};
}

Subspace cokernel(const CMatrix& m, const RankTolerance& tol) {
  return kernel(CMatrix(m.adjoint()), tol);
}

Subspace intersect(const std::vector<Subspace>& subspaces, const RankTolerance& tol) {
  if (subspaces.empty()) throw DimensionMismatch("intersect: empty list");
  const Index n = subspaces.front().ambient_dim;
  for (const auto& s : subspaces)
    if (s.ambient_dim != n)
      throw DimensionMismatch("intersect: ambient dimensions differ");
  // The intersection is the kernel of M = sum_j (I - P_j), a Hermitian PSD
  // matrix with unit-scale spectrum. A self-adjoint eigendecomposition is
  // far more robust here than an SVD of the stacked complements, and the
  // cutoff is anchored at the natural projector scale 1 so that the
  // everything-full case degrades to the zero matrix instead of rescaled
  // numerical noise.
  CMatrix msum = CMatrix::Zero(n, n);
  CMatrix eye = CMatrix::Identity(n, n);
  for (const auto& s : subspaces) msum += eye - s.projector();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(msum);
  double thr = tol.threshold(n, n, 1.0);
  Index k = 0;
  while (k < n && es.eigenvalues()(k) < thr) ++k;
  return {n, es.eigenvectors().leftCols(k), thr};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector vec(const CMatrix& m) {
  CVector v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

CMatrix unvec(const CVector& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw DimensionMismatch("unvec: size mismatch");
  CMatrix m(rows, cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

Index commutant_dimension(const std::vector<CMatrix>& matrices, const RankTolerance& tol) {
  if (matrices.empty()) throw DimensionMismatch("commutant_dimension: empty list");
  const Index d = matrices.front().rows();
  for (const auto& m : matrices)
    if (m.rows() != d || m.cols() != d)
      throw DimensionMismatch("commutant_dimension: sizes differ or non-square");
  // vec([X, M]) = (M^T x I - I x M) vec(X)
  const Index n = static_cast<Index>(matrices.size());
  CMatrix eye = CMatrix::Identity(d, d);
  CMatrix stacked(n * d * d, d * d);
  for (Index i = 0; i < n; ++i)
    stacked.middleRows(i * d * d, d * d) =
        kron(matrices[i].transpose(), eye) - kron(eye, matrices[i]);
  return d * d - svd_rank(stacked, tol);
}

}  // namespace dqls
