#include "dqls/engine.hpp"

#include <algorithm>

namespace dqls {

namespace {

// Row map from the permuted layout (order[p] placed at position p) back to the
// original layout: orig_index[i_perm].
std::vector<Index> permutation_row_map(const std::vector<Index>& dims,
                                       const std::vector<int>& order) {
  const Index n = static_cast<Index>(dims.size());
  std::vector<Index> strides(n);
  Index s = 1;
  for (Index i = n - 1; i >= 0; --i) {
    strides[i] = s;
    s *= dims[i];
  }
  std::vector<Index> perm_dims(n);
  for (Index p = 0; p < n; ++p) perm_dims[p] = dims[order[p]];
  const Index full = s;
  std::vector<Index> map(full);
  for (Index i = 0; i < full; ++i) {
    Index flat = i, off = 0;
    for (Index p = n - 1; p >= 0; --p) {
      off += (flat % perm_dims[p]) * strides[order[p]];
      flat /= perm_dims[p];
    }
    map[i] = off;
  }
  return map;
}

std::vector<int> subset_first_order(Index n, const std::vector<int>& subset) {
  std::vector<int> order(subset);
  for (int a = 0; a < n; ++a)
    if (!std::binary_search(subset.begin(), subset.end(), a)) order.push_back(a);
  return order;
}

// Amplitudes reshaped as a (d_subset x d_complement) matrix after moving the
// subset to the slow axis.
CMatrix matricize(const PureState& s, const std::vector<int>& subset) {
  PureState p = permute_subsystems(s, subset_first_order(s.n_subsystems(), subset));
  Index d_sub = 1;
  for (size_t k = 0; k < subset.size(); ++k) d_sub *= p.dims[k];
  Index d_comp = p.dim() / d_sub;
  CMatrix m(d_sub, d_comp);
  for (Index i = 0; i < d_sub; ++i)
    for (Index j = 0; j < d_comp; ++j) m(i, j) = p.amplitudes(i * d_comp + j);
  return m;
}

}  // namespace

Subspace schmidt_span(const PureState& s, const std::vector<int>& subset,
                      const RankTolerance& tol) {
  CMatrix psi = matricize(s, subset);
  return range(psi, tol);
}

Subspace extend_span(const Subspace& span, const std::vector<Index>& dims,
                     const std::vector<int>& subset) {
  const Index n = static_cast<Index>(dims.size());
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n) throw InvalidIndexSet("subset out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw InvalidIndexSet("subset must be strictly increasing");
  }
  Index d_sub = 1;
  for (int a : subset) d_sub *= dims[a];
  if (span.ambient_dim != d_sub)
    throw DimensionMismatch("span ambient dimension does not match subset factor");
  Index d_comp = product_dim(dims) / d_sub;

  // In the permuted layout (subset slowest) the extended basis is B x I_comp.
  CMatrix ext = kron(span.basis, CMatrix::Identity(d_comp, d_comp));
  auto order = subset_first_order(n, subset);
  auto map = permutation_row_map(dims, order);
  CMatrix out(ext.rows(), ext.cols());
  for (Index i = 0; i < ext.rows(); ++i) out.row(map[i]) = ext.row(i);
  return {product_dim(dims), out, span.tol};
}

CMatrix embed_operator(const CMatrix& op, const std::vector<Index>& dims,
                       const std::vector<int>& subset) {
  const Index n = static_cast<Index>(dims.size());
  Index d_sub = 1;
  for (int a : subset) d_sub *= dims[a];
  if (op.rows() != d_sub || op.cols() != d_sub)
    throw DimensionMismatch("operator size does not match subset factor");
  const Index full = product_dim(dims);
  const Index d_comp = full / d_sub;
  CMatrix big = kron(op, CMatrix::Identity(d_comp, d_comp));
  auto order = subset_first_order(n, subset);
  auto map = permutation_row_map(dims, order);
  CMatrix out(full, full);
  for (Index i = 0; i < full; ++i)
    for (Index j = 0; j < full; ++j) out(map[i], map[j]) = big(i, j);
  return out;
}

DqlsVerdict dqls_subspace(const PureState& s, const NeighborhoodStructure& ns,
                          const RankTolerance& tol) {
  if (s.n_subsystems() != ns.n_subsystems())
    throw DimensionMismatch("state and neighborhood structure disagree on N");
  const Index full = s.dim();
  if (full > 4096) throw TooLarge("DQLS subspace limited to total dimension 4096");

  std::vector<Subspace> extended;
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& members = ns.neighborhoods()[j].members;
    Subspace sigma = schmidt_span(s, members, tol);
    extended.push_back(extend_span(sigma, s.dims, members));
  }
  Subspace h0 = intersect(extended, tol);

  DqlsVerdict v;
  v.dim_h0 = h0.dim();
  v.h0_basis = h0;
  v.is_dqls = (v.dim_h0 == 1);
  v.method = "geometric";
  v.tol_used = tol;
  return v;
}

PureState slocc_transform(const PureState& s, const std::vector<CMatrix>& ops) {
  const Index n = s.n_subsystems();
  if (static_cast<Index>(ops.size()) != n)
    throw DimensionMismatch("need one operator per subsystem");
  for (Index a = 0; a < n; ++a) {
    if (ops[a].rows() != s.dims[a] || ops[a].cols() != s.dims[a])
      throw DimensionMismatch("operator size does not match subsystem dimension");
    if (svd_rank(ops[a], default_tolerance()) != s.dims[a])
      throw SingularSLOCC("SLOCC operator is numerically singular");
  }
  CVector amp = s.amplitudes;
  Index left = 1, right = s.dim();
  for (Index a = 0; a < n; ++a) {
    const Index d = s.dims[a];
    right /= d;
    CVector next(amp.size());
    for (Index l = 0; l < left; ++l)
      for (Index r = 0; r < right; ++r) {
        for (Index i = 0; i < d; ++i) {
          Complex acc = 0;
          for (Index k = 0; k < d; ++k)
            acc += ops[a](i, k) * amp(l * d * right + k * right + r);
          next(l * d * right + i * right + r) = acc;
        }
      }
    amp = next;
    left *= d;
  }
  return {s.dims, amp, false};
}

MembershipWitnesses membership_witnesses(const PureState& s, const PureState& s_prime,
                                         const NeighborhoodStructure& ns,
                                         const RankTolerance& tol) {
  if (s.dims != s_prime.dims)
    throw DimensionMismatch("states must share dimensions");
  MembershipWitnesses w;
  w.member = true;
  double scale = std::max(s.amplitudes.norm(), s_prime.amplitudes.norm());
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& members = ns.neighborhoods()[j].members;
    CMatrix psi = matricize(s, members);        // d_nb x d_comp
    CMatrix psi_p = matricize(s_prime, members);
    // |s'> = (I x X)|s|  <=>  psi' = psi X^T; min-norm least squares for X^T
    Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(psi);
    CMatrix xt = cod.solve(psi_p);
    double residual = (psi * xt - psi_p).norm();
    w.operators.push_back(xt.transpose());
    w.residuals.push_back(residual);
    double thr = tol.threshold(psi.rows(), psi.cols(), std::max(scale, 1.0));
    if (residual > std::max(thr, 1e-9 * std::max(scale, 1.0))) w.member = false;
  }
  return w;
}

}  // namespace dqls
