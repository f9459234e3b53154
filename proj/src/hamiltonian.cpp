#include "dqls/hamiltonian.hpp"

namespace dqls {

CMatrix QLHamiltonian::assemble() const {
  Index full = product_dim(dims);
  if (full > 4096) throw TooLarge("assembled Hamiltonian limited to dimension 4096");
  CMatrix h = CMatrix::Zero(full, full);
  for (size_t j = 0; j < terms.size(); ++j)
    h += embed_operator(terms[j], dims, neighborhoods[j].members);
  return h;
}

Subspace QLHamiltonian::kernel_space(const RankTolerance& tol) const {
  CMatrix h = assemble();
  if (h.rows() == 0) return Subspace::zero(0);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const auto& ev = es.eigenvalues();
  double emax = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  double thr = tol.threshold(h.rows(), h.cols(), std::max(emax, 1.0));
  Index k = 0;
  while (k < ev.size() && std::abs(ev(k)) <= thr) ++k;
  return {h.rows(), es.eigenvectors().leftCols(k), thr};
}

QLHamiltonian parent_hamiltonian(const PureState& s, const NeighborhoodStructure& ns,
                                 const RankTolerance& tol) {
  if (s.dim() > 4096) throw TooLarge("parent Hamiltonian limited to dimension 4096");
  QLHamiltonian h;
  h.dims = s.dims;
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& nb = ns.neighborhoods()[j];
    Subspace sigma = schmidt_span(s, nb.members, tol);
    CMatrix term = CMatrix::Identity(sigma.ambient_dim, sigma.ambient_dim) -
                   sigma.projector();
    h.neighborhoods.push_back(nb);
    h.terms.push_back(term);
  }
  return h;
}

bool frustration_free_check(const QLHamiltonian& h, const RankTolerance& tol) {
  if (h.terms.empty()) return true;
  // Ground space of the assembled sum (lowest-eigenvalue eigenspace).
  CMatrix big = h.assemble();
  Eigen::SelfAdjointEigenSolver<CMatrix> ges(big);
  const auto& ev = ges.eigenvalues();
  double emax = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  double thr = tol.threshold(big.rows(), big.cols(), std::max(emax, 1.0));
  Index k = 0;
  while (k < ev.size() && ev(k) <= ev(0) + thr) ++k;
  CMatrix ground = ges.eigenvectors().leftCols(k);

  for (size_t j = 0; j < h.terms.size(); ++j) {
    // Zero-shift the term so its ground energy is exactly 0.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.terms[j]);
    CMatrix shifted = embed_operator(
        CMatrix(h.terms[j] -
                es.eigenvalues()(0) *
                    CMatrix::Identity(h.terms[j].rows(), h.terms[j].cols())),
        h.dims, h.neighborhoods[j].members);
    for (Index c = 0; c < ground.cols(); ++c)
      if ((shifted * ground.col(c)).norm() > std::max(thr, 1e-8)) return false;
  }
  return true;
}

bool ground_containment_check(const QLHamiltonian& h, const PureState& s,
                              const RankTolerance& tol) {
  CMatrix big = h.assemble();
  CVector psi = s.amplitudes.normalized();
  double scale = std::max(big.norm(), 1.0);
  if ((big * psi).norm() > 1e-8 * scale)
    throw PreconditionFailed("state is not a ground state of the Hamiltonian");
  if (h.terms.empty()) return true;
  NeighborhoodStructure ns(static_cast<int>(h.dims.size()), h.neighborhoods);
  Subspace h0 = dqls_subspace(s, ns, tol).h0_basis;
  for (Index k = 0; k < h0.dim(); ++k)
    if ((big * h0.basis.col(k)).norm() > 1e-8 * scale) return false;
  return true;
}

}  // namespace dqls
