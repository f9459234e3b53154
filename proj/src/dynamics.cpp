#include "dqls/dynamics.hpp"

#include "dqls/rng.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

namespace dqls {

CMatrix assemble_superop(Index d, const std::optional<CMatrix>& hamiltonian,
                         const std::vector<CMatrix>& lindblads) {
  const Index d2 = d * d;
  CMatrix eye = CMatrix::Identity(d, d);
  CMatrix s = CMatrix::Zero(d2, d2);
  if (hamiltonian) {
    const CMatrix& h = *hamiltonian;
    s += Complex(0, -1) * (kron(eye, h) - kron(h.transpose(), eye));
  }
  for (const auto& l : lindblads) {
    CMatrix ldl = l.adjoint() * l;
    s += kron(l.conjugate(), l) - 0.5 * kron(eye, ldl) -
         0.5 * kron(ldl.transpose(), eye);
  }
  return s;
}

Liouvillian build_sweep_liouvillian(const PureState& s, const NeighborhoodStructure& ns,
                                    std::uint64_t seed, const RankTolerance& tol) {
  const Index d = s.dim();
  if (d > 64) throw TooLarge("Liouvillian construction limited to dimension 64");
  Liouvillian l;
  l.dims = s.dims;
  auto rng = make_rng(seed);
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& nb = ns.neighborhoods()[j];
    Subspace sigma = schmidt_span(s, nb.members, tol);
    if (sigma.dim() == 0 || sigma.dim() == sigma.ambient_dim) continue;
    // Orthonormal basis of the orthogonal complement of the Schmidt span.
    Subspace comp = kernel(CMatrix(sigma.basis.adjoint()), tol);
    CVector eta = sigma.basis * random_unit_vector(sigma.dim(), rng);
    for (Index k = 0; k < comp.dim(); ++k) {
      CMatrix lk = eta * comp.basis.col(k).adjoint();
      l.lindblad_neighborhoods.push_back(nb);
      l.lindblad_terms.push_back(embed_operator(lk, s.dims, nb.members));
    }
  }
  l.superop = assemble_superop(d, std::nullopt, l.lindblad_terms);
  return l;
}

GasCertificate certify(const Liouvillian& l, const PureState& target) {
  Eigen::ComplexEigenSolver<CMatrix> es(l.superop);
  const auto& ev = es.eigenvalues();
  double scale = std::max(l.superop.norm(), 1.0);
  GasCertificate cert;
  double abscissa = -std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  Index zero_index = -1;
  for (Index k = 0; k < ev.size(); ++k) {
    if (std::abs(ev(k)) <= 1e-9 * scale) {
      ++cert.kernel_dim;
      zero_index = k;
    } else {
      abscissa = std::max(abscissa, ev(k).real());
      gap = std::min(gap, std::abs(ev(k).real()));
    }
  }
  cert.spectral_abscissa = std::isfinite(abscissa) ? abscissa : 0.0;
  cert.gap = std::isfinite(gap) ? gap : 0.0;
  cert.zero_eig_nondegenerate = (cert.kernel_dim == 1);
  if (zero_index >= 0 && cert.kernel_dim == 1) {
    const Index d = l.dim();
    CMatrix rho = unvec(es.eigenvectors().col(zero_index), d, d);
    rho = 0.5 * (rho + rho.adjoint());
    Complex tr = rho.trace();
    if (std::abs(tr) > 1e-12) {
      rho /= tr;
      CVector psi = target.amplitudes.normalized();
      cert.steady_state_fidelity = std::real(psi.dot(rho * psi));
    }
  }
  return cert;
}

Liouvillian build_stabilizer(const PureState& s, const NeighborhoodStructure& ns,
                             std::uint64_t seed, const RankTolerance& tol,
                             GasCertificate* cert_out) {
  auto verdict = dqls_subspace(s, ns, tol);
  if (!verdict.is_dqls)
    throw NotDQLSTarget("target has dim H0 = " + std::to_string(verdict.dim_h0) +
                        "; quasi-local dissipation cannot make it GAS");
  GasCertificate last;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Liouvillian l =
        build_sweep_liouvillian(s, ns, seed + 1000003ull * attempt, tol);
    last = certify(l, s);
    if (last.passes()) {
      if (cert_out) *cert_out = last;
      return l;
    }
  }
  throw CertificateFailed(
      "no certified generator after 10 resamples; kernel_dim = " +
      std::to_string(last.kernel_dim) +
      ", abscissa = " + std::to_string(last.spectral_abscissa));
}

bool standard_form_check(const Liouvillian& l, const PureState& s, double tol) {
  CVector psi = s.amplitudes.normalized();
  for (const auto& lk : l.lindblad_terms)
    if ((lk * psi).norm() > tol) return false;
  if (l.hamiltonian) {
    CVector hp = (*l.hamiltonian) * psi;
    Complex h = psi.dot(hp);
    if ((hp - h * psi).norm() > tol) return false;
  }
  return true;
}

Liouvillian gauge_transform(const Liouvillian& l, const std::vector<Complex>& c) {
  if (c.size() != l.lindblad_terms.size())
    throw DimensionMismatch("need one gauge scalar per Lindblad term");
  const Index d = l.dim();
  Liouvillian out;
  out.dims = l.dims;
  out.lindblad_neighborhoods = l.lindblad_neighborhoods;
  CMatrix h = l.hamiltonian ? *l.hamiltonian : CMatrix::Zero(d, d);
  for (size_t k = 0; k < c.size(); ++k) {
    const CMatrix& lk = l.lindblad_terms[k];
    out.lindblad_terms.push_back(lk + c[k] * CMatrix::Identity(d, d));
    h -= Complex(0, 0.5) * (std::conj(c[k]) * lk - c[k] * lk.adjoint());
  }
  out.hamiltonian = h;
  out.superop = assemble_superop(d, out.hamiltonian, out.lindblad_terms);
  return out;
}

std::vector<TrajectoryPoint> evolve(const Liouvillian& l, const DensityMatrix& rho0,
                                    const PureState& target, double t_final, double dt) {
  if (dt <= 0 || t_final < dt) throw InvalidParameter("need dt > 0 and t_final >= dt");
  const Index d = l.dim();
  if (rho0.matrix.rows() != d)
    throw DimensionMismatch("initial density matrix size mismatch");
  double nrm = l.superop.norm();
  double step = std::min(dt, nrm > 0 ? 0.1 / nrm : dt);
  const long n_steps = static_cast<long>(std::ceil(t_final / step));
  step = t_final / static_cast<double>(n_steps);

  CVector v = vec(rho0.matrix);
  CVector psi = target.amplitudes.normalized();
  double trace0 = std::real(rho0.matrix.trace());

  long stride = std::max(1l, n_steps / 1000);
  std::vector<TrajectoryPoint> out;
  auto record = [&](double t) {
    CMatrix rho = unvec(v, d, d);
    TrajectoryPoint p;
    p.t = t;
    p.trace = std::real(rho.trace());
    p.fidelity = std::real(psi.dot(rho * psi));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (rho + rho.adjoint()));
    p.min_eigenvalue = es.eigenvalues()(0);
    out.push_back(p);
    if (std::abs(p.trace - trace0) > 1e-6)
      throw IntegrationUnstable("trace drift exceeded 1e-6; decrease dt");
  };

  record(0.0);
  for (long k = 0; k < n_steps; ++k) {
    CVector k1 = l.superop * v;
    CVector k2 = l.superop * (v + 0.5 * step * k1);
    CVector k3 = l.superop * (v + 0.5 * step * k2);
    CVector k4 = l.superop * (v + step * k3);
    v += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((k + 1) % stride == 0 || k + 1 == n_steps)
      record(static_cast<double>(k + 1) * step);
  }
  return out;
}

DensityMatrix propagate(const Liouvillian& l, const DensityMatrix& rho0, double t) {
  if (t < 0) throw InvalidParameter("propagate: need t >= 0");
  const Index d = l.dim();
  if (rho0.matrix.rows() != d)
    throw DimensionMismatch("initial density matrix size mismatch");
  CMatrix prop = (t * l.superop).exp();
  CVector v = prop * vec(rho0.matrix);
  CMatrix rho = unvec(v, d, d);
  // Re-Hermitize to scrub the O(eps) skew part left by the exponential.
  return {rho0.dims, 0.5 * (rho + rho.adjoint())};
}

GhzEpsilonReport practical_stabilization_experiment(double epsilon, std::uint64_t seed,
                                                    const RankTolerance& tol) {
  if (epsilon < 0 || epsilon > 0.2)
    throw InvalidParameter("epsilon must lie in [0, 0.2]");
  PureState ghz = ghz_state(4, 2);
  auto rng = make_rng(seed);
  CMatrix u = haar_unitary(16, rng);

  // Principal log with eigenphases in [0, 2pi); Schur of a unitary matrix is
  // diagonal up to rounding.
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& q = schur.matrixU();
  CVector phases(16);
  double hnorm = 0;
  for (Index k = 0; k < 16; ++k) {
    double theta = std::arg(schur.matrixT()(k, k));
    if (theta < 0) theta += 2 * M_PI;
    phases(k) = theta;
    hnorm = std::max(hnorm, theta);
  }
  CVector evo(16);
  for (Index k = 0; k < 16; ++k)
    evo(k) = std::exp(Complex(0, -epsilon * phases(k).real()));
  CMatrix u_eps = q * evo.asDiagonal() * q.adjoint();

  PureState psi_eps{ghz.dims, u_eps * ghz.amplitudes, true};

  GhzEpsilonReport rep;
  rep.epsilon = epsilon;
  rep.h_norm = hnorm;
  rep.fidelity = std::norm(inner(ghz, psi_eps));
  double x = epsilon * hnorm;
  rep.bound = x < 1 ? std::pow(1.0 - x / (1.0 - x), 2) : 0.0;
  rep.bound_satisfied = rep.fidelity >= rep.bound - 1e-12;

  NeighborhoodStructure ns(4, {Neighborhood{{0, 1, 2}}, Neighborhood{{1, 2, 3}}});
  rep.target_was_dqls = dqls_subspace(psi_eps, ns, tol).is_dqls;
  return rep;
}

}  // namespace dqls
