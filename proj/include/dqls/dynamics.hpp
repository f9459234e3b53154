#pragma once

#include "dqls/engine.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dqls {

struct Liouvillian {
  std::vector<Index> dims;
  CMatrix superop;  // d^2 x d^2, column-stacking vectorization
  std::vector<Neighborhood> lindblad_neighborhoods;
  std::vector<CMatrix> lindblad_terms;  // embedded full-space operators
  std::optional<CMatrix> hamiltonian;

  Index dim() const { return product_dim(dims); }
};

struct GasCertificate {
  Index kernel_dim = 0;
  double spectral_abscissa = 0;  // largest real part among nonzero modes
  double gap = 0;                // |Re lambda_2|
  bool zero_eig_nondegenerate = false;
  double steady_state_fidelity = 0;
  bool passes() const {
    return kernel_dim == 1 && zero_eig_nondegenerate &&
           spectral_abscissa <= 1e-8 && steady_state_fidelity >= 1 - 1e-8;
  }
};

/// Assembles the vectorized generator from Hamiltonian and Lindblad parts.
CMatrix assemble_superop(Index d, const std::optional<CMatrix>& hamiltonian,
                         const std::vector<CMatrix>& lindblads);

/// One sweep-generator per neighborhood: Lindblad operators |eta><w_k| with
/// {w_k} spanning the orthogonal complement of the Schmidt span and eta a
/// seeded random unit vector inside it. Purely dissipative, standard form.
Liouvillian build_sweep_liouvillian(const PureState& s, const NeighborhoodStructure& ns,
                                    std::uint64_t seed, const RankTolerance& tol);

/// Spectral GAS certificate for the target state.
GasCertificate certify(const Liouvillian& l, const PureState& target);

/// Certified stabilizer for a DQLS target; resamples the sweep vectors up to
/// 10 times before giving up. Refuses non-DQLS targets.
Liouvillian build_stabilizer(const PureState& s, const NeighborhoodStructure& ns,
                             std::uint64_t seed, const RankTolerance& tol,
                             GasCertificate* cert_out = nullptr);

/// True iff every Lindblad term annihilates s and the Hamiltonian (if any)
/// has s as an eigenvector.
bool standard_form_check(const Liouvillian& l, const PureState& s, double tol);

/// Gauge transform: L_k -> L_k + c_k I, H -> H - (i/2) sum_k (c_k* L_k -
/// c_k L_k^dag); leaves the generator unchanged.
Liouvillian gauge_transform(const Liouvillian& l, const std::vector<Complex>& c);

struct TrajectoryPoint {
  double t = 0;
  double fidelity = 0;
  double trace = 0;
  double min_eigenvalue = 0;
};

/// Fixed-step 4th-order integration of rho' = L[rho]; fidelity is measured
/// against the given target state.
std::vector<TrajectoryPoint> evolve(const Liouvillian& l, const DensityMatrix& rho0,
                                    const PureState& target, double t_final, double dt);

/// Exact propagation rho(t) = exp(t S)[rho0] via the matrix exponential of
/// the (time-independent) superoperator. Preferred over evolve() for long
/// horizons, e.g. t of order 1/gap.
DensityMatrix propagate(const Liouvillian& l, const DensityMatrix& rho0, double t);

struct GhzEpsilonReport {
  double epsilon = 0;
  double fidelity = 0;
  double bound = 0;
  double h_norm = 0;
  bool target_was_dqls = false;
  bool bound_satisfied = false;
};

/// Perturbed-GHZ stabilization experiment: psi_eps = exp(-i eps H) GHZ_4 with
/// H the principal log of a Haar unitary (eigenphases in [0, 2pi)).
GhzEpsilonReport practical_stabilization_experiment(double epsilon, std::uint64_t seed,
                                                    const RankTolerance& tol);

}  // namespace dqls
