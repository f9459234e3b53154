#pragma once

#include "dqls/engine.hpp"

#include <vector>

namespace dqls {

struct QLHamiltonian {
  std::vector<Index> dims;
  std::vector<Neighborhood> neighborhoods;
  std::vector<CMatrix> terms;  // Hermitian PSD, one per neighborhood factor

  /// Full-space sum of embedded terms; requires prod(dims) <= 4096.
  CMatrix assemble() const;
  /// Orthonormal basis of the zero-energy ground space of the assembled sum.
  Subspace kernel_space(const RankTolerance& tol) const;
};

/// Canonical frustration-free construction: H_j = I - projector onto the
/// Schmidt span of s on neighborhood j. ker(H) equals the DQLS subspace.
QLHamiltonian parent_hamiltonian(const PureState& s, const NeighborhoodStructure& ns,
                                 const RankTolerance& tol);

/// True iff every vector in ker(sum of terms) is annihilated by each
/// zero-shifted term individually.
bool frustration_free_check(const QLHamiltonian& h, const RankTolerance& tol);

/// Verifies H0(s), relative to h's own neighborhoods, is contained in
/// ker(H); s itself must be a ground state.
bool ground_containment_check(const QLHamiltonian& h, const PureState& s,
                              const RankTolerance& tol);

}  // namespace dqls
