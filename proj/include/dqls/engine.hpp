#pragma once

#include "dqls/locality.hpp"
#include "dqls/quantum_state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dqls {

struct DqlsVerdict {
  Index dim_h0 = 0;
  Subspace h0_basis;
  bool is_dqls = false;
  std::string method = "geometric";
  RankTolerance tol_used;
};

/// Support of the reduced density matrix on the given subsystems, as a
/// subspace of the subset factor space.
Subspace schmidt_span(const PureState& s, const std::vector<int>& subset,
                      const RankTolerance& tol);

/// Embeds a subspace of the neighborhood factor into the global space by
/// tensoring with the complement identity (extended Schmidt span).
Subspace extend_span(const Subspace& span, const std::vector<Index>& dims,
                     const std::vector<int>& subset);

/// Embeds an operator on the subset factor into the full space as op x I,
/// expressed in the original subsystem ordering.
CMatrix embed_operator(const CMatrix& op, const std::vector<Index>& dims,
                       const std::vector<int>& subset);

/// H0 = intersection of all extended Schmidt spans; DQLS iff dim H0 == 1.
DqlsVerdict dqls_subspace(const PureState& s, const NeighborhoodStructure& ns,
                          const RankTolerance& tol);

/// Applies an invertible operator per subsystem; output may be unnormalized.
PureState slocc_transform(const PureState& s, const std::vector<CMatrix>& ops);

struct MembershipWitnesses {
  bool member = false;
  std::vector<CMatrix> operators;  // one X on the complement factor per neighborhood
  std::vector<double> residuals;
};

/// Per neighborhood, solves |s'> = (I_{N_j} x X) |s> for X on the complement
/// in the least-squares sense; membership requires every residual below tol.
MembershipWitnesses membership_witnesses(const PureState& s, const PureState& s_prime,
                                         const NeighborhoodStructure& ns,
                                         const RankTolerance& tol);

}  // namespace dqls
