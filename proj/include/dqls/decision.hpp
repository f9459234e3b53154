#pragma once

#include "dqls/engine.hpp"
#include "dqls/tripartite.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqls {

enum class Outcome { DQLS, NotDQLS, Inconclusive };

struct DecisionTrace {
  std::vector<Neighborhood> ignored_neighborhoods;  // step (i)
  std::vector<int> leftover_subsystems;             // step (iii)
  std::optional<std::pair<Neighborhood, Neighborhood>> pair_found;          // step (ii)
  std::optional<std::pair<Neighborhood, Neighborhood>> coarse_grained_pair; // step (iv)
  Outcome outcome = Outcome::Inconclusive;
  std::vector<std::string> reasons;
};

/// True iff every neighborhood satisfies dim H_{N_j} <= dim H_{complement}
/// and the state's RDM on it is full rank; such states are never DQLS.
bool extended_nogo(const PureState& s, const NeighborhoodStructure& ns,
                   const RankTolerance& tol);

/// dim H0 of s relative to the two-neighborhood structure {nb1, nb2} whose
/// union covers all subsystems, via the tripartite grouping (a = nb1\nb2,
/// b = nb1 cap nb2, c = nb2\nb1). Returns nullopt when no exact method
/// applies at the size ceiling.
std::optional<Index> pair_dim_h0(const PureState& s, const Neighborhood& nb1,
                                 const Neighborhood& nb2, const RankTolerance& tol);

/// Four-step decision procedure with numerical full-rank surrogates in place
/// of genericity assumptions; Inconclusive is a first-class outcome.
DecisionTrace decide(const PureState& s, const NeighborhoodStructure& ns,
                     const RankTolerance& tol);

}  // namespace dqls
