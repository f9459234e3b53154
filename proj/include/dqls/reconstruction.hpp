#pragma once

#include "dqls/engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dqls {

struct SupportInput {
  Neighborhood neighborhood;
  Subspace support;  // subspace of the neighborhood factor space
};

enum class ReconStatus { Unique, NotUnique, Inconsistent };

struct ReconstructionResult {
  ReconStatus status = ReconStatus::Inconsistent;
  std::optional<PureState> state;
  Subspace candidate_space;
};

/// Intersects the extended supports; a one-dimensional intersection yields the
/// state (global phase fixed by making the largest amplitude real positive).
ReconstructionResult reconstruct(const std::vector<Index>& dims,
                                 const std::vector<SupportInput>& inputs,
                                 const RankTolerance& tol);

struct UdaCase {
  std::string name;
  ReconStatus status = ReconStatus::Inconsistent;
  Index candidate_dim = 0;
  std::optional<double> fidelity;
  std::string note;
};

/// Runs the taxonomy exemplars: Dicke(4,2), GHZ_3, W_3, and a random 4-qubit
/// state, each reconstructed from its own two-neighborhood supports.
std::vector<UdaCase> uda_battery(const RankTolerance& tol);

}  // namespace dqls
