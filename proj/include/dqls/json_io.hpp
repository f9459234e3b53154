#pragma once

#include "dqls/locality.hpp"
#include "dqls/quantum_state.hpp"

#include <string>

namespace dqls {

/// {"dims":[...], "re":[...], "im":[...]}, amplitudes row-major.
PureState load_state_json(const std::string& path);
std::string state_to_json(const PureState& s);

/// {"n":4, "neighborhoods":[[1,2,3],[2,3,4]]}, 1-based subsystem indices.
NeighborhoodStructure load_ns_json(const std::string& path);
std::string ns_to_json(const NeighborhoodStructure& ns);

/// {"ambient_dim":d, "re":[[...],...], "im":[[...],...]}, basis columns.
Subspace load_subspace_json(const std::string& path);
std::string subspace_to_json(const Subspace& s);

}  // namespace dqls
