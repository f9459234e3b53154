#pragma once

#include "dqls/linalg.hpp"

#include <cstdint>
#include <vector>

namespace dqls {

/// Dense multipartite pure state. Amplitudes are stored row-major with
/// subsystem 1 slowest; this is the single layout convention shared by every
/// module. Subsystem indices are 0-based in code, 1-based in JSON.
struct PureState {
  std::vector<Index> dims;
  CVector amplitudes;
  bool normalized = false;

  Index dim() const;
  Index n_subsystems() const { return static_cast<Index>(dims.size()); }
};

struct DensityMatrix {
  std::vector<Index> dims;
  CMatrix matrix;  // Hermitian PSD, unit trace

  Index dim() const;
};

Index product_dim(const std::vector<Index>& dims);

PureState normalize(const PureState& s);

/// Fubini-Study uniform sample: i.i.d. complex Gaussian amplitudes, normalized.
PureState random_state(const std::vector<Index>& dims, std::uint64_t seed,
                       std::uint64_t stream = 0);

/// keep: 0-based subsystem indices, strictly increasing.
DensityMatrix partial_trace(const PureState& s, const std::vector<int>& keep);

/// <i|_b psi> on the remaining subsystems; unnormalized by design.
PureState partial_inner(const PureState& s, int subsystem, Index basis_index);

PureState ghz_state(int n, int d = 2);
PureState w_state(int n);
PureState dicke_state(int n, int k);
/// Controlled-Z over the edges of the adjacency matrix applied to |+>^n.
PureState graph_state(const std::vector<std::vector<int>>& adjacency);

/// Reorders subsystems: subsystem p of the result is subsystem order[p] of s.
PureState permute_subsystems(const PureState& s, const std::vector<int>& order);

/// Flattens groups of adjacent subsystems into single coarse subsystems.
/// group_sizes must sum to n_subsystems; amplitudes are untouched.
PureState regroup(const PureState& s, const std::vector<int>& group_sizes);

Complex inner(const PureState& a, const PureState& b);

}  // namespace dqls
