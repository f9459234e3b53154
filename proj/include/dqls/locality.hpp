#pragma once

#include "dqls/linalg.hpp"

#include <vector>

namespace dqls {

/// Proper subset of {0..N-1}; stored sorted. 0-based in code, 1-based in JSON.
struct Neighborhood {
  std::vector<int> members;

  bool contains(int a) const;
  bool subset_of(const Neighborhood& other) const;
  bool operator==(const Neighborhood& other) const { return members == other.members; }
};

/// Complete neighborhood structure: the union of the neighborhoods covers all
/// subsystems. Completeness and properness are enforced at construction.
class NeighborhoodStructure {
 public:
  NeighborhoodStructure(int n_subsystems, std::vector<Neighborhood> neighborhoods);

  int n_subsystems() const { return n_; }
  const std::vector<Neighborhood>& neighborhoods() const { return neighborhoods_; }
  Index size() const { return static_cast<Index>(neighborhoods_.size()); }

  std::vector<int> complement(Index j) const;

 private:
  int n_;
  std::vector<Neighborhood> neighborhoods_;
};

/// True iff every fine neighborhood is contained in some coarse neighborhood.
bool is_coarse_graining(const NeighborhoodStructure& fine,
                        const NeighborhoodStructure& coarse);

struct TripartiteGrouping {
  std::vector<Index> dims;           // (d_a, d_b, d_c)
  std::vector<int> group_sizes;      // subsystem counts per block
  Neighborhood n_ab;                 // first  ∪ middle block, 0-based
  Neighborhood n_bc;                 // middle ∪ last  block, 0-based
};

/// Groups N qudits of local dimension d into three blocks whose neighborhoods
/// N_ab, N_bc each touch at most floor((N+3)/2) subsystems.
TripartiteGrouping tripartite_grouping(int N, int d);

}  // namespace dqls
