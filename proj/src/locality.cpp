#include "dqls/locality.hpp"

#include <algorithm>
#include <set>

namespace dqls {

bool Neighborhood::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool Neighborhood::subset_of(const Neighborhood& other) const {
  return std::includes(other.members.begin(), other.members.end(),
                       members.begin(), members.end());
}

NeighborhoodStructure::NeighborhoodStructure(int n_subsystems,
                                             std::vector<Neighborhood> neighborhoods)
    : n_(n_subsystems), neighborhoods_(std::move(neighborhoods)) {
  if (n_ < 2) throw ConstructionError("need at least 2 subsystems");
  if (neighborhoods_.empty()) throw ConstructionError("no neighborhoods given");
  std::set<int> covered;
  for (auto& nb : neighborhoods_) {
    if (nb.members.empty()) throw ConstructionError("empty neighborhood");
    std::sort(nb.members.begin(), nb.members.end());
    nb.members.erase(std::unique(nb.members.begin(), nb.members.end()),
                     nb.members.end());
    for (int a : nb.members) {
      if (a < 0 || a >= n_) throw ConstructionError("neighborhood index out of range");
      covered.insert(a);
    }
    if (static_cast<int>(nb.members.size()) >= n_)
      throw ConstructionError("a neighborhood must be a proper subset");
  }
  std::sort(neighborhoods_.begin(), neighborhoods_.end(),
            [](const Neighborhood& a, const Neighborhood& b) {
              return a.members < b.members;
            });
  neighborhoods_.erase(std::unique(neighborhoods_.begin(), neighborhoods_.end()),
                       neighborhoods_.end());
  if (static_cast<int>(covered.size()) != n_)
    throw ConstructionError("neighborhood structure is not complete");
}

std::vector<int> NeighborhoodStructure::complement(Index j) const {
  if (j < 0 || j >= size()) throw InvalidIndexSet("neighborhood index out of range");
  std::vector<int> out;
  const auto& nb = neighborhoods_[j];
  for (int a = 0; a < n_; ++a)
    if (!nb.contains(a)) out.push_back(a);
  return out;
}

bool is_coarse_graining(const NeighborhoodStructure& fine,
                        const NeighborhoodStructure& coarse) {
  if (fine.n_subsystems() != coarse.n_subsystems())
    throw DimensionMismatch("coarse-graining comparison needs matching N");
  for (const auto& f : fine.neighborhoods()) {
    bool found = false;
    for (const auto& c : coarse.neighborhoods())
      if (f.subset_of(c)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

TripartiteGrouping tripartite_grouping(int N, int d) {
  if (N <= 3) throw InvalidParameter("tripartite grouping needs N > 3");
  if (d < 2) throw InvalidParameter("local dimension must be >= 2");

  auto ipow = [](Index base, int e) {
    Index r = 1;
    while (e-- > 0) r *= base;
    return r;
  };

  int na, nb, nc;
  if (N % 2 == 0) {
    na = (N - 2) / 2;
    nb = 2;
    nc = (N - 2) / 2;
  } else if (d > 2) {
    na = (N - 1) / 2;
    nb = 1;
    nc = (N - 1) / 2;
  } else {
    na = (N - 3) / 2;
    nb = 2;
    nc = (N - 1) / 2;
  }

  TripartiteGrouping g;
  g.dims = {ipow(d, na), ipow(d, nb), ipow(d, nc)};
  g.group_sizes = {na, nb, nc};
  for (int a = 0; a < na + nb; ++a) g.n_ab.members.push_back(a);
  for (int a = na; a < N; ++a) g.n_bc.members.push_back(a);
  return g;
}

}  // namespace dqls
