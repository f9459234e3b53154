#include "dqls/decision.hpp"

#include <algorithm>
#include <set>

namespace dqls {

namespace {

constexpr Index kGeoCap = 4096;

Index factor_dim(const PureState& s, const std::vector<int>& subset) {
  Index d = 1;
  for (int a : subset) d *= s.dims[a];
  return d;
}

// Schmidt rank of s across subset | complement.
Index bipartition_rank(const PureState& s, const std::vector<int>& subset,
                       const RankTolerance& tol) {
  return schmidt_span(s, subset, tol).dim();
}

std::string nb_string(const Neighborhood& nb) {
  std::string out = "{";
  for (size_t i = 0; i < nb.members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nb.members[i] + 1);
  }
  return out + "}";
}

}  // namespace

bool extended_nogo(const PureState& s, const NeighborhoodStructure& ns,
                   const RankTolerance& tol) {
  const Index full = s.dim();
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& members = ns.neighborhoods()[j].members;
    Index d_nb = factor_dim(s, members);
    if (d_nb > full / d_nb) return false;
    if (bipartition_rank(s, members, tol) != d_nb) return false;
  }
  return true;
}

std::optional<Index> pair_dim_h0(const PureState& s, const Neighborhood& nb1,
                                 const Neighborhood& nb2, const RankTolerance& tol) {
  const Index n = s.n_subsystems();
  std::vector<int> a, b, c;
  for (int x = 0; x < n; ++x) {
    bool in1 = nb1.contains(x), in2 = nb2.contains(x);
    if (in1 && in2)
      b.push_back(x);
    else if (in1)
      a.push_back(x);
    else if (in2)
      c.push_back(x);
    else
      throw InvalidIndexSet("pair does not cover all subsystems");
  }
  if (a.empty() || c.empty())
    throw InvalidIndexSet("one neighborhood contains the other");

  std::vector<int> order;
  order.insert(order.end(), a.begin(), a.end());
  order.insert(order.end(), b.begin(), b.end());
  order.insert(order.end(), c.begin(), c.end());
  PureState p = permute_subsystems(s, order);

  if (b.empty()) {
    // H0 = Sigma_a x Sigma_c exactly; dim = (Schmidt rank across a|c)^2.
    std::vector<int> left(a.size());
    for (size_t i = 0; i < a.size(); ++i) left[i] = static_cast<int>(i);
    Index r = bipartition_rank(p, left, tol);
    return r * r;
  }

  PureState tri = regroup(p, {static_cast<int>(a.size()), static_cast<int>(b.size()),
                              static_cast<int>(c.size())});
  if (tri.dims[0] > tri.dims[2]) tri = permute_subsystems(tri, {2, 1, 0});
  const Index da = tri.dims[0], db = tri.dims[1], dc = tri.dims[2];

  Index r_a = bipartition_rank(tri, {0}, tol);
  Index r_c = bipartition_rank(tri, {0, 1}, tol);
  bool maximal = (r_a == std::min(da, db * dc)) && (r_c == std::min(da * db, dc));

  if (maximal && da * db > dc)
    return coefficient_nullity(build_slices(tri), tol);
  if (maximal && da * db <= dc)
    return da * da;  // Sigma_ab full => H0 = H_a x Sigma_bc, dim d_a * rank(rho_a)
  if (tri.dim() <= kGeoCap) {
    NeighborhoodStructure pair_ns(3, {Neighborhood{{0, 1}}, Neighborhood{{1, 2}}});
    return dqls_subspace(tri, pair_ns, tol).dim_h0;
  }
  return std::nullopt;
}

DecisionTrace decide(const PureState& s, const NeighborhoodStructure& ns,
                     const RankTolerance& tol) {
  DecisionTrace trace;
  const Index n = s.n_subsystems();
  const Index full = s.dim();

  // Step (i): drop neighborhoods whose extended Schmidt span is the whole
  // space. The dimension condition marks the candidates; an explicit
  // full-span check replaces the genericity assumption.
  std::vector<Neighborhood> kept;
  for (Index j = 0; j < ns.size(); ++j) {
    const auto& nb = ns.neighborhoods()[j];
    Index d_nb = factor_dim(s, nb.members);
    Index d_comp = full / d_nb;
    bool ignorable = false;
    if (d_nb <= d_comp && bipartition_rank(s, nb.members, tol) == d_nb)
      ignorable = true;
    if (ignorable)
      trace.ignored_neighborhoods.push_back(nb);
    else
      kept.push_back(nb);
  }
  if (kept.empty()) {
    trace.outcome = Outcome::NotDQLS;
    trace.reasons.push_back(
        "step (i): every extended Schmidt span is the full space, so H0 = H");
    return trace;
  }

  // Step (ii): a pair of kept neighborhoods covering all subsystems whose
  // two-neighborhood structure already pins H0 to one dimension.
  for (size_t k = 0; k < kept.size(); ++k)
    for (size_t l = k + 1; l < kept.size(); ++l) {
      std::set<int> uni(kept[k].members.begin(), kept[k].members.end());
      uni.insert(kept[l].members.begin(), kept[l].members.end());
      if (static_cast<Index>(uni.size()) != n) continue;
      if (kept[k].subset_of(kept[l]) || kept[l].subset_of(kept[k])) continue;
      auto dim = pair_dim_h0(s, kept[k], kept[l], tol);
      if (!dim) continue;
      if (*dim == 1) {
        trace.pair_found = {kept[k], kept[l]};
        trace.outcome = Outcome::DQLS;
        trace.reasons.push_back("step (ii): neighborhoods " + nb_string(kept[k]) +
                                " and " + nb_string(kept[l]) +
                                " alone give a one-dimensional H0");
        return trace;
      }
      if (kept.size() == 2) {
        // Only these two constraints remain (ignored spans were verified
        // full), so the pair's H0 is the full answer.
        trace.pair_found = {kept[k], kept[l]};
        trace.outcome = Outcome::NotDQLS;
        trace.reasons.push_back("step (ii): the two remaining neighborhoods give dim H0 = " +
                                std::to_string(*dim));
        return trace;
      }
    }

  // Step (iii): subsystems no kept neighborhood touches tensor a full local
  // factor into H0.
  std::set<int> covered;
  for (const auto& nb : kept)
    covered.insert(nb.members.begin(), nb.members.end());
  for (int a = 0; a < n; ++a)
    if (!covered.count(a)) trace.leftover_subsystems.push_back(a);
  if (!trace.leftover_subsystems.empty()) {
    trace.outcome = Outcome::NotDQLS;
    trace.reasons.push_back(
        "step (iii): uncovered subsystems contribute a full tensor factor to H0");
    return trace;
  }

  // Step (iv): two-block coarse-grainings of the kept structure; a non-DQLS
  // certificate there transfers to the refinement.
  const size_t m = kept.size();
  if (m >= 2 && m <= 16) {
    for (unsigned long mask = 1; mask + 1 < (1ul << m); ++mask) {
      if (!(mask & 1)) continue;  // fix block membership of the first neighborhood
      std::set<int> b1, b2;
      for (size_t j = 0; j < m; ++j) {
        auto& blk = (mask >> j) & 1 ? b1 : b2;
        blk.insert(kept[j].members.begin(), kept[j].members.end());
      }
      if (b1.empty() || b2.empty()) continue;
      if (static_cast<Index>(b1.size()) >= n || static_cast<Index>(b2.size()) >= n)
        continue;  // blocks must stay proper neighborhoods
      Neighborhood nb1{std::vector<int>(b1.begin(), b1.end())};
      Neighborhood nb2{std::vector<int>(b2.begin(), b2.end())};
      std::set<int> uni(b1);
      uni.insert(b2.begin(), b2.end());
      if (static_cast<Index>(uni.size()) != n) continue;
      if (nb1.subset_of(nb2) || nb2.subset_of(nb1)) continue;
      std::optional<Index> dim;
      try {
        dim = pair_dim_h0(s, nb1, nb2, tol);
      } catch (const DqlsError&) {
        continue;
      }
      if (dim && *dim > 1) {
        trace.coarse_grained_pair = {nb1, nb2};
        trace.outcome = Outcome::NotDQLS;
        trace.reasons.push_back("step (iv): coarse-graining to " + nb_string(nb1) +
                                ", " + nb_string(nb2) + " gives dim H0 = " +
                                std::to_string(*dim));
        return trace;
      }
    }
  }

  // Fallback: direct geometric computation at desk scale.
  if (full <= kGeoCap) {
    auto v = dqls_subspace(s, ns, tol);
    trace.outcome = v.is_dqls ? Outcome::DQLS : Outcome::NotDQLS;
    trace.reasons.push_back("direct computation: dim H0 = " + std::to_string(v.dim_h0));
    return trace;
  }

  trace.outcome = Outcome::Inconclusive;
  trace.reasons.push_back("no step produced a certificate at this size");
  return trace;
}

}  // namespace dqls
