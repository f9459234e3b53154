#include "dqls/quantum_state.hpp"

#include "dqls/rng.hpp"

#include <algorithm>
#include <numeric>

namespace dqls {

namespace {

void check_dims(const std::vector<Index>& dims) {
  if (dims.empty()) throw InvalidState("dims must be non-empty");
  for (Index d : dims)
    if (d < 2) throw InvalidState("every qudit dimension must be >= 2");
}

std::vector<Index> strides_of(const std::vector<Index>& dims) {
  std::vector<Index> strides(dims.size());
  Index s = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    strides[i] = s;
    s *= dims[i];
  }
  return strides;
}

}  // namespace

Index product_dim(const std::vector<Index>& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

Index PureState::dim() const { return product_dim(dims); }
Index DensityMatrix::dim() const { return product_dim(dims); }

PureState normalize(const PureState& s) {
  double n = s.amplitudes.norm();
  if (n == 0.0) throw InvalidState("cannot normalize the zero vector");
  return {s.dims, s.amplitudes / n, true};
}

PureState random_state(const std::vector<Index>& dims, std::uint64_t seed,
                       std::uint64_t stream) {
  check_dims(dims);
  auto rng = make_rng(seed, stream);
  Index d = product_dim(dims);
  CVector amp(d);
  for (Index i = 0; i < d; ++i) amp(i) = standard_complex_gaussian(rng);
  return normalize({dims, amp, false});
}

DensityMatrix partial_trace(const PureState& s, const std::vector<int>& keep) {
  const Index n = s.n_subsystems();
  if (keep.empty()) throw InvalidIndexSet("keep set must be non-empty");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw InvalidIndexSet("keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw InvalidIndexSet("keep indices must be strictly increasing");
  }
  std::vector<int> comp;
  for (int a = 0; a < n; ++a)
    if (!std::binary_search(keep.begin(), keep.end(), a)) comp.push_back(a);

  std::vector<Index> keep_dims, comp_dims;
  for (int a : keep) keep_dims.push_back(s.dims[a]);
  for (int a : comp) comp_dims.push_back(s.dims[a]);
  const Index dk = product_dim(keep_dims);
  const Index dc = comp.empty() ? 1 : product_dim(comp_dims);

  auto strides = strides_of(s.dims);
  // flat index = sum over keep of i_a * stride[a] + sum over comp of j_a * stride[a]
  auto offset_of = [&](const std::vector<int>& subs, const std::vector<Index>& sub_dims,
                       Index flat) {
    Index off = 0;
    for (int i = static_cast<int>(subs.size()) - 1; i >= 0; --i) {
      off += (flat % sub_dims[i]) * strides[subs[i]];
      flat /= sub_dims[i];
    }
    return off;
  };

  std::vector<Index> keep_off(dk), comp_off(dc);
  for (Index i = 0; i < dk; ++i) keep_off[i] = offset_of(keep, keep_dims, i);
  for (Index j = 0; j < dc; ++j) comp_off[j] = comp.empty() ? 0 : offset_of(comp, comp_dims, j);

  CMatrix rho = CMatrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i)
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0;
      for (Index e = 0; e < dc; ++e)
        acc += s.amplitudes(keep_off[i] + comp_off[e]) *
               std::conj(s.amplitudes(keep_off[j] + comp_off[e]));
      rho(i, j) = acc;
    }
  double nrm = s.amplitudes.squaredNorm();
  if (nrm > 0) rho /= nrm;
  return {keep_dims, rho};
}

PureState partial_inner(const PureState& s, int subsystem, Index basis_index) {
  const Index n = s.n_subsystems();
  if (subsystem < 0 || subsystem >= n) throw InvalidIndexSet("subsystem out of range");
  if (basis_index < 0 || basis_index >= s.dims[subsystem])
    throw InvalidIndexSet("basis index out of range");

  std::vector<Index> rest_dims;
  std::vector<int> rest;
  for (int a = 0; a < n; ++a)
    if (a != subsystem) {
      rest.push_back(a);
      rest_dims.push_back(s.dims[a]);
    }
  if (rest.empty()) throw InvalidIndexSet("cannot slice the only subsystem");

  auto strides = strides_of(s.dims);
  const Index dr = product_dim(rest_dims);
  CVector amp(dr);
  for (Index i = 0; i < dr; ++i) {
    Index flat = i, off = basis_index * strides[subsystem];
    for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k) {
      off += (flat % rest_dims[k]) * strides[rest[k]];
      flat /= rest_dims[k];
    }
    amp(i) = s.amplitudes(off);
  }
  return {rest_dims, amp, false};
}

PureState ghz_state(int n, int d) {
  if (n < 2 || d < 2) throw InvalidName("GHZ requires n >= 2, d >= 2");
  std::vector<Index> dims(n, d);
  Index full = product_dim(dims);
  CVector amp = CVector::Zero(full);
  // |k...k> has flat index k * (d^n - 1) / (d - 1)
  for (int k = 0; k < d; ++k) {
    Index idx = 0, s = 1;
    for (int a = 0; a < n; ++a) s *= d;
    s = (s - 1) / (d - 1);
    idx = k * s;
    amp(idx) = 1.0;
  }
  amp /= std::sqrt(static_cast<double>(d));
  return {dims, amp, true};
}

PureState w_state(int n) {
  if (n < 2) throw InvalidName("W requires n >= 2");
  std::vector<Index> dims(n, 2);
  CVector amp = CVector::Zero(product_dim(dims));
  for (int a = 0; a < n; ++a) amp(Index{1} << (n - 1 - a)) = 1.0;
  amp /= std::sqrt(static_cast<double>(n));
  return {dims, amp, true};
}

PureState dicke_state(int n, int k) {
  if (n < 2 || k < 0 || k > n) throw InvalidName("Dicke requires 0 <= k <= n");
  std::vector<Index> dims(n, 2);
  Index full = product_dim(dims);
  CVector amp = CVector::Zero(full);
  Index count = 0;
  for (Index b = 0; b < full; ++b) {
    int weight = 0;
    for (int a = 0; a < n; ++a) weight += static_cast<int>((b >> a) & 1);
    if (weight == k) {
      amp(b) = 1.0;
      ++count;
    }
  }
  amp /= std::sqrt(static_cast<double>(count));
  return {dims, amp, true};
}

PureState graph_state(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n < 2 || n > 8) throw InvalidName("graph states supported for 2..8 qubits");
  for (const auto& row : adjacency)
    if (static_cast<int>(row.size()) != n)
      throw InvalidName("adjacency matrix must be square");
  std::vector<Index> dims(n, 2);
  Index full = product_dim(dims);
  CVector amp = CVector::Constant(full, 1.0 / std::sqrt(static_cast<double>(full)));
  for (Index b = 0; b < full; ++b) {
    int sign = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adjacency[i][j]) sign += static_cast<int>(((b >> (n - 1 - i)) & (b >> (n - 1 - j))) & 1);
    if (sign & 1) amp(b) = -amp(b);
  }
  return {dims, amp, true};
}

PureState permute_subsystems(const PureState& s, const std::vector<int>& order) {
  const Index n = s.n_subsystems();
  if (static_cast<Index>(order.size()) != n)
    throw InvalidIndexSet("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int o : order) {
    if (o < 0 || o >= n || seen[o]) throw InvalidIndexSet("invalid permutation");
    seen[o] = true;
  }
  std::vector<Index> new_dims(n);
  for (Index p = 0; p < n; ++p) new_dims[p] = s.dims[order[p]];
  auto old_strides = strides_of(s.dims);
  auto new_dims_v = new_dims;
  const Index full = s.dim();
  CVector amp(full);
  for (Index i = 0; i < full; ++i) {
    Index flat = i, off = 0;
    for (int p = static_cast<int>(n) - 1; p >= 0; --p) {
      off += (flat % new_dims_v[p]) * old_strides[order[p]];
      flat /= new_dims_v[p];
    }
    amp(i) = s.amplitudes(off);
  }
  return {new_dims, amp, s.normalized};
}

PureState regroup(const PureState& s, const std::vector<int>& group_sizes) {
  Index total = 0;
  for (int g : group_sizes) {
    if (g < 1) throw InvalidIndexSet("group sizes must be positive");
    total += g;
  }
  if (total != s.n_subsystems()) throw InvalidIndexSet("group sizes must cover all subsystems");
  std::vector<Index> new_dims;
  Index a = 0;
  for (int g : group_sizes) {
    Index d = 1;
    for (int k = 0; k < g; ++k) d *= s.dims[a++];
    new_dims.push_back(d);
  }
  return {new_dims, s.amplitudes, s.normalized};
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dims != b.dims) throw DimensionMismatch("inner: dims mismatch");
  return a.amplitudes.dot(b.amplitudes);
}

}  // namespace dqls
