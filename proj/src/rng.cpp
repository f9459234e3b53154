#include "dqls/rng.hpp"

namespace dqls {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 mixing of (seed, stream) into the engine seed
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

Complex standard_complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  double re = n01(rng);
  double im = n01(rng);
  return {re, im};
}

CMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = standard_complex_gaussian(rng);
  return m;
}

CVector random_unit_vector(Index n, std::mt19937_64& rng) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = standard_complex_gaussian(rng);
  double norm = v.norm();
  if (norm == 0.0) return random_unit_vector(n, rng);
  return v / norm;
}

CMatrix haar_unitary(Index n, std::mt19937_64& rng) {
  CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    Complex d = r(i, i);
    double a = std::abs(d);
    q.col(i) *= (a == 0.0) ? Complex(1, 0) : d / a;
  }
  return q;
}

}  // namespace dqls
