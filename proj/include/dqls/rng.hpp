#pragma once

#include "dqls/linalg.hpp"

#include <cstdint>
#include <random>

namespace dqls {

/// Deterministic generator for (seed, stream) pairs. Independent streams let
/// experiments split randomness per task while recording a single base seed.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Complex standard_complex_gaussian(std::mt19937_64& rng);

CMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng);

CVector random_unit_vector(Index n, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
CMatrix haar_unitary(Index n, std::mt19937_64& rng);

}  // namespace dqls
