#pragma once

// Reproducible random data for the verification suites. Everything draws from
// std::mt19937_64 through modular reduction, so a seed gives the same stream on
// every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "vctk/moves.hpp"

namespace vctk {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, n); n > 0.
std::size_t draw(Rng& rng, std::size_t n);

/// Random word of alpha/beta/kappa tokens valid for mu (weak moves optional).
BraidWord random_word(Rng& rng, std::size_t mu, std::size_t length, bool include_weak = false);

/// Endpoint of a random walk of `steps` braid moves from `seed`.
DistinguishedBasis random_walk(Rng& rng, const DistinguishedBasis& seed, std::size_t steps);

/// Product of random elementary matrices and sign flips; determinant +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 12);

/// Random cycle with coordinates in [-range, range].
Cycle random_cycle(Rng& rng, std::size_t n, long range);

/// `count` bases obtained by short random walks from catalog seeds (cycled in order).
std::vector<DistinguishedBasis> sample_orbit_bases(Rng& rng, const std::vector<DistinguishedBasis>& seeds,
                                                   std::size_t count, std::size_t max_steps = 12);

}  // namespace vctk
