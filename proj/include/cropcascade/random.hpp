#pragma once

// Seed derivation and the few distributions the library draws from. Everything
// is built on std::mt19937_64 output directly so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

namespace cropcascade {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent child seed for stream `id` of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t id);

/// Uniform in [0, 1).
double uniform01(Rng& rng);

/// Uniform integer in [0, n); n must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Standard normal via Box-Muller.
double standard_normal(Rng& rng);

/// k distinct indices from [0, n) in draw order (partial Fisher-Yates).
std::vector<std::size_t> choose_without_replacement(Rng& rng, std::size_t n, std::size_t k);

/// Index drawn from a discrete distribution given by nonnegative weights.
std::size_t draw_discrete(Rng& rng, const std::vector<double>& cumulative);

}  // namespace cropcascade
