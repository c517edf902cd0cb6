#pragma once

// Seeded generators shared by the axiom harness and the test suites.
// Everything is derived from std::mt19937_64 output with explicit integer
// arithmetic, so a seed yields the same objects on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "bruhat/filtration.hpp"

namespace bruhat {

/// Mixes (seed, index) into an independent per-trial seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t bits() { return rng_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return (rng_() >> 63) != 0; }
  /// Uniform double in [lo, hi).
  double real(double lo, double hi);
  /// k / den for k uniform in [lo * den, hi * den].
  Rational rational(long lo, long hi, long den);

  /// Integer matrix with entries in [-bound, bound], resampled until invertible.
  Matrix invertible_matrix(std::size_t n, long bound = 2);
  /// Random frame filtration: invertible integer basis, weights k / den with
  /// k in [-weight_bound * den, weight_bound * den].
  Filtration filtration(std::size_t n, long weight_bound = 2, long den = 1);
  /// Same, on a given basis (columns).
  Filtration filtration_on(const Matrix& basis, long weight_bound = 2, long den = 1);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Filtration split by the columns of `basis`, column k carrying weights[k].
Filtration frame_filtration(const Matrix& basis, const std::vector<Rational>& weights);

}  // namespace bruhat
