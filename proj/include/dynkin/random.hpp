#pragma once

// Seeded randomness with platform-independent draws. std::mt19937_64 output is
// fully specified by the standard; the distributions are not, so bounded
// draws are done here by rejection.

#include <cstdint>
#include <random>
#include <string_view>

#include "dynkin/linalg.hpp"

namespace dynkin {

/// Independent stream for a named sub-task of a seeded run.
std::uint64_t subseed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform on [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  int uniform(int lo, int hi);
  /// p/q with |p| <= num_bound and 1 <= q <= den_bound; never zero.
  Rational nonzero_rational(int num_bound, int den_bound);
  Rational rational(int num_bound, int den_bound);

 private:
  std::mt19937_64 gen_;
};

}  // namespace dynkin
