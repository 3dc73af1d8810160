#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "chowtree/rational.hpp"

namespace chowtree {

/// Deterministic pseudo-random stream (splitmix64). Every random choice in
/// the library derives from a caller-supplied 64-bit seed, so identical
/// requests produce identical results. `fork(tag)` derives an independent
/// stream from the original seed, which keeps results stable under
/// reordering or parallel evaluation of subtasks.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t next();

  Rng fork(uint64_t tag) const;

  /// Uniform integer in [lo, hi], inclusive; unbiased.
  long uniform_int(long lo, long hi);

  /// Uniform multiprecision integer in [-bound, bound].
  mpz_class uniform_mpz(const mpz_class& bound);

  /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational small_rational(long max_num, long max_den);

 private:
  uint64_t seed_;
  uint64_t state_;
};

}  // namespace chowtree
