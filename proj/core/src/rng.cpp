#include "chowtree/rng.hpp"

#include "chowtree/errors.hpp"

namespace chowtree {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t Rng::next() {
  return splitmix64(state_);
}

Rng Rng::fork(uint64_t tag) const {
  // Mix the tag into the original seed, not the advanced state, so that a
  // fork's stream does not depend on how much of the parent was consumed.
  uint64_t s = seed_;
  uint64_t m = splitmix64(s) ^ (tag * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL);
  return Rng(splitmix64(m));
}

long Rng::uniform_int(long lo, long hi) {
  if (lo > hi) throw Error("Rng::uniform_int: empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());  // full 64-bit range
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

mpz_class Rng::uniform_mpz(const mpz_class& bound) {
  if (bound < 0) throw Error("Rng::uniform_mpz: negative bound");
  const mpz_class span = 2 * bound + 1;
  // Draw enough 64-bit words to cover span, then reject to stay unbiased.
  const size_t words = mpz_sizeinbase(span.get_mpz_t(), 2) / 64 + 1;
  mpz_class limit = 1;
  limit <<= 64 * words;
  limit -= limit % span;
  mpz_class x;
  do {
    x = 0;
    for (size_t i = 0; i < words; ++i) {
      x <<= 64;
      x += mpz_class(static_cast<unsigned long>(next()));
    }
  } while (x >= limit);
  return x % span - bound;
}

Rational Rng::small_rational(long max_num, long max_den) {
  const long num = uniform_int(-max_num, max_num);
  const long den = uniform_int(1, max_den);
  return Rational(num, den);
}

}  // namespace chowtree
