#include "dynkin/random.hpp"

namespace dynkin {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t subseed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix(splitmix(seed ^ h) + index);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = gen_();
  while (x >= limit);
  return x % n;
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(int num_bound, int den_bound) {
  Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(int num_bound, int den_bound) {
  Rational q;
  do q = rational(num_bound, den_bound);
  while (q == 0);
  return q;
}

}  // namespace dynkin
