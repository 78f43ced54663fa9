#include "gonality/combinatorics.hpp"

#include "gonality/errors.hpp"

namespace gonality {

BigInt choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("isqrt: negative argument");
  if (v < 2) return v;
  // Start above the root; Newton steps decrease monotonically to the floor.
  BigInt x = BigInt(1) << (static_cast<unsigned>(msb(v)) / 2 + 1);
  for (;;) {
    BigInt y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  std::uint64_t x = std::uint64_t{1} << ((64 - __builtin_clzll(v)) / 2 + 1);
  for (;;) {
    std::uint64_t y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace gonality
