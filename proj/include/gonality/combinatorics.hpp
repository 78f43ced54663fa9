#pragma once

#include "gonality/field.hpp"

namespace gonality {

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt choose(long n, long k);

/// Largest r >= 0 with r * r <= v (Newton iteration on integers).
BigInt isqrt(const BigInt& v);
std::uint64_t isqrt(std::uint64_t v);

}  // namespace gonality
