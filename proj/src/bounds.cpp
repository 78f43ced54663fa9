#include "gonality/bounds.hpp"

#include "gonality/combinatorics.hpp"
#include "gonality/errors.hpp"

namespace gonality {

namespace {

constexpr std::uint64_t kMaxN = (~std::uint64_t{0} - 9) / 16;

void require_n(std::uint64_t n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": need n >= 1");
  if (n > kMaxN) throw DomainError(std::string(who) + ": n too large for 64-bit radicands");
}

}  // namespace

std::uint64_t half_root_floor(std::uint64_t v) {
  if (v == 0) throw DomainError("half_root_floor: need v >= 1");
  return (isqrt(v) - 1) / 2;
}

std::uint64_t half_root_floor_by_scan(std::uint64_t v) {
  if (v == 0) throw DomainError("half_root_floor_by_scan: need v >= 1");
  std::uint64_t k = 0;
  while ((2 * (k + 1) + 1) * (2 * (k + 1) + 1) <= v) ++k;
  return k;
}

std::uint64_t root_floor(std::uint64_t n, std::uint64_t c) {
  if (n > kMaxN || c > 9) throw DomainError("root_floor: radicand out of range");
  return half_root_floor(16 * n + c);
}

std::uint64_t h_max(std::uint64_t n) {
  require_n(n, "h_max");
  return root_floor(n, 1);
}

ExceptionalMembership exceptional_set_member(std::uint64_t n, AlphaRange range) {
  ExceptionalMembership m;
  if (n > kMaxN) throw DomainError("exceptional_set_member: n too large");
  // 4a^2 + 3a = n and 4a^2 + 5a + 1 = n both have discriminant 16n + 9; the root
  // s = sqrt(16n + 9) gives a = (s - 3) / 8 or a = (s - 5) / 8.
  const std::uint64_t v = 16 * n + 9;
  const std::uint64_t s = isqrt(v);
  if (s * s != v) return m;
  const std::uint64_t min_alpha = range == AlphaRange::positive ? 1 : 0;
  if (s % 8 == 3 && (s - 3) / 8 >= min_alpha) {
    m = {true, (s - 3) / 8, 1};
  } else if (s % 8 == 5 && (s - 5) / 8 >= min_alpha) {
    m = {true, (s - 5) / 8, 2};
  }
  return m;
}

BoundReport covgon_bounds(std::uint64_t n, std::uint64_t d) {
  require_n(n, "covgon_bounds");
  BoundReport r;
  r.n = n;
  r.d = d;
  r.h_max = h_max(n);
  const auto sd = static_cast<std::int64_t>(d);
  r.upper = sd - static_cast<std::int64_t>(r.h_max);
  r.lower_formula = sd - static_cast<std::int64_t>(root_floor(n, 9));
  // Plane curves: the gonality of a smooth plane curve of degree d is d - 1.
  r.lower = n == 1 ? sd - 1 : r.lower_formula;
  r.exceptional = exceptional_set_member(n, AlphaRange::positive).member;
  r.exceptional_natural = exceptional_set_member(n, AlphaRange::natural).member;
  r.conngon_upper = conngon_upper(n, d);
  r.irr_gap = irr_gap(n);
  r.lower_claimed = d >= 2 * n + 2;
  r.upper_claimed = d >= 2 * n;
  return r;
}

std::optional<std::uint64_t> verify_floor_identity(std::uint64_t n_max) {
  if (n_max == 0) throw DomainError("verify_floor_identity: need n_max >= 1");
  if (n_max > kMaxN) throw DomainError("verify_floor_identity: n_max too large");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t gap = root_floor(n, 9) - root_floor(n, 1);
    const bool member = exceptional_set_member(n).member;
    if (gap != (member ? 1u : 0u)) return n;
  }
  return std::nullopt;
}

LH c1_full(long d) { return {BigInt(d) * (d + 1) / 2, 0}; }

BundleReport bundle_calculator(long n, long d, long r) {
  if (n < 1 || d < 1) throw DomainError("bundle_calculator: need n, d >= 1");
  if (r < 1 || r > std::min(d, n + 1)) throw DomainError("bundle_calculator: need 1 <= r <= min(d, n + 1)");
  BundleReport b;
  b.n_space = choose(d + n + 1, d) - 1;
  b.dim_delta = BigInt(2 * n + 2) + b.n_space - r;
  b.dim_delta_f = 2 * n + 1 - r;
  // E_{d-r} has rank d - r + 1 and c1 = (d-r)(d-r+1)/2 L; A_{r,r} = r(L - H).
  const BigInt rank_e = d - r + 1;
  const LH c1_e = c1_full(d - r);
  b.c1_a = {c1_e.l + rank_e * r, c1_e.h - rank_e * r};
  b.c1_b = {BigInt(r) * (r - 1) / 2, BigInt(r) * (d - r + 1)};
  // K_P = -2H - (n+1)L plus c1(B).
  b.canonical = {b.c1_b.l - (n + 1), b.c1_b.h - 2};
  return b;
}

Positivity positivity_conditions(long n, long r, long l) {
  if (l < 1) throw DomainError("positivity_conditions: need l >= 1");
  const long tri = r * (r + 1) / 2;
  return {tri - 3 * n - 2 + l >= 0, tri > 2 * n + 1};
}

std::uint64_t max_r_without_obstruction(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 2) / 2 <= 2 * n + 1) ++r;
  return r;
}

std::int64_t conngon_upper(std::uint64_t n, std::uint64_t d) {
  require_n(n, "conngon_upper");
  return static_cast<std::int64_t>(d) - static_cast<std::int64_t>(half_root_floor(8 * n + 9));
}

std::uint64_t irr_gap(std::uint64_t n) { return h_max(n); }

}  // namespace gonality
