#pragma once

#include "gonality/field.hpp"

#include <cstdint>
#include <optional>

namespace gonality {

/// floor((sqrt(v) - 1) / 2) for v >= 1, with an exact integer square root.
std::uint64_t half_root_floor(std::uint64_t v);

/// The same floor found by scanning: the largest k with (2k + 1)^2 <= v.
std::uint64_t half_root_floor_by_scan(std::uint64_t v);

/// half_root_floor(16n + c).
std::uint64_t root_floor(std::uint64_t n, std::uint64_t c);

/// Largest h with h(h + 1) <= 4n; equals root_floor(n, 1). Throws DomainError for n = 0.
std::uint64_t h_max(std::uint64_t n);

/// Index set of alpha in the exceptional family {4a^2 + 3a, 4a^2 + 5a + 1}.
enum class AlphaRange { natural, positive };  // alpha >= 0, alpha >= 1

struct ExceptionalMembership {
  bool member = false;
  std::uint64_t alpha = 0;
  int branch = 0;  // 1 for 4a^2 + 3a, 2 for 4a^2 + 5a + 1
};

ExceptionalMembership exceptional_set_member(std::uint64_t n, AlphaRange range = AlphaRange::natural);

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t h_max = 0;
  std::int64_t lower_formula = 0;  // d - root_floor(n, 9)
  std::int64_t lower = 0;          // lower_formula, except d - 1 for curves (n = 1)
  std::int64_t upper = 0;          // d - h_max
  bool exceptional = false;        // alpha >= 1 family: the range where the bounds may differ
  bool exceptional_natural = false;  // alpha >= 0 family, which adds n = 0, 1
  std::int64_t conngon_upper = 0;
  std::uint64_t irr_gap = 0;
  bool lower_claimed = false;  // d >= 2n + 2
  bool upper_claimed = false;  // d >= 2n
};

/// Throws DomainError for n = 0.
BoundReport covgon_bounds(std::uint64_t n, std::uint64_t d);

/// First n in [1, n_max] where root_floor(n, 9) - root_floor(n, 1) differs from the
/// indicator of the alpha >= 0 exceptional family, or nullopt.
std::optional<std::uint64_t> verify_floor_identity(std::uint64_t n_max);

/// Chern classes are pairs (L, H) of coefficients in Pic = Z[H, L].
struct LH {
  BigInt l;
  BigInt h;
  friend bool operator==(const LH& a, const LH& b) { return a.l == b.l && a.h == b.h; }
};

struct BundleReport {
  BigInt n_space;    // N = C(d + n + 1, d) - 1
  BigInt dim_delta;  // 2n + 2 + N - r, the incidence of (x, line, F) with contact >= r
  long dim_delta_f = 0;  // 2n + 1 - r, the fiber over a fixed F
  LH c1_a;           // through A_{d,r} = pi^* E_{d-r} (x) A_{r,r}
  LH c1_b;           // closed form (r(r-1)/2, r(d-r+1))
  LH canonical;      // (L, H) coefficients of the canonical class of the fiber
};

/// Throws DomainError unless 1 <= r <= min(d, n + 1).
BundleReport bundle_calculator(long n, long d, long r);

/// c1 of pi^* E_d: (d(d+1)/2, 0).
LH c1_full(long d);

struct Positivity {
  bool global_gen = false;            // r(r+1)/2 - 3n - 2 + l >= 0
  bool uniruled_obstruction = false;  // r(r+1)/2 > 2n + 1
};

/// Throws DomainError for l < 1.
Positivity positivity_conditions(long n, long r, long l);

/// Largest r with r(r+1)/2 <= 2n + 1.
std::uint64_t max_r_without_obstruction(std::uint64_t n);

std::int64_t conngon_upper(std::uint64_t n, std::uint64_t d);
std::uint64_t irr_gap(std::uint64_t n);

}  // namespace gonality
