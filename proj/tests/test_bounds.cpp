#include "doctest.h"

#include "gonality/bounds.hpp"
#include "gonality/errors.hpp"
#include "gonality/random.hpp"

#include <cmath>

using namespace gonality;

namespace {

// Exceptional family by direct alpha scan.
bool exceptional_by_scan(std::uint64_t n, std::uint64_t min_alpha) {
  for (std::uint64_t a = min_alpha; 4 * a * a + 3 * a <= n; ++a) {
    if (4 * a * a + 3 * a == n || 4 * a * a + 5 * a + 1 == n) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("h_max examples") {
  CHECK(h_max(1) == 1);
  CHECK(h_max(2) == 2);
  CHECK(h_max(3) == 3);
  CHECK(h_max(5) == 4);
  CHECK(h_max(100) == 19);
  CHECK_THROWS_AS(h_max(0), DomainError);
}

TEST_CASE("h_max brackets 4n and the floors agree with scans") {
  // Incremental scans: both floors are nondecreasing in n.
  std::uint64_t h = 0, k1 = 0, k9 = 0;
  for (std::uint64_t n = 1; n <= 10'000'000; ++n) {
    while ((h + 1) * (h + 2) <= 4 * n) ++h;
    while ((2 * k1 + 3) * (2 * k1 + 3) <= 16 * n + 1) ++k1;
    while ((2 * k9 + 3) * (2 * k9 + 3) <= 16 * n + 9) ++k9;
    const std::uint64_t hm = h_max(n);
    if (hm != h || root_floor(n, 1) != k1 || root_floor(n, 9) != k9) {
      FAIL("floor disagreement at n = " << n);
    }
    if (!(hm * (hm + 1) <= 4 * n && 4 * n < (hm + 1) * (hm + 2))) FAIL("bracket fails at n = " << n);
  }
  for (std::uint64_t v : {1u, 2u, 8u, 9u, 10u, 24u, 25u, 26u, 17u, 57u, 1000001u}) {
    CHECK(half_root_floor(v) == half_root_floor_by_scan(v));
  }
}

TEST_CASE("covgon_bounds examples") {
  BoundReport a = covgon_bounds(3, 10);
  CHECK(a.upper == 7);
  CHECK(a.lower == 7);
  CHECK(!a.exceptional);
  CHECK(a.conngon_upper == 8);

  BoundReport b = covgon_bounds(7, 20);
  CHECK(b.upper == 16);
  CHECK(b.lower == 15);
  CHECK(b.exceptional);

  BoundReport c = covgon_bounds(1, 4);
  CHECK(c.upper == 3);
  CHECK(c.lower == 3);
  CHECK(c.lower_formula == 2);
  CHECK(!c.exceptional);
  CHECK(c.exceptional_natural);

  for (std::uint64_t d = 4; d < 40; ++d) {
    CHECK(covgon_bounds(1, d).lower == static_cast<std::int64_t>(d) - 1);
    CHECK(covgon_bounds(1, d).upper == static_cast<std::int64_t>(d) - 1);
    CHECK(covgon_bounds(2, d).lower == static_cast<std::int64_t>(d) - 2);
    CHECK(covgon_bounds(2, d).upper == static_cast<std::int64_t>(d) - 2);
  }
  CHECK(covgon_bounds(3, 7).lower_claimed == false);
  CHECK(covgon_bounds(3, 7).upper_claimed == true);
  CHECK(covgon_bounds(3, 8).lower_claimed == true);
}

TEST_CASE("bound report invariants") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    BoundReport r = covgon_bounds(n, 3 * n + 5);
    const auto gap = r.upper - r.lower;
    if (gap != 0 && gap != 1) FAIL("gap outside {0,1} at n = " << n);
    if ((gap == 1) != r.exceptional) FAIL("exceptional flag disagrees at n = " << n);
    if (r.conngon_upper < r.upper) FAIL("conngon_upper below the covgon upper bound at n = " << n);
    if (r.irr_gap != r.h_max) FAIL("irr_gap differs from h_max at n = " << n);
  }
}

TEST_CASE("exceptional set membership") {
  auto m7 = exceptional_set_member(7);
  CHECK(m7.member);
  CHECK(m7.alpha == 1);
  CHECK(m7.branch == 1);
  auto m10 = exceptional_set_member(10);
  CHECK(m10.member);
  CHECK(m10.alpha == 1);
  CHECK(m10.branch == 2);
  CHECK(!exceptional_set_member(8).member);
  CHECK(exceptional_set_member(22).member);
  CHECK(exceptional_set_member(27).member);
  CHECK(exceptional_set_member(0).member);
  CHECK(exceptional_set_member(1).member);
  CHECK(!exceptional_set_member(0, AlphaRange::positive).member);
  CHECK(!exceptional_set_member(1, AlphaRange::positive).member);
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    CHECK(exceptional_set_member(n).member == exceptional_by_scan(n, 0));
    CHECK(exceptional_set_member(n, AlphaRange::positive).member == exceptional_by_scan(n, 1));
  }
}

TEST_CASE("floor identity") {
  CHECK(!verify_floor_identity(100));
  CHECK(!verify_floor_identity(1'000'000));
  CHECK_THROWS_AS(verify_floor_identity(0), DomainError);
}

TEST_CASE("bundle calculator") {
  BundleReport b = bundle_calculator(3, 5, 2);
  CHECK(b.c1_b == LH{1, 8});
  CHECK(b.canonical.h == 6);
  CHECK(b.canonical.l == -3);
  CHECK(b.n_space == 125);  // C(9, 5) - 1
  CHECK(b.dim_delta == 2 * 3 + 2 + 125 - 2);
  CHECK(b.dim_delta_f == 5);
  CHECK(bundle_calculator(4, 7, 1).c1_b == LH{0, 7});
  CHECK_THROWS_AS(bundle_calculator(3, 5, 5), DomainError);
  CHECK_THROWS_AS(bundle_calculator(3, 2, 3), DomainError);
  CHECK_THROWS_AS(bundle_calculator(3, 5, 0), DomainError);

  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const long n = 1 + static_cast<long>(rng.below(20));
    const long d = 1 + static_cast<long>(rng.below(40));
    const long r = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(std::min(d, n + 1))));
    BundleReport x = bundle_calculator(n, d, r);
    CHECK(LH{x.c1_a.l + x.c1_b.l, x.c1_a.h + x.c1_b.h} == c1_full(d));
    CHECK(x.canonical == LH{BigInt(r) * (r - 1) / 2 - n - 1, BigInt(r) * (d - r + 1) - 2});
  }
}

TEST_CASE("positivity conditions") {
  Positivity a = positivity_conditions(3, 3, 3);
  CHECK(!a.uniruled_obstruction);
  Positivity b = positivity_conditions(3, 4, 3);
  CHECK(b.uniruled_obstruction);
  // r(r+1)/2 = 2n + 2 with l >= n: n = 2, r = 3.
  Positivity c = positivity_conditions(2, 3, 2);
  CHECK(c.global_gen);
  CHECK(c.uniruled_obstruction);
  for (long n = 1; n <= 60; ++n) {
    for (long r = 1; r <= 20; ++r) {
      for (long l = n; l <= n + 3; ++l) {
        if (r * (r + 1) / 2 >= 2 * n + 2) CHECK(positivity_conditions(n, r, l).global_gen);
      }
    }
  }
  CHECK_THROWS_AS(positivity_conditions(3, 3, 0), DomainError);
}

TEST_CASE("largest unobstructed r reproduces the lower-bound floor") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (max_r_without_obstruction(n) != root_floor(n, 9)) FAIL("mismatch at n = " << n);
  }
  CHECK(max_r_without_obstruction(3) == 3);
}

TEST_CASE("connecting gonality and irrationality gap") {
  CHECK(conngon_upper(3, 10) == 8);
  CHECK(irr_gap(100) == 19);
  // irr_gap / sqrt(n) approaches 2.
  const double ratio = static_cast<double>(irr_gap(100'000'000)) / 10000.0;
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.001));
}
