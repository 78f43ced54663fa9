#include "doctest.h"

#include "gonality/binary_form.hpp"
#include "gonality/errors.hpp"
#include "gonality/multipoly.hpp"
#include "gonality/projective.hpp"
#include "gonality/random.hpp"
#include "gonality/unipoly.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace gonality;

namespace {

MultiPoly poly(const Field& f, int nvars, int degree, std::vector<std::pair<Exponents, std::int64_t>> terms) {
  std::vector<Term> t;
  for (auto& [e, c] : terms) t.push_back(Term{e, f.from_int(c)});
  return MultiPoly::from_terms(f, nvars, degree, std::move(t));
}

Matrix int_matrix(const Field& f, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<Vector> v;
  for (auto& r : rows) {
    Vector row;
    for (auto x : r) row.push_back(f.from_int(x));
    v.push_back(row);
  }
  return Matrix::from_rows(f, v);
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(f);
  }
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(101);
  CHECK(f.from_int(-1).residue() == 100);
  CHECK((f.from_int(7) * f.from_int(7).inverse()).is_one());
  CHECK(f.parse("1/2") * f.from_int(2) == f.one());
  CHECK(f.from_int(3).pow(100).is_one());
  CHECK_THROWS_AS(Field::prime(100), DomainError);
  CHECK_THROWS_AS(f.zero().inverse(), DomainError);
  Field g = Field::prime(7);
  CHECK_THROWS_AS(f.one() + g.one(), FieldMismatch);
}

TEST_CASE("rationals stay reduced") {
  Field q = Field::rational();
  Scalar a = q.parse("6/-4");
  CHECK(a.to_string() == "-3/2");
  CHECK((a * q.parse("2/3")).to_string() == "-1");
  CHECK(numerator(a.rational()) == -3);
  CHECK(denominator(a.rational()) == 2);
}

TEST_CASE("degree guard") {
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(MultiPoly(f5, 3, 5), CharacteristicError);
  CHECK_NOTHROW(MultiPoly(f5, 3, 4));
  Field relaxed = Field::prime(3, DegreeGuard::relaxed);
  CHECK_NOTHROW(MultiPoly(relaxed, 3, 4));
}

TEST_CASE("poly_eval on the conic") {
  Field q = Field::rational();
  MultiPoly f = poly(q, 3, 2, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
  CHECK(f.eval(ProjPoint::from_ints(q, std::vector<std::int64_t>{0, 0, 1}).coords()).is_zero());
  CHECK(f.eval(ProjPoint::from_ints(q, std::vector<std::int64_t>{1, 1, 1}).coords()).is_zero());
  Field f7 = Field::prime(7);
  MultiPoly cube = poly(f7, 3, 3, {{{3, 0, 0}, 1}});
  ProjPoint pt = ProjPoint::from_ints(f7, std::vector<std::int64_t>{3, 0, 0});
  CHECK(pt[0].is_one());
  CHECK(cube.eval(pt.coords()).is_one());
  CHECK_THROWS_AS(cube.eval(std::vector<Scalar>{f7.one()}), DimensionError);
}

TEST_CASE("canonical term order and equality") {
  Field f = Field::prime(11);
  MultiPoly a = poly(f, 3, 2, {{{0, 1, 1}, 2}, {{2, 0, 0}, 1}, {{0, 1, 1}, 9}});
  MultiPoly b = poly(f, 3, 2, {{{2, 0, 0}, 1}});
  CHECK(a == b);
  CHECK(a.size() == 1);
  MultiPoly c = poly(f, 3, 2, {{{0, 0, 2}, 1}, {{1, 1, 0}, 1}, {{2, 0, 0}, 1}});
  std::vector<Exponents> order;
  for (auto& t : c.terms()) order.push_back(t.exp);
  CHECK(order == std::vector<Exponents>{{2, 0, 0}, {1, 1, 0}, {0, 0, 2}});
  CHECK_THROWS_AS(poly(f, 3, 2, {{{1, 0, 0}, 1}}), DimensionError);
}

TEST_CASE("substitution examples") {
  Field q = Field::rational();
  MultiPoly f = poly(q, 4, 2, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}});
  // Columns e0, e3: restrict to the line spanned by them.
  Matrix m = int_matrix(q, {{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  CHECK(substitute_linear(f, m) == poly(q, 2, 2, {{{1, 1}, 1}}));
  CHECK(substitute_linear(f, Matrix::identity(q, 4)) == f);
  MultiPoly sq = poly(q, 2, 2, {{{2, 0}, 1}});
  CHECK(substitute_linear(sq, int_matrix(q, {{0, 1}, {1, 0}})) == poly(q, 2, 2, {{{0, 2}, 1}}));
  CHECK_THROWS_AS(substitute_linear(f, Matrix::identity(q, 3)), DimensionError);
}

TEST_CASE("substitution composes and is a ring homomorphism") {
  Field f = Field::prime(101);
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly a = random_poly(4, 3, f, rng);
    MultiPoly b = random_poly(4, 2, f, rng);
    Matrix m = random_matrix(f, 4, 3, rng);
    Matrix n = random_matrix(f, 3, 5, rng);
    CHECK(substitute_linear(substitute_linear(a, m), n) == substitute_linear(a, m * n));
    CHECK(substitute_linear(a * b, m) == substitute_linear(a, m) * substitute_linear(b, m));
    MultiPoly a2 = random_poly(4, 3, f, rng);
    CHECK(substitute_linear(a + a2, m) == substitute_linear(a, m) + substitute_linear(a2, m));
    // Evaluation agrees with substitution followed by evaluation.
    Vector z{rng.uniform(f), rng.uniform(f), rng.uniform(f)};
    CHECK(substitute_linear(a, m).eval(z) == a.eval(m * std::span<const Scalar>(z)));
  }
}

TEST_CASE("taylor coefficients of the conic") {
  Field q = Field::rational();
  MultiPoly f = poly(q, 3, 2, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
  Vector base{q.zero(), q.zero(), q.one()};
  auto g = taylor_coefficients(f, base, 2);
  CHECK(g[0].is_zero());
  CHECK(g[1] == poly(q, 3, 1, {{{1, 0, 0}, 1}}));
  CHECK(g[2] == f);
}

TEST_CASE("taylor coefficients against direct expansion in a small characteristic") {
  // Oracle: expand F(base + t y) as a polynomial in t by evaluation at every y over F_3.
  Field f3 = Field::prime(3, DegreeGuard::relaxed);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f = random_poly(3, 4, f3, rng);
    Vector base{rng.uniform(f3), rng.uniform(f3), rng.uniform(f3)};
    auto g = taylor_coefficients(f, base, 4);
    REQUIRE(g.size() == 5);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          Vector y{f3.from_int(a), f3.from_int(b), f3.from_int(c)};
          for (int tv = 0; tv < 3; ++tv) {
            Scalar t = f3.from_int(tv);
            Vector pt(3, f3.zero());
            for (int i = 0; i < 3; ++i) pt[i] = base[i] + t * y[i];
            Scalar expect = f.eval(pt);
            Scalar got = f3.zero();
            for (int k = 0; k <= 4; ++k) got += g[k].eval(y) * t.pow(k);
            CHECK(got == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("partial derivatives") {
  Field q = Field::rational();
  MultiPoly f = poly(q, 3, 3, {{{2, 1, 0}, 3}, {{0, 0, 3}, 1}});
  CHECK(partial_derivative(f, 0) == poly(q, 3, 2, {{{1, 1, 0}, 6}}));
  CHECK(partial_derivative(f, 2) == poly(q, 3, 2, {{{0, 0, 2}, 3}}));
}

TEST_CASE("rank and kernel") {
  Field f = Field::prime(7);
  CHECK(kernel(Matrix(f, 2, 3)).size() == 3);
  CHECK(kernel(Matrix::identity(f, 4)).empty());
  CHECK(rank(Matrix::identity(f, 5)) == 5);
  CHECK(rank(Matrix(f, 3, 4)) == 0);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng.below(6);
    std::size_t c = 1 + rng.below(6);
    Matrix m = random_matrix(f, r, c, rng);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * f.from_int(2);
    }
    auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    CHECK(rank(m) <= std::min(r, c));
    for (auto& v : ker) {
      for (auto& x : m * std::span<const Scalar>(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("kernel basis is canonical") {
  Field q = Field::rational();
  Matrix a = int_matrix(q, {{1, 2, 3, 4}});
  Matrix b = int_matrix(q, {{2, 4, 6, 8}, {3, 6, 9, 12}});
  CHECK(kernel(a) == kernel(b));
}

TEST_CASE("solve and inverse") {
  Field q = Field::rational();
  Matrix m = int_matrix(q, {{2, 1}, {1, 1}});
  Matrix inv = inverse(m);
  CHECK(m * inv == Matrix::identity(q, 2));
  auto x = solve(m, std::vector<Scalar>{q.from_int(3), q.from_int(2)});
  REQUIRE(x);
  CHECK((*x)[0] == q.one());
  CHECK((*x)[1] == q.one());
  CHECK_THROWS_AS(inverse(int_matrix(q, {{1, 2}, {2, 4}})), DomainError);
  CHECK_FALSE(solve(int_matrix(q, {{1, 2}, {2, 4}}), std::vector<Scalar>{q.one(), q.one()}));
}

TEST_CASE("projective lines have one representative") {
  Field f = Field::prime(11);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Vector a, b;
    for (int i = 0; i < 5; ++i) {
      a.push_back(rng.uniform(f));
      b.push_back(rng.uniform(f));
    }
    if (rank(Matrix::from_rows(f, {a, b})) < 2) continue;
    ProjLine l = ProjLine::through(a, b);
    Scalar s1 = rng.nonzero(f), s2 = rng.uniform(f), s3 = rng.uniform(f), s4 = rng.nonzero(f);
    Vector c(5, f.zero()), d(5, f.zero());
    for (int i = 0; i < 5; ++i) {
      c[i] = s1 * a[i] + s2 * b[i];
      d[i] = s3 * a[i] + s4 * b[i];
    }
    if (rank(Matrix::from_rows(f, {c, d})) < 2) continue;
    CHECK(ProjLine::through(c, d) == l);
    CHECK(l.contains(c));
    CHECK(l.span()(0, l.first_pivot()).is_one());
    CHECK(l.span()(1, l.first_pivot()).is_zero());
  }
  CHECK_THROWS_AS(ProjLine::through(std::vector<Scalar>{f.one(), f.one()}, std::vector<Scalar>{f.from_int(2), f.from_int(2)}),
                  DomainError);
}

TEST_CASE("random_poly is deterministic and bounded") {
  Field f5 = Field::prime(5);
  MultiPoly a = random_poly(3, 2, f5, 0);
  MultiPoly b = random_poly(3, 2, f5, 0);
  CHECK(a == b);
  CHECK(a.size() <= monomial_count(3, 2));
  CHECK(monomial_count(3, 2) == 6);
  CHECK_THROWS_AS(random_poly(3, 2, Field::rational(), 0), DomainError);
  CHECK_THROWS_AS(random_poly(3, 5, f5, 0), CharacteristicError);
}

TEST_CASE("random coefficients are uniform") {
  // 10^4 draws over F_5: each residue should appear 2000 +- 5 sigma, sigma = sqrt(10^4 * 0.2 * 0.8) = 40.
  Field f5 = Field::prime(5);
  Rng rng(2024);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 10000; ++i) counts[random_poly(1, 1, f5, rng).coefficient({1}).residue()]++;
  for (std::uint64_t r = 0; r < 5; ++r) CHECK(std::abs(counts[r] - 2000) <= 200);
}

TEST_CASE("binary form root multiplicity") {
  Field f = Field::prime(13);
  // (t - 2s)^3 (s + t) s
  MultiPoly lin1 = poly(f, 2, 1, {{{1, 0}, -2}, {{0, 1}, 1}});
  MultiPoly lin2 = poly(f, 2, 1, {{{1, 0}, 1}, {{0, 1}, 1}});
  MultiPoly lin3 = poly(f, 2, 1, {{{1, 0}, 1}});
  BinaryForm g = BinaryForm::from_poly(lin1 * lin1 * lin1 * lin2 * lin3);
  CHECK(g.degree() == 5);
  CHECK(g.multiplicity_at(ProjPoint::from_ints(f, std::vector<std::int64_t>{1, 2})) == 3);
  CHECK(g.multiplicity_at(ProjPoint::from_ints(f, std::vector<std::int64_t>{1, -1})) == 1);
  CHECK(g.multiplicity_at(ProjPoint::from_ints(f, std::vector<std::int64_t>{0, 1})) == 1);
  CHECK(g.multiplicity_at(ProjPoint::from_ints(f, std::vector<std::int64_t>{1, 0})) == 0);
  auto roots = g.rational_roots();
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first == ProjPoint::from_ints(f, std::vector<std::int64_t>{1, 2}));
  CHECK(roots[0].second == 3);
  CHECK(roots[2].first == ProjPoint::from_ints(f, std::vector<std::int64_t>{0, 1}));
  CHECK(BinaryForm::zero(f, 3).multiplicity_at(ProjPoint::from_ints(f, std::vector<std::int64_t>{1, 0})) ==
        kInfiniteContact);
}

TEST_CASE("univariate factorization over F_p") {
  // Oracle: multiply random monic factors, factor, multiply back, and check irreducibility of
  // every returned factor by brute force over small p.
  const std::uint64_t p = 13;
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly f = UniPoly::constant(p, 1 + rng.below(p - 1));
    int deg = 0;
    while (deg < 9) {
      int k = 1 + static_cast<int>(rng.below(3));
      if (deg + 2 * k > 12) break;
      std::vector<std::uint64_t> c(k + 1);
      for (int i = 0; i < k; ++i) c[i] = rng.below(p);
      c[k] = 1;
      UniPoly g(p, c);
      f = f * g;
      if (rng.below(3) == 0) f = f * g;
      deg = f.degree();
    }
    auto factors = factor(f, rng);
    UniPoly back = UniPoly::constant(p, f.lead());
    for (auto& fac : factors) {
      CHECK(fac.poly.lead() == 1);
      for (int m = 0; m < fac.multiplicity; ++m) back = back * fac.poly;
      if (fac.poly.degree() >= 2) {
        for (std::uint64_t r = 0; r < p; ++r) CHECK(fac.poly.eval(r) != 0);
      }
      if (fac.poly.degree() >= 4) {
        // No quadratic divisor: gcd with x^(p^2) - x is trivial.
        UniPoly x2 = powmod(powmod(UniPoly::x(p), p, fac.poly), p, fac.poly);
        CHECK(gcd(x2 - UniPoly::x(p), fac.poly).degree() == 0);
      }
    }
    CHECK(back == f);
  }
}

TEST_CASE("roots over a large prime") {
  const std::uint64_t p = 1000003;
  UniPoly f = UniPoly(p, {p - 5, 1}) * UniPoly(p, {p - 5, 1}) * UniPoly(p, {7, 1}) * UniPoly(p, {1, 0, 1});
  auto r = roots(f);
  REQUIRE(r.size() == (p % 4 == 3 ? 2u : 4u));
  CHECK(r[0] == std::pair<std::uint64_t, int>{5, 2});
  CHECK(r.back() == std::pair<std::uint64_t, int>{p - 7, 1});
}
