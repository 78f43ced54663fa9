#include "doctest.h"

#include "gonality/certificate.hpp"
#include "gonality/errors.hpp"
#include "gonality/random.hpp"
#include "gonality/serialize.hpp"
#include "support.hpp"

using namespace gonality;
using namespace testing_support;

namespace {

std::pair<MultiPoly, ConeLineWitness> random_witness(const Field& field, int d, Rng& rng) {
  for (;;) {
    MultiPoly f = random_poly(6, d, field, rng);
    auto x = random_point_on(f, rng);
    if (!x) continue;
    try {
      auto ws = find_cone_lines(f, *x, 3);
      if (!ws.empty()) return {f, ws.front()};
    } catch (const DomainError&) {
    }
  }
}

}  // namespace

TEST_CASE("field json") {
  CHECK(to_json(Field::rational()) == Json("rational"));
  CHECK(to_json(Field::prime(7)).dump() == R"({"prime":7})");
  CHECK(to_json(Field::prime(3, DegreeGuard::relaxed)).dump() == R"({"prime":3,"strict":false})");
  CHECK(field_from_json(to_json(Field::prime(3, DegreeGuard::relaxed))).guard() == DegreeGuard::relaxed);
  CHECK(field_from_json(Json::parse(R"({"prime":101})")).characteristic() == 101);
  CHECK_THROWS_AS(field_from_json(Json("reals")), ParseError);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"p":5})")), ParseError);
}

TEST_CASE("polynomial json format") {
  Field q = Field::rational();
  std::vector<Term> t = {{{1, 0, 1}, q.parse("-3/4")}, {{0, 2, 0}, q.one()}};
  MultiPoly f = MultiPoly::from_terms(q, 3, 2, t);
  CHECK(to_json(f).dump() ==
        R"({"nvars":3,"degree":2,"field":"rational","terms":[{"e":[1,0,1],"c":"-3/4"},{"e":[0,2,0],"c":"1"}]})");
  CHECK(poly_from_json(to_json(f)) == f);

  // Out-of-order input is canonicalized on load.
  Json j = Json::parse(
      R"({"nvars":2,"degree":1,"field":{"prime":5},"terms":[{"e":[0,1],"c":"3"},{"e":[1,0],"c":"7"}]})");
  MultiPoly g = poly_from_json(j);
  CHECK(g.terms()[0].exp == Exponents{1, 0});
  CHECK(g.terms()[0].coeff.residue() == 2);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"nvars":2,"degree":1,"field":"rational"})")), ParseError);
  CHECK_THROWS_AS(
      poly_from_json(Json::parse(R"({"nvars":2,"degree":1,"field":"rational","terms":[{"e":[1,1],"c":"1"}]})")),
      DimensionError);
}

TEST_CASE("polynomial round trip is bit-exact") {
  Rng rng(11);
  for (std::uint64_t p : {2ull, 101ull, 1000003ull}) {
    Field f = Field::prime(p, DegreeGuard::relaxed);
    for (int i = 0; i < 20; ++i) {
      MultiPoly a = random_poly(1 + static_cast<int>(rng.below(4)), static_cast<int>(rng.below(6)), f, rng);
      const std::string s = to_json(a).dump();
      MultiPoly b = poly_from_json(Json::parse(s));
      CHECK(b == a);
      CHECK(to_json(b).dump() == s);
      CHECK(poly_hash(b) == poly_hash(a));
    }
  }
  Field q = Field::rational();
  for (int i = 0; i < 20; ++i) {
    std::vector<Term> t;
    for (const auto& e : monomials(3, 3)) {
      if (rng.below(2)) continue;
      t.push_back({e, q.from_int(static_cast<std::int64_t>(rng.below(200)) - 100) / q.from_int(1 + static_cast<std::int64_t>(rng.below(30)))});
    }
    MultiPoly a = MultiPoly::from_terms(q, 3, 3, t);
    const std::string s = to_json(a).dump();
    CHECK(to_json(poly_from_json(Json::parse(s))).dump() == s);
  }
}

TEST_CASE("poly_hash separates and is stable") {
  Field f = Field::prime(7);
  MultiPoly a = poly(f, 2, 2, {{{1, 1}, 1}});
  MultiPoly b = poly(f, 2, 2, {{{1, 1}, 2}});
  CHECK(poly_hash(a) != poly_hash(b));
  CHECK(poly_hash(a).size() == 16);
  CHECK(poly_hash(a) == poly_hash(poly(f, 2, 2, {{{1, 1}, 8}})));
}

TEST_CASE("points, matrices and lines") {
  Field f = Field::prime(11);
  ProjPoint x = point(f, {0, 3, 5});
  CHECK(to_json(x).dump() == R"(["0","1","9"])");
  CHECK(point_from_json(to_json(x), f) == x);
  ProjLine l = ProjLine::through(ints(f, {1, 2, 3, 4}), ints(f, {0, 1, 1, 0}));
  CHECK(line_from_json(to_json(l), f) == l);
  Matrix m = Matrix::from_rows(f, {ints(f, {1, 2}), ints(f, {3, 4})});
  CHECK(matrix_from_json(to_json(m), f) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), f), ParseError);
  CHECK_THROWS_AS(line_from_json(Json::parse(R"({"span":[["1","2"]]})"), f), ParseError);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"(["0","0"])"), f), DomainError);
}

TEST_CASE("cone and section carry provenance") {
  Field f = Field::prime(101);
  Rng rng(3);
  MultiPoly F = random_poly(5, 5, f, rng);
  auto x = random_point_on(F, rng);
  REQUIRE(x);
  Json c = cone_to_json(F, taylor_cone(F, *x, 4));
  CHECK(c["equations"].size() == 3);
  CHECK(c["provenance"]["f_hash"] == poly_hash(F));
  CHECK(point_from_json(c["provenance"]["x"], f) == *x);
  CHECK(c["provenance"]["h"] == 4);
  CHECK(matrix_from_json(c["provenance"]["transform"], f) == normal_form(F, *x).transform);

  LambdaSection s = lambda_section(F, *x, 4);
  Json sj = section_to_json(F, *x, s);
  REQUIRE(sj["equations"].size() == 2);
  CHECK(poly_from_json(sj["equations"][1]) == s.equations[1]);
  CHECK(matrix_from_json(sj["provenance"]["transform"], f) == s.provenance.transform);

  // Singular points have no normal form; the transform is null.
  MultiPoly cusp = poly(f, 3, 3, {{{1, 2, 0}, 1}, {{0, 0, 3}, -1}});
  Json cj = cone_to_json(cusp, taylor_cone(cusp, point(f, {1, 0, 0}), 2));
  CHECK(cj["provenance"]["transform"].is_null());
}

TEST_CASE("witness and certificate round trip") {
  Field f = Field::prime(101);
  Rng rng(5);
  auto [F, w] = random_witness(f, 6, rng);
  Json wj = to_json(F, w);
  ConeLineWitness w2 = witness_from_json(Json::parse(wj.dump()), f);
  CHECK(w2.x == w.x);
  CHECK(w2.line == w.line);
  CHECK(w2.lifted_from == w.lifted_from);
  CHECK(w2.transform == w.transform);
  CHECK(verify_witness(F, w2).empty());
  CHECK(to_json(F, w2).dump() == wj.dump());

  GonalityCertificate c = build_certificate(F, w);
  const std::string s = to_json(c).dump();
  GonalityCertificate c2 = certificate_from_json(Json::parse(s));
  CHECK(to_json(c2).dump() == s);
  CHECK(verify_certificate(c2).ok == verify_certificate(c).ok);
  CHECK(verify_certificate(c2).ok);

  // A tampered field survives loading and is then rejected.
  Json t = Json::parse(s);
  t["mult"] = c.mult + 1;
  GonalityCertificate ct = certificate_from_json(t);
  CHECK(ct.mult == c.mult + 1);
  auto v = verify_certificate(ct);
  CHECK(!v.ok);
  CHECK(std::find(v.violations.begin(), v.violations.end(), "mult mismatch") != v.violations.end());

  Json bad = Json::parse(s);
  bad.erase("curve");
  CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
}

TEST_CASE("complete intersection round trip") {
  Field f = Field::prime(7);
  Rng rng(2);
  std::vector<int> type = {2, 3};
  CompleteIntersection y = random_ci(4, type, f, rng);
  CompleteIntersection y2 = ci_from_json(Json::parse(to_json(y).dump()));
  CHECK(y2.ambient() == 4);
  CHECK(y2.forms() == y.forms());
  CHECK(y2.type() == type);
}

TEST_CASE("report json is deterministic") {
  std::vector<int> type = {2};
  Field f = Field::prime(3);
  auto a = to_json(fano_census(3, type, f, 10, 4)).dump();
  auto b = to_json(fano_census(3, type, f, 10, 4)).dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  CHECK(j["seed"] == 4);
  CHECK(j["trials"] == 10);
  CHECK(j.contains("fraction_with_line"));
  CHECK(j.contains("histogram"));
  CHECK(j.contains("budget_used"));

  Json r = to_json(covgon_bounds(7, 20));
  CHECK(r["exceptional"] == true);
  CHECK(r["upper"] == 16);
  CHECK(r["lower"] == 15);
}
