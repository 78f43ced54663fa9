#include "gonality/serialize.hpp"

#include "gonality/errors.hpp"

#include <cstdio>

namespace gonality {

namespace {

// Runs a loader, turning structural JSON errors into ParseError.
template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class Map>
Json histogram(const Map& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

Json provenance(const MultiPoly& f, const ProjPoint& x, int h, const Json& transform) {
  Json p;
  p["f_hash"] = poly_hash(f);
  p["x"] = to_json(x);
  p["h"] = h;
  p["transform"] = transform;
  return p;
}

}  // namespace

Json to_json(const Field& f) {
  if (f.is_rational()) return "rational";
  Json j;
  j["prime"] = f.characteristic();
  if (f.guard() == DegreeGuard::relaxed) j["strict"] = false;
  return j;
}

Field field_from_json(const Json& j) {
  return guarded("field", [&] {
    if (j.is_string()) {
      if (j.get<std::string>() != "rational") throw ParseError("field: unknown field \"" + j.get<std::string>() + "\"");
      return Field::rational();
    }
    const auto p = j.at("prime").get<std::uint64_t>();
    const bool strict = j.contains("strict") ? j.at("strict").get<bool>() : true;
    return Field::prime(p, strict ? DegreeGuard::strict : DegreeGuard::relaxed);
  });
}

Json to_json(const MultiPoly& f) {
  Json j;
  j["nvars"] = f.nvars();
  j["degree"] = f.degree();
  j["field"] = to_json(f.field());
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    Json tj;
    tj["e"] = t.exp;
    tj["c"] = t.coeff.to_string();
    terms.push_back(std::move(tj));
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const Field field = field_from_json(j.at("field"));
    std::vector<Term> terms;
    for (const Json& tj : j.at("terms")) {
      terms.push_back({tj.at("e").get<Exponents>(), field.parse(tj.at("c").get<std::string>())});
    }
    return MultiPoly::from_terms(field, j.at("nvars").get<int>(), j.at("degree").get<int>(), std::move(terms));
  });
}

std::string poly_hash(const MultiPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(f).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(std::span<const Scalar> v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(s.to_string());
  return j;
}

Vector vector_from_json(const Json& j, const Field& field) {
  return guarded("vector", [&] {
    if (!j.is_array()) throw ParseError("vector: expected an array");
    Vector v;
    for (const Json& e : j) v.push_back(field.parse(e.get<std::string>()));
    return v;
  });
}

Json to_json(const ProjPoint& p) { return to_json(std::span<const Scalar>(p.coords())); }

ProjPoint point_from_json(const Json& j, const Field& field) { return ProjPoint(field, vector_from_json(j, field)); }

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Vector row = m.row(r);
    j.push_back(to_json(std::span<const Scalar>(row)));
  }
  return j;
}

Matrix matrix_from_json(const Json& j, const Field& field) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a non-empty array of rows");
    std::vector<Vector> rows;
    for (const Json& r : j) rows.push_back(vector_from_json(r, field));
    for (const Vector& r : rows) {
      if (r.size() != rows[0].size()) throw ParseError("matrix: ragged rows");
    }
    return Matrix::from_rows(field, rows);
  });
}

Json to_json(const ProjLine& l) {
  Json j;
  j["span"] = to_json(l.span());
  return j;
}

ProjLine line_from_json(const Json& j, const Field& field) {
  return guarded("line", [&] {
    Matrix m = matrix_from_json(j.at("span"), field);
    if (m.rows() != 2) throw ParseError("line: span needs two rows");
    return ProjLine::from_span(m);
  });
}

Json cone_to_json(const MultiPoly& f, const ConeSystem& cone) {
  Json j;
  j["kind"] = "cone";
  j["order"] = cone.order;
  Json eqs = Json::array();
  for (const MultiPoly& g : cone.equations) eqs.push_back(to_json(g));
  j["equations"] = std::move(eqs);
  Json transform = nullptr;
  try {
    transform = to_json(normal_form(f, cone.base_point).transform);
  } catch (const SingularPointError&) {
  }
  j["provenance"] = provenance(f, cone.base_point, cone.order, transform);
  return j;
}

Json section_to_json(const MultiPoly& f, const ProjPoint& x, const LambdaSection& s) {
  Json j;
  j["kind"] = "section";
  j["nvars"] = s.nvars;
  j["order"] = s.order;
  Json eqs = Json::array();
  for (const MultiPoly& g : s.equations) eqs.push_back(to_json(g));
  j["equations"] = std::move(eqs);
  j["degenerate_degrees"] = s.degenerate_degrees();
  j["provenance"] = provenance(f, x, s.order, to_json(s.provenance.transform));
  j["provenance"]["pivot"] = s.provenance.pivot;
  j["provenance"]["dropped"] = s.provenance.dropped;
  return j;
}

Json to_json(const MultiPoly& f, const ConeLineWitness& w) {
  Json j;
  j["x"] = to_json(w.x);
  j["h"] = w.h;
  j["line"] = to_json(w.line);
  j["lifted_from"] = to_json(w.lifted_from);
  j["transform"] = to_json(w.transform);
  j["f_hash"] = poly_hash(f);
  return j;
}

ConeLineWitness witness_from_json(const Json& j, const Field& field) {
  return guarded("witness", [&] {
    ConeLineWitness w;
    w.x = point_from_json(j.at("x"), field);
    w.h = j.at("h").get<int>();
    w.line = line_from_json(j.at("line"), field);
    w.lifted_from = line_from_json(j.at("lifted_from"), field);
    w.transform = matrix_from_json(j.at("transform"), field);
    return w;
  });
}

Json to_json(const GonalityCertificate& c) {
  Json j;
  j["kind"] = "certificate";
  j["f"] = to_json(c.f);
  j["x"] = to_json(c.x);
  j["line"] = to_json(c.line);
  j["h"] = c.h;
  j["plane_map"] = to_json(c.plane_map);
  j["curve"] = to_json(c.curve);
  j["mult"] = c.mult;
  j["bound"] = c.bound;
  j["f_hash"] = poly_hash(c.f);
  return j;
}

GonalityCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    GonalityCertificate c;
    c.f = poly_from_json(j.at("f"));
    const Field& field = c.f.field();
    c.x = point_from_json(j.at("x"), field);
    c.line = line_from_json(j.at("line"), field);
    c.h = j.at("h").get<int>();
    c.plane_map = matrix_from_json(j.at("plane_map"), field);
    c.curve = poly_from_json(j.at("curve"));
    c.mult = j.at("mult").get<int>();
    c.bound = j.at("bound").get<int>();
    if (c.curve.field() != field) throw FieldMismatch("certificate: curve and F over different fields");
    return c;
  });
}

Json to_json(const CompleteIntersection& y) {
  Json j;
  j["ambient"] = y.ambient();
  j["field"] = to_json(y.field());
  Json forms = Json::array();
  for (const MultiPoly& g : y.forms()) forms.push_back(to_json(g));
  j["forms"] = std::move(forms);
  return j;
}

CompleteIntersection ci_from_json(const Json& j) {
  return guarded("complete intersection", [&] {
    const Field field = field_from_json(j.at("field"));
    std::vector<MultiPoly> forms;
    for (const Json& g : j.at("forms")) forms.push_back(poly_from_json(g));
    return CompleteIntersection(field, j.at("ambient").get<int>(), std::move(forms));
  });
}

Json to_json(const SigmaSystem& s) {
  Json j;
  j["transform"] = to_json(s.transform);
  j["rows"] = s.matrix.rows();
  j["cols"] = s.matrix.cols();
  j["kernel_dim"] = s.kernel_dim;
  j["smooth_along_line"] = s.smooth_along_line;
  return j;
}

Json to_json(const FanoCensus& c) {
  Json j;
  j["params"] = {{"m", c.m}, {"type", c.type}, {"p", c.p}};
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["with_line"] = c.with_line;
  j["fraction_with_line"] = c.fraction_with_line;
  j["avg_line_count"] = c.avg_line_count;
  j["histogram"] = histogram(c.line_count_histogram);
  j["kernel_dim_histogram"] = histogram(c.kernel_dim_histogram);
  j["budget_used"] = c.budget_used;
  return j;
}

Json to_json(const WitnessCensus& c) {
  Json j;
  j["params"] = {{"n", c.n}, {"d", c.d}, {"h", c.h}, {"p", c.p}};
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["with_point"] = c.with_point;
  j["with_witness"] = c.with_witness;
  j["fraction_with_witness"] = c.with_point == 0 ? 0.0 : static_cast<double>(c.with_witness) / c.with_point;
  j["degenerate"] = c.degenerate;
  j["singular"] = c.singular;
  j["histogram"] = histogram(c.witness_count_histogram);
  return j;
}

Json to_json(const DeltaCensus& c) {
  Json j;
  j["params"] = {{"p", c.p}, {"d", c.d}};
  j["points"] = c.points;
  j["singular"] = c.singular;
  j["pairs"] = c.pairs;
  j["lines_on_x"] = c.lines_on_x;
  j["at_least"] = c.at_least;
  return j;
}

Json to_json(const ZetaReport& z) {
  Json j;
  j["dim_source"] = z.dim_source;
  j["dim_target"] = z.dim_target;
  j["rank"] = z.rank;
  j["dim_kernel"] = z.dim_kernel;
  j["surjective"] = z.surjective;
  j["source_formula"] = z.source_formula;
  j["kernel_formula"] = z.kernel_formula;
  j["spot_check"] = z.spot_check;
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n;
  j["d"] = b.d;
  j["h_max"] = b.h_max;
  j["lower_formula"] = b.lower_formula;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["exceptional"] = b.exceptional;
  j["exceptional_natural"] = b.exceptional_natural;
  j["conngon_upper"] = b.conngon_upper;
  j["irr_gap"] = b.irr_gap;
  j["lower_claimed"] = b.lower_claimed;
  j["upper_claimed"] = b.upper_claimed;
  return j;
}

Json to_json(const FiberReport& r) {
  Json j;
  j["direction"] = to_json(r.direction);
  j["degenerate"] = r.degenerate;
  if (r.degenerate) return j;
  j["contact"] = r.contact;
  j["residual_degree"] = r.residual_degree;
  Json pts = Json::array();
  for (const ProjPoint& p : r.rational) pts.push_back(to_json(p));
  j["rational"] = std::move(pts);
  j["rational_multiplicity"] = r.rational_multiplicity;
  j["factor_degrees"] = r.factor_degrees;
  j["collinear"] = r.collinear;
  j["on_hypersurface"] = r.on_hypersurface;
  return j;
}

}  // namespace gonality
