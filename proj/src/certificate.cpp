#include "gonality/certificate.hpp"

#include "gonality/errors.hpp"
#include "gonality/random.hpp"
#include "gonality/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gonality {

int multiplicity_at(const MultiPoly& curve) {
  if (curve.nvars() != 3) throw DimensionError("multiplicity_at: plane curves have three variables");
  if (curve.is_zero()) throw DomainError("multiplicity_at: zero curve");
  int top = 0;
  for (const auto& t : curve.terms()) top = std::max(top, t.exp[0]);
  return curve.degree() - top;
}

namespace {

Matrix plane_map_for(const ProjPoint& x, const ProjLine& line) {
  return Matrix::from_columns(x.field(), {x.coords(), line.first(), line.second()});
}

// c_i of C(s, t v1, t v2), multiplying s^(d-i) t^i.
BinaryForm along_direction(const MultiPoly& curve, const Scalar& v1, const Scalar& v2) {
  const Field& field = curve.field();
  Matrix m(field, 3, 2);
  m(0, 0) = field.one();
  m(1, 1) = v1;
  m(2, 1) = v2;
  return BinaryForm::from_poly(substitute_linear(curve, m));
}

int lowest_index(const BinaryForm& b) {
  int i = 0;
  while (b.coeffs()[i].is_zero()) ++i;
  return i;
}

// The dehomogenization at t = 1 as a polynomial in s: coefficient of s^(d-i) is c_i.
UniPoly at_unit_t(const BinaryForm& b) {
  const int d = b.degree();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(d - i)] = b.coeffs()[i].residue();
  return UniPoly(b.field().characteristic(), std::move(c));
}

}  // namespace

GonalityCertificate certify_plane(const MultiPoly& f, const ProjPoint& x, const ProjLine& line, int h) {
  if (static_cast<int>(x.size()) != f.nvars() || line.ambient_size() != x.size()) {
    throw DimensionError("certify_plane: point, line and form live in different spaces");
  }
  if (!f.eval(x.coords()).is_zero()) throw DomainError("certify_plane: x is not on the hypersurface");
  if (line.contains(x)) throw DomainError("certify_plane: the line passes through x");
  GonalityCertificate c;
  c.f = f;
  c.x = x;
  c.line = line;
  c.h = h;
  c.plane_map = plane_map_for(x, line);
  c.curve = substitute_linear(f, c.plane_map);
  if (c.curve.is_zero()) throw DomainError("certify_plane: the plane lies in the hypersurface");
  c.mult = multiplicity_at(c.curve);
  c.bound = f.degree() - c.mult;
  return c;
}

GonalityCertificate build_certificate(const MultiPoly& f, const ConeLineWitness& w) {
  const auto bad = verify_witness(f, w);
  if (!bad.empty()) throw DomainError("build_certificate: invalid witness: " + bad.front());
  GonalityCertificate c = certify_plane(f, w.x, w.line, w.h);
  if (c.mult < w.h) throw std::logic_error("build_certificate: multiplicity below the cone order");
  return c;
}

FiberReport fiber_at(const GonalityCertificate& cert, const ProjPoint& direction) {
  const Field& field = cert.curve.field();
  const int d = cert.curve.degree();
  if (!field.is_prime() || field.characteristic() <= static_cast<std::uint64_t>(d)) {
    throw DomainError("fiber_at: needs a prime field with p > d");
  }
  if (direction.size() != 2) throw DimensionError("fiber_at: direction is a point of P^1");
  FiberReport r;
  r.direction = direction;
  const BinaryForm b = along_direction(cert.curve, direction[0], direction[1]);
  if (b.is_zero()) {
    r.degenerate = true;
    return r;
  }
  r.contact = lowest_index(b);
  const UniPoly away = at_unit_t(b);
  Vector w(cert.x.size());
  const Vector a = cert.line.first();
  const Vector bb = cert.line.second();
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = direction[0] * a[k] + direction[1] * bb[k];
  const ProjLine ambient = ProjLine::through(cert.x.coords(), w);

  int degree_sum = r.contact - cert.mult;
  if (away.degree() > 0) {
    Rng rng(0);
    for (const auto& fac : factor(away, rng)) {
      for (int k = 0; k < fac.multiplicity; ++k) r.factor_degrees.push_back(fac.poly.degree());
      degree_sum += fac.poly.degree() * fac.multiplicity;
      if (fac.poly.degree() != 1) continue;
      const Scalar s = -field.from_residue(fac.poly[0]);
      Vector pt(cert.x.size());
      for (std::size_t k = 0; k < pt.size(); ++k) pt[k] = s * cert.x[k] + w[k];
      ProjPoint p(field, pt);
      if (!ambient.contains(p)) r.collinear = false;
      if (!cert.f.eval(p.coords()).is_zero()) r.on_hypersurface = false;
      r.rational.push_back(std::move(p));
      r.rational_multiplicity.push_back(fac.multiplicity);
    }
  }
  r.residual_degree = degree_sum;
  return r;
}

std::vector<FiberReport> projection_fibers(const GonalityCertificate& cert, int count, std::uint64_t seed) {
  const Field& field = cert.curve.field();
  Rng rng(seed);
  std::vector<FiberReport> out;
  for (int i = 0; i < count; ++i) {
    // Uniform over the p + 1 points of P^1.
    const std::uint64_t k = rng.below(field.characteristic() + 1);
    Vector dir = k == field.characteristic() ? Vector{field.zero(), field.one()}
                                             : Vector{field.one(), field.from_residue(k)};
    out.push_back(fiber_at(cert, ProjPoint(field, dir)));
  }
  return out;
}

CertificateCheck verify_certificate(const GonalityCertificate& cert, int fiber_samples, std::uint64_t seed) {
  CertificateCheck out;
  auto& bad = out.violations;
  try {
    const MultiPoly& f = cert.f;
    const int d = f.degree();
    if (static_cast<int>(cert.x.size()) != f.nvars() || cert.line.ambient_size() != cert.x.size()) {
      bad.push_back("dimension mismatch");
      return out;
    }
    if (!f.eval(cert.x.coords()).is_zero()) bad.push_back("x is not on the hypersurface");
    if (cert.line.contains(cert.x)) bad.push_back("line passes through x");
    const Matrix plane = plane_map_for(cert.x, cert.line);
    if (plane != cert.plane_map) bad.push_back("plane map mismatch");
    const MultiPoly curve = substitute_linear(f, plane);
    if (curve != cert.curve) bad.push_back("curve mismatch");
    if (curve.is_zero()) {
      bad.push_back("plane lies in the hypersurface");
      return out;
    }
    const int mult = multiplicity_at(curve);
    if (mult != cert.mult) bad.push_back("mult mismatch");
    if (cert.bound != d - cert.mult) bad.push_back("bound mismatch");
    if (d - mult < 1) bad.push_back("bound below 1");
    if (cert.h >= 2 && bad.empty()) {
      const ConeSystem cone = taylor_cone(f, cert.x, cert.h);
      for (const auto& g : cone.equations) {
        if (!restrict_to_line(g, cert.line).is_zero()) {
          bad.push_back("line is not on the order-h cone");
          break;
        }
      }
      if (mult < cert.h) bad.push_back("mult below cone order");
    }
    const Field& field = f.field();
    if (bad.empty() && field.is_prime() && field.characteristic() > static_cast<std::uint64_t>(d)) {
      GonalityCertificate fresh = cert;
      fresh.curve = curve;
      fresh.mult = mult;
      for (const auto& r : projection_fibers(fresh, fiber_samples, seed)) {
        if (r.degenerate) continue;
        if (r.contact < mult) bad.push_back("fiber contact below mult at " + r.direction.to_string());
        if (r.residual_degree != d - mult) bad.push_back("fiber residual degree at " + r.direction.to_string());
        if (!r.collinear) bad.push_back("fiber not collinear at " + r.direction.to_string());
        if (!r.on_hypersurface) bad.push_back("fiber point off the hypersurface at " + r.direction.to_string());
      }
    }
  } catch (const std::exception& e) {
    bad.push_back(std::string("replay failed: ") + e.what());
  }
  out.ok = bad.empty();
  return out;
}

bool curve_is_reduced(const MultiPoly& curve, Rng& rng, int tries) {
  const Field& field = curve.field();
  if (!field.is_prime() || field.characteristic() <= static_cast<std::uint64_t>(curve.degree())) {
    throw DomainError("curve_is_reduced: needs a prime field with p > d");
  }
  if (curve.nvars() != 3) throw DimensionError("curve_is_reduced: plane curves have three variables");
  for (int t = 0; t < tries; ++t) {
    Vector a(3), b(3);
    for (auto& c : a) c = rng.uniform(field);
    for (auto& c : b) c = rng.uniform(field);
    if (rank(Matrix::from_rows(field, {a, b})) < 2) continue;
    const BinaryForm g = BinaryForm::from_poly(substitute_linear(curve, Matrix::from_columns(field, {a, b})));
    if (g.is_zero() || lowest_index(g) > 1) continue;
    const UniPoly u = at_unit_t(g);
    if (u.degree() <= 0 || gcd(u, u.derivative()).degree() == 0) return true;
  }
  return false;
}

}  // namespace gonality
