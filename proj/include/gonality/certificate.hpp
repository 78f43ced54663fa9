#pragma once

#include "gonality/cone_lines.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gonality {

/// A plane curve through x with a point of multiplicity `mult` there. Projection from x
/// gives every component of the curve through x a map to P^1 of degree at most d - mult.
///
/// The plane is span(x, line), parametrized by u -> u0 x + u1 a + u2 b where (a, b) is the
/// canonical spanning pair of the line, so x = [1,0,0] and the line is V(u0).
struct GonalityCertificate {
  MultiPoly f;
  ProjPoint x;
  ProjLine line;
  int h = 0;          // order of the witness the line came from, 0 if none
  Matrix plane_map;   // (n+2) x 3, columns x, a, b
  MultiPoly curve;    // F o plane_map
  int mult = 0;
  int bound = 0;      // d - mult
};

/// Lowest total degree in (u1, u2) of C(1, u1, u2). Throws DomainError on the zero form.
int multiplicity_at(const MultiPoly& curve);

/// Throws DomainError if x is off V(F) or on the line, or if the plane lies in V(F).
GonalityCertificate certify_plane(const MultiPoly& f, const ProjPoint& x, const ProjLine& line, int h = 0);

/// certify_plane after replaying the witness; throws DomainError if the witness is invalid.
/// Throws std::logic_error if mult < h, which would contradict the cone condition.
GonalityCertificate build_certificate(const MultiPoly& f, const ConeLineWitness& w);

/// The line of the plane through x with direction [v1 : v2] and the residual intersection
/// of the curve with it once x is removed `mult` times.
struct FiberReport {
  ProjPoint direction;              // [v1 : v2]
  bool degenerate = false;          // the line lies on the curve; nothing else is filled in
  int contact = 0;                  // multiplicity of x on this line, >= mult
  int residual_degree = 0;          // roots counted with multiplicity, x included if contact > mult
  std::vector<ProjPoint> rational;  // F_p-rational residual points other than x, in ambient coordinates
  std::vector<int> rational_multiplicity;
  std::vector<int> factor_degrees;  // irreducible factors of the residual away from x, with repetition
  bool collinear = true;            // every rational residual point lies on the ambient line
  bool on_hypersurface = true;      // every rational residual point lies on V(F)
};

/// Requires a prime field with p > d.
FiberReport fiber_at(const GonalityCertificate& cert, const ProjPoint& direction);

/// `count` seeded random directions; Rng(seed) drives the choice.
std::vector<FiberReport> projection_fibers(const GonalityCertificate& cert, int count, std::uint64_t seed);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

/// Recomputes everything from (F, x, line, h) and samples `fiber_samples` fibers.
CertificateCheck verify_certificate(const GonalityCertificate& cert, int fiber_samples = 8,
                                    std::uint64_t seed = 0);

/// True when the restriction of the curve to one of `tries` random lines of the plane is
/// squarefree, which rules out repeated components. False means no such line was found.
bool curve_is_reduced(const MultiPoly& curve, Rng& rng, int tries = 8);

}  // namespace gonality
