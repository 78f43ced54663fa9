#pragma once

#include "gonality/multipoly.hpp"
#include "gonality/projective.hpp"

#include <cstdint>
#include <vector>

namespace gonality {

/// The order-h cone of tangent lines at a point: directions y with G_1(y) = ... = G_{h-1}(y) = 0,
/// where G_k is the t^k coefficient of F(x + t y).
struct ConeSystem {
  ProjPoint base_point;
  int order = 0;                    // h
  std::vector<MultiPoly> equations;  // G_1, ..., G_{h-1}; zero forms are kept in place

  bool contains_direction(std::span<const Scalar> y) const;
};

/// Throws DomainError if F(x) != 0 or h is outside [2, deg F].
ConeSystem taylor_cone(const MultiPoly& f, const ProjPoint& x, int h);

/// Coordinates in which x = [0, ..., 0, 1] and the tangent hyperplane is V(z_n).
///
/// `transform` maps new coordinates to old (y = T z), so `form` = F o T has the shape
/// z_n z_{n+1}^(d-1) + f_2 z_{n+1}^(d-2) + ... + f_d with f_i free of z_{n+1}.
struct NormalForm {
  Matrix transform;
  MultiPoly form;
  int pivot = 0;    // first coordinate where the gradient is nonzero
  int dropped = 0;  // tangent-space generator replaced by x
};

/// Throws DomainError if F(x) != 0, SingularPointError if the gradient vanishes at x.
NormalForm normal_form(const MultiPoly& f, const ProjPoint& x);

/// The equations f_k(z_0, ..., z_{n-1}, 0) for k = 2..h-1 read off a form in normal shape.
/// Zero forms stay in the list so the type (2, ..., h-1) is always visible.
std::vector<MultiPoly> section_equations(const MultiPoly& normal_shape, int h);

/// A hyperplane section of the order-h cone avoiding its vertex, in P^(n-1).
struct LambdaSection {
  int nvars = 0;                     // n
  int order = 0;                     // h
  std::vector<MultiPoly> equations;  // degrees 2, ..., h-1
  NormalForm provenance;

  /// Degrees k whose equation vanishes identically.
  std::vector<int> degenerate_degrees() const;
};

/// Throws as normal_form, and DomainError unless 3 <= h <= deg F.
LambdaSection lambda_section(const MultiPoly& f, const ProjPoint& x, int h);

/// Maps a point of the section (n coordinates) to ambient coordinates: T (a, 0, 0).
Vector lift_point(const NormalForm& nf, std::span<const Scalar> section_point);

struct ZetaReport {
  std::size_t dim_source = 0;  // forms in normal shape: C(d+n+1, d) - n - 2 monomials
  std::size_t dim_target = 0;  // sum over k = 2..h-1 of C(k+n-1, k)
  std::size_t rank = 0;
  std::size_t dim_kernel = 0;
  bool surjective = false;
  bool source_formula = false;  // dim_source == C(d+n+1, d) - n - 2
  bool kernel_formula = false;  // dim_kernel == C(d+n+1, d) - C(h+n-1, h-1) - 1
  bool spot_check = false;      // a random target was hit by a solved preimage
};

inline constexpr std::uint64_t kDefaultZetaCeiling = 200000;

/// Builds the matrix of F -> (f_2|, ..., f_{h-1}|) column by column through
/// section_equations and reports its rank. Throws BudgetExceeded when C(d+n+1, d) exceeds
/// `ceiling`, DomainError unless 2 <= h <= d and n >= 1.
ZetaReport zeta_rank_check(int n, int d, int h, const Field& field, std::uint64_t seed,
                           std::uint64_t ceiling = kDefaultZetaCeiling);

}  // namespace gonality
