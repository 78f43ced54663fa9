#pragma once

#include "gonality/fano_lines.hpp"
#include "gonality/tangent_cone.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gonality {

class Rng;

/// Root multiplicity of F|_line at x, or kInfiniteContact when the line lies on V(F).
/// Throws DomainError if x is not on the line.
int contact_order(const MultiPoly& f, const ProjLine& line, const ProjPoint& x);

/// A line on the order-h cone at x that misses x.
struct ConeLineWitness {
  ProjPoint x;
  int h = 0;
  ProjLine line;
  ProjLine lifted_from;  // the line of the hyperplane section it came from
  Matrix transform;      // normal_form(F, x).transform
};

/// Lines of the section Lambda (see lambda_section) lifted to the cone through the recorded
/// transform. Every witness is re-checked before it is returned. Throws DomainError unless
/// 3 <= h <= deg F over a prime field, SingularPointError at singular points,
/// DegenerateSection if a section equation vanishes identically, and BudgetExceeded.
std::vector<ConeLineWitness> find_cone_lines(const MultiPoly& f, const ProjPoint& x, int h,
                                             std::uint64_t budget = kDefaultLineBudget);

/// Replays a witness from (F, x, h) alone. Empty means valid.
std::vector<std::string> verify_witness(const MultiPoly& f, const ConeLineWitness& w);

/// Membership of the F_p-rational locus: `member` is false when no rational witness exists,
/// which says nothing about lines defined over extensions.
struct Membership {
  bool member = false;
  std::optional<ConeLineWitness> witness;
};

Membership x1h_membership(const MultiPoly& f, const ProjPoint& x, int h,
                          std::uint64_t budget = kDefaultLineBudget);

/// Multi-indices I with |I| = d in nvars variables and I[vertex] >= d - k, in canonical order.
/// Throws DomainError unless 0 <= k <= d and vertex is 0 or 1.
std::vector<Exponents> simplex_support(int nvars, int d, int k, int vertex);

/// True iff the supports around vertices 0 and 1 at step h - 1 share no multi-index.
bool simplex_supports_disjoint(int nvars, int d, int h);

/// A random F_p-point of V(F): random lines are intersected with V(F) until one has a
/// rational root. nullopt after `tries` lines.
std::optional<ProjPoint> random_point_on(const MultiPoly& f, Rng& rng, int tries = 200);

/// Counts of pairs (x, line through x) with x an F_p-point of V(F), by contact order.
struct DeltaCensus {
  std::uint64_t p = 0;
  int d = 0;
  std::uint64_t points = 0;      // F_p-points of V(F)
  std::uint64_t singular = 0;    // of which singular
  std::uint64_t pairs = 0;       // (x, line) pairs examined
  std::uint64_t lines_on_x = 0;  // pairs with the line contained in V(F)
  /// at_least[r] = pairs with contact order >= r, for r = 0..d (lines on V(F) included).
  std::vector<std::uint64_t> at_least;
};

/// Exhaustive over the F_p-points of V(F) and all lines through them. `work` is the number
/// of pairs; throws BudgetExceeded beyond `budget`.
DeltaCensus delta_census(const MultiPoly& f, std::uint64_t budget = kDefaultLineBudget);

/// Fraction of random (F, x) admitting a rational witness.
struct WitnessCensus {
  int n = 0;
  int d = 0;
  int h = 0;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int with_point = 0;
  int with_witness = 0;
  int degenerate = 0;
  int singular = 0;
  std::map<std::size_t, int> witness_count_histogram;
};

/// Trial k draws F of degree d in n + 2 variables and a point from Rng(seed).split(k).
WitnessCensus witness_census(int n, int d, int h, const Field& field, int trials, std::uint64_t seed,
                             std::uint64_t budget = kDefaultLineBudget);

/// Outcome of the seeded search for a hypersurface whose order-h cone at q = [1,0,...,0]
/// contains a line through p = [0,1,0,...,0] while p itself has no rational witness.
struct ExampleSearch {
  bool found = false;
  int tries_used = 0;
  MultiPoly f;
  ProjPoint q;
  ProjPoint p;
  ProjLine line;               // span(e1, e2), on the cone at q
  bool cone_smooth_along_line = false;
};

/// Each try draws F at random, then zeroes the coefficients forcing q, p in V(F), sets the
/// tangent hyperplane at q to y_{n+1} = 0 and clears the support around q that would keep
/// span(e1, e2) off the cone. Requires 2(h - 1) < d so the supports around q and p do not
/// interact. A try succeeds when p is smooth without a rational witness and the cone at q
/// is smooth at the sampled points of the line. No success guarantee: `found` is false if
/// every try fails, which is always the case for h = 3 (the section conic at q contains a
/// line, so it is singular and the cone is singular somewhere on the line).
ExampleSearch search_example(int n, int d, int h, const Field& field, std::uint64_t seed, int tries = 20,
                             std::uint64_t budget = kDefaultLineBudget);

}  // namespace gonality
