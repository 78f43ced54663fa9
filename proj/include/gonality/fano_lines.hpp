#pragma once

#include "gonality/binary_form.hpp"
#include "gonality/multipoly.hpp"
#include "gonality/projective.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gonality {

class Rng;

/// V(F_1, ..., F_s) in P^m. Any number of forms is accepted (the hyperplane sections of
/// tangent cones can be overdetermined); predonzan_invariants needs 1 <= s <= m - 2.
class CompleteIntersection {
 public:
  CompleteIntersection() = default;
  /// Throws DimensionError unless every form has m + 1 variables, FieldMismatch on mixed fields.
  CompleteIntersection(Field field, int m, std::vector<MultiPoly> forms);

  const Field& field() const noexcept { return field_; }
  int ambient() const noexcept { return m_; }
  const std::vector<MultiPoly>& forms() const noexcept { return forms_; }
  std::vector<int> type() const;

 private:
  Field field_;
  int m_ = 0;
  std::vector<MultiPoly> forms_;
};

/// F(s a + t b) for the canonical spanning pair (a, b) of the line.
BinaryForm restrict_to_line(const MultiPoly& f, const ProjLine& line);

bool line_on_ci(const CompleteIntersection& y, const ProjLine& line);

inline constexpr std::uint64_t kDefaultLineBudget = 10'000'000;

struct LineEnumeration {
  std::vector<ProjLine> lines;  // sorted, distinct
  std::uint64_t work = 0;       // points and point pairs examined
};

/// Every F_p-rational line on Y. Candidates are enumerated per pivot class of the echelon
/// form: each spanning row is first required to lie on Y, then each surviving pair is
/// tested on further points of the line. `work` counts the rows and pairs examined; the
/// enumeration throws BudgetExceeded as soon as it would pass `budget`.
LineEnumeration enumerate_lines(const CompleteIntersection& y, std::uint64_t budget = kDefaultLineBudget);

/// Number of lines of P^m(F_p): the Gaussian binomial [m+1 choose 2]_p.
BigInt line_count(int m, std::uint64_t p);

struct PredonzanInvariants {
  long t = 0;
  long theta = 0;
  BigInt incidence_dim;  // 2(m-1) + sum C(d_i+m, m) - sum (d_i+1)
};

/// Throws DomainError unless 1 <= s <= m - 2 and all d_i >= 1.
PredonzanInvariants predonzan_invariants(int m, std::span<const int> type);

/// c^(i)_{h, mu0, mu1}: coefficient of y0^mu0 y1^mu1 y_i in the h-th form, in coordinates
/// where the line is V(y_2, ..., y_m).
struct SigmaCoefficient {
  int form;
  int var;
  int mu0;
  int mu1;
  Scalar value;
};

/// The first-order deformation system of a line on Y.
///
/// Columns are a_{i,0}, a_{i,1} for i = 2..m; rows are the coefficients of
/// y0^(d_h-k) y1^k for each form h and k = 0..d_h.
struct SigmaSystem {
  Matrix transform;  // old coordinates = transform * new, line = span(e0, e1)
  Matrix matrix;
  std::vector<SigmaCoefficient> coefficients;
  std::size_t kernel_dim = 0;
  /// Jacobian rank s at the sampled points of the line; only then is kernel_dim the
  /// dimension of the sections of the normal bundle.
  bool smooth_along_line = false;
};

/// Throws DomainError if the line is not on Y.
SigmaSystem sigma_system(const CompleteIntersection& y, const ProjLine& line);

/// Change of coordinates sending span(e0, e1) onto the line: columns a, b, then the unit
/// vectors off the two pivot positions.
Matrix line_frame(const ProjLine& line);

/// Each F_i uniform over F_p. Throws DomainError on the rationals.
CompleteIntersection random_ci(int m, std::span<const int> type, const Field& field, Rng& rng);

/// Each F_i uniform among the nonzero forms vanishing on the line.
CompleteIntersection random_ci_containing(const ProjLine& line, std::span<const int> type, Rng& rng);

struct FanoCensus {
  int m = 0;
  std::vector<int> type;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int with_line = 0;
  double fraction_with_line = 0;
  double avg_line_count = 0;
  std::map<std::size_t, int> line_count_histogram;
  std::map<std::size_t, int> kernel_dim_histogram;  // over all lines found
  std::uint64_t budget_used = 0;
};

/// Trial k uses the child stream Rng(seed).split(k), so reports are deterministic.
FanoCensus fano_census(int m, std::span<const int> type, const Field& field, int trials, std::uint64_t seed,
                       std::uint64_t budget = kDefaultLineBudget);

struct SigmaCensus {
  int trials = 0;
  std::map<std::size_t, int> kernel_dim_histogram;
  int smooth = 0;
};

/// sigma_system on random CIs containing span(e0, e1).
SigmaCensus sigma_census(int m, std::span<const int> type, const Field& field, int trials, std::uint64_t seed);

}  // namespace gonality
