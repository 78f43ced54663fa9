#pragma once

#include "gonality/multipoly.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gonality {

/// Forms over F_p flattened to residues for tight evaluation loops.
///
/// Holds a scratch power table, so one instance must not be shared between threads.
class PackedSystem {
 public:
  explicit PackedSystem(std::span<const MultiPoly> forms);

  std::size_t size() const noexcept { return forms_.size(); }
  int nvars() const noexcept { return nvars_; }
  std::uint64_t modulus() const noexcept { return p_; }
  int max_degree() const noexcept { return max_degree_; }
  int degree(std::size_t i) const { return forms_[i].degree; }

  std::uint64_t eval(std::size_t i, const std::uint64_t* x);
  /// True iff every form vanishes at x.
  bool vanishes_at(const std::uint64_t* x);

 private:
  struct Form {
    int degree;
    std::vector<std::uint8_t> exps;  // nvars entries per term
    std::vector<std::uint64_t> coeffs;
  };
  void load_powers(const std::uint64_t* x);
  std::uint64_t eval_loaded(const Form& f) const;

  std::uint64_t p_ = 0;
  int nvars_ = 0;
  int max_degree_ = 0;
  std::vector<Form> forms_;
  std::vector<std::uint64_t> powers_;  // powers_[v * (max_degree_ + 1) + e] = x_v^e
};

/// Calls visit(x) for the canonical representative of every point of P^(nvars-1)(F_p),
/// ordered by leading position and then lexicographically.
void for_each_point(int nvars, std::uint64_t p, const std::function<void(const std::uint64_t*)>& visit);

/// Number of F_p-points of V(forms) in P^(nvars-1).
std::uint64_t count_points(std::span<const MultiPoly> forms);

}  // namespace gonality
