#pragma once

#include "gonality/multipoly.hpp"
#include "gonality/projective.hpp"
#include "gonality/random.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace testing_support {

using namespace gonality;

inline MultiPoly poly(const Field& f, int nvars, int degree, std::vector<std::pair<Exponents, std::int64_t>> terms) {
  std::vector<Term> t;
  for (auto& [e, c] : terms) t.push_back(Term{e, f.from_int(c)});
  return MultiPoly::from_terms(f, nvars, degree, std::move(t));
}

inline Vector ints(const Field& f, std::vector<std::int64_t> v) {
  Vector out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

inline ProjPoint point(const Field& f, std::vector<std::int64_t> v) { return ProjPoint(f, ints(f, std::move(v))); }

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.uniform(f);
    }
    if (rank(g) == n) return g;
  }
}

}  // namespace testing_support
