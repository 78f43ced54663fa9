#include "gonality/cone_lines.hpp"

#include "gonality/errors.hpp"
#include "gonality/packed.hpp"
#include "gonality/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace gonality {

int contact_order(const MultiPoly& f, const ProjLine& line, const ProjPoint& x) {
  if (x.size() != line.ambient_size() || static_cast<int>(x.size()) != f.nvars()) {
    throw DimensionError("contact_order: point, line and form live in different spaces");
  }
  if (!line.contains(x)) throw DomainError("contact_order: the point is not on the line");
  return restrict_to_line(f, line).multiplicity_at(line.parameter_of(x));
}

namespace {

bool cone_contains_line(const ConeSystem& cone, const ProjLine& line) {
  for (const auto& g : cone.equations) {
    if (!restrict_to_line(g, line).is_zero()) return false;
  }
  return true;
}

ProjLine lift_line(const NormalForm& nf, const ProjLine& section_line) {
  return ProjLine::through(lift_point(nf, section_line.first()), lift_point(nf, section_line.second()));
}

}  // namespace

std::vector<ConeLineWitness> find_cone_lines(const MultiPoly& f, const ProjPoint& x, int h, std::uint64_t budget) {
  if (!f.field().is_prime()) throw DomainError("find_cone_lines: prime fields only");
  LambdaSection section = lambda_section(f, x, h);
  const auto degenerate = section.degenerate_degrees();
  if (!degenerate.empty()) {
    throw DegenerateSection("find_cone_lines: section equation of degree " + std::to_string(degenerate.front()) +
                            " vanishes identically");
  }
  std::vector<ConeLineWitness> out;
  // For n = 1 the section is a point set in P^0 and carries no lines.
  if (section.nvars < 2) return out;
  CompleteIntersection lambda(f.field(), section.nvars - 1, section.equations);
  const auto found = enumerate_lines(lambda, budget);
  const ConeSystem cone = taylor_cone(f, x, h);
  for (const auto& l : found.lines) {
    ConeLineWitness w{x, h, lift_line(section.provenance, l), l, section.provenance.transform};
    if (w.line.contains(x) || !cone_contains_line(cone, w.line)) {
      throw std::logic_error("find_cone_lines: lifted line failed re-verification");
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.line < b.line; });
  return out;
}

std::vector<std::string> verify_witness(const MultiPoly& f, const ConeLineWitness& w) {
  std::vector<std::string> bad;
  try {
    if (w.line.ambient_size() != static_cast<std::size_t>(f.nvars())) {
      bad.push_back("line lives in the wrong space");
      return bad;
    }
    if (w.line.contains(w.x)) bad.push_back("line passes through x");
    const ConeSystem cone = taylor_cone(f, w.x, w.h);
    for (std::size_t k = 0; k < cone.equations.size(); ++k) {
      if (!restrict_to_line(cone.equations[k], w.line).is_zero()) {
        bad.push_back("G_" + std::to_string(k + 1) + " does not vanish on the line");
      }
    }
    if (w.h >= 3) {
      const LambdaSection section = lambda_section(f, w.x, w.h);
      if (section.provenance.transform != w.transform) bad.push_back("transform mismatch");
      if (w.lifted_from.ambient_size() != static_cast<std::size_t>(section.nvars)) {
        bad.push_back("section line lives in the wrong space");
      } else {
        for (const auto& e : section.equations) {
          if (!restrict_to_line(e, w.lifted_from).is_zero()) {
            bad.push_back("section line is not on the section");
            break;
          }
        }
        if (lift_line(section.provenance, w.lifted_from) != w.line) bad.push_back("lift mismatch");
      }
    }
  } catch (const std::exception& e) {
    bad.push_back(std::string("replay failed: ") + e.what());
  }
  return bad;
}

Membership x1h_membership(const MultiPoly& f, const ProjPoint& x, int h, std::uint64_t budget) {
  Membership m;
  auto ws = find_cone_lines(f, x, h, budget);
  if (!ws.empty()) {
    m.member = true;
    m.witness = std::move(ws.front());
  }
  return m;
}

std::vector<Exponents> simplex_support(int nvars, int d, int k, int vertex) {
  if (k < 0 || k > d) throw DomainError("simplex_support: need 0 <= k <= d");
  if (vertex != 0 && vertex != 1) throw DomainError("simplex_support: vertex must be 0 or 1");
  if (nvars < 2) throw DimensionError("simplex_support: need at least two variables");
  std::vector<Exponents> out;
  for (auto& e : monomials(nvars, d)) {
    if (e[vertex] >= d - k) out.push_back(std::move(e));
  }
  return out;
}

bool simplex_supports_disjoint(int nvars, int d, int h) {
  const auto a = simplex_support(nvars, d, h - 1, 0);
  const auto b = simplex_support(nvars, d, h - 1, 1);
  // Both lists are in the same canonical order.
  auto desc = [](const Exponents& u, const Exponents& v) { return u > v; };
  std::vector<Exponents> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common), desc);
  return common.empty();
}

std::optional<ProjPoint> random_point_on(const MultiPoly& f, Rng& rng, int tries) {
  const Field& field = f.field();
  if (!field.is_prime()) throw DomainError("random_point_on: prime fields only");
  const std::size_t nv = static_cast<std::size_t>(f.nvars());
  for (int t = 0; t < tries; ++t) {
    Vector a(nv), b(nv);
    for (auto& c : a) c = rng.uniform(field);
    for (auto& c : b) c = rng.uniform(field);
    ProjLine line;
    try {
      line = ProjLine::through(a, b);
    } catch (const DomainError&) {
      continue;
    }
    const BinaryForm g = restrict_to_line(f, line);
    if (g.is_zero()) return ProjPoint(field, line.first());
    const auto roots = g.rational_roots();
    if (roots.empty()) continue;
    const ProjPoint& r = roots[rng.below(roots.size())].first;
    Vector v(nv, field.zero());
    const Vector u = line.first();
    const Vector w = line.second();
    for (std::size_t k = 0; k < nv; ++k) v[k] = r[0] * u[k] + r[1] * w[k];
    return ProjPoint(field, std::move(v));
  }
  return std::nullopt;
}

DeltaCensus delta_census(const MultiPoly& f, std::uint64_t budget) {
  const Field& field = f.field();
  if (!field.is_prime()) throw DomainError("delta_census: prime fields only");
  const int nv = f.nvars();
  if (nv < 2) throw DimensionError("delta_census: need at least two variables");
  const int d = f.degree();
  DeltaCensus c;
  c.p = field.characteristic();
  c.d = d;
  c.at_least.assign(static_cast<std::size_t>(d) + 1, 0);
  PackedSystem fsys(std::span<const MultiPoly>(&f, 1));
  std::vector<std::uint64_t> y(static_cast<std::size_t>(nv));
  for_each_point(nv, c.p, [&](const std::uint64_t* xr) {
    if (!fsys.vanishes_at(xr)) return;
    ++c.points;
    Vector xv;
    int lead = -1;
    for (int k = 0; k < nv; ++k) {
      xv.push_back(field.from_residue(xr[k]));
      if (lead < 0 && xr[k] != 0) lead = k;
    }
    auto taylor = taylor_coefficients(f, xv, d);
    taylor.erase(taylor.begin());
    if (taylor.front().is_zero()) ++c.singular;
    PackedSystem g(taylor);
    // Lines through x correspond to directions in the hyperplane y_lead = 0.
    for_each_point(nv - 1, c.p, [&](const std::uint64_t* dir) {
      if (c.pairs == budget) throw BudgetExceeded("delta_census: pairs exceed the budget", budget + 1, budget);
      ++c.pairs;
      for (int k = 0, j = 0; k < nv; ++k) y[k] = k == lead ? 0 : dir[j++];
      int order = 1;
      while (order <= d && g.eval(static_cast<std::size_t>(order - 1), y.data()) == 0) ++order;
      if (order > d) ++c.lines_on_x;
      for (int r = 0; r <= std::min(order, d); ++r) ++c.at_least[r];
    });
  });
  return c;
}

WitnessCensus witness_census(int n, int d, int h, const Field& field, int trials, std::uint64_t seed,
                             std::uint64_t budget) {
  WitnessCensus c;
  c.n = n;
  c.d = d;
  c.h = h;
  c.p = field.characteristic();
  c.seed = seed;
  c.trials = trials;
  const Rng root(seed);
  for (int k = 0; k < trials; ++k) {
    Rng rng = root.split(static_cast<std::uint64_t>(k));
    const MultiPoly f = random_poly(n + 2, d, field, rng);
    const auto x = random_point_on(f, rng);
    if (!x) continue;
    ++c.with_point;
    try {
      const auto ws = find_cone_lines(f, *x, h, budget);
      ++c.witness_count_histogram[ws.size()];
      if (!ws.empty()) ++c.with_witness;
    } catch (const SingularPointError&) {
      ++c.singular;
    } catch (const DegenerateSection&) {
      ++c.degenerate;
    }
  }
  return c;
}

ExampleSearch search_example(int n, int d, int h, const Field& field, std::uint64_t seed, int tries,
                             std::uint64_t budget) {
  if (n < 2) throw DomainError("search_example: need n >= 2");
  if (h < 3 || h > d) throw DomainError("search_example: order must lie in [3, d]");
  if (2 * (h - 1) >= d) throw DomainError("search_example: need 2(h - 1) < d");
  const int nv = n + 2;
  auto unit_exp = [&](std::initializer_list<std::pair<int, int>> parts) {
    Exponents e(static_cast<std::size_t>(nv), 0);
    for (auto [var, pw] : parts) e[var] += pw;
    return e;
  };
  // Coefficients forced to zero: q and p on V(F), the tangent hyperplane at q, and the
  // terms of F(q + t y) restricted to span(e1, e2) for t^2 .. t^(h-1).
  std::vector<Exponents> cleared{unit_exp({{0, d}}), unit_exp({{1, d}})};
  for (int j = 1; j <= n; ++j) cleared.push_back(unit_exp({{0, d - 1}, {j, 1}}));
  for (int k = 2; k <= h - 1; ++k) {
    for (int j1 = 0; j1 <= k; ++j1) cleared.push_back(unit_exp({{0, d - k}, {1, j1}, {2, k - j1}}));
  }
  std::sort(cleared.begin(), cleared.end());
  const Exponents tangent = unit_exp({{0, d - 1}, {n + 1, 1}});

  ExampleSearch out;
  Vector qv(static_cast<std::size_t>(nv), field.zero()), pv = qv, rv = qv;
  qv[0] = field.one();
  pv[1] = field.one();
  rv[2] = field.one();
  out.q = ProjPoint(field, qv);
  out.p = ProjPoint(field, pv);
  out.line = ProjLine::through(pv, rv);
  const Rng root(seed);
  for (int t = 0; t < tries; ++t) {
    out.tries_used = t + 1;
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    const MultiPoly raw = random_poly(nv, d, field, rng);
    std::vector<Term> terms;
    for (const auto& term : raw.terms()) {
      if (term.exp == tangent || std::binary_search(cleared.begin(), cleared.end(), term.exp)) continue;
      terms.push_back(term);
    }
    terms.push_back(Term{tangent, field.one()});
    MultiPoly f = MultiPoly::from_terms(field, nv, d, std::move(terms));

    const ConeSystem cone = taylor_cone(f, out.q, h);
    if (!cone_contains_line(cone, out.line)) throw std::logic_error("search_example: construction left the line off the cone");
    try {
      if (!find_cone_lines(f, out.p, h, budget).empty()) continue;
    } catch (const DomainError&) {
      // Singular at p or a degenerate section there: not a usable example.
      continue;
    }
    CompleteIntersection cone_ci(field, nv - 1, cone.equations);
    const bool smooth = sigma_system(cone_ci, out.line).smooth_along_line;
    if (!smooth) continue;
    out.found = true;
    out.f = std::move(f);
    out.cone_smooth_along_line = true;
    return out;
  }
  return out;
}

}  // namespace gonality
