#include "gonality/tangent_cone.hpp"

#include "gonality/combinatorics.hpp"
#include "gonality/errors.hpp"
#include "gonality/random.hpp"

namespace gonality {

bool ConeSystem::contains_direction(std::span<const Scalar> y) const {
  for (const auto& g : equations) {
    if (!g.eval(y).is_zero()) return false;
  }
  return true;
}

namespace {

void require_on(const MultiPoly& f, const ProjPoint& x, const char* who) {
  if (static_cast<int>(x.size()) != f.nvars()) throw DimensionError(std::string(who) + ": point has wrong length");
  if (x.field() != f.field()) throw FieldMismatch(std::string(who) + ": point and form over different fields");
  if (!f.eval(x.coords()).is_zero()) throw DomainError(std::string(who) + ": point is not on the hypersurface");
}

}  // namespace

ConeSystem taylor_cone(const MultiPoly& f, const ProjPoint& x, int h) {
  require_on(f, x, "taylor_cone");
  if (h < 2 || h > f.degree()) throw DomainError("taylor_cone: order must lie in [2, deg F]");
  auto coeffs = taylor_coefficients(f, x.coords(), h - 1);
  ConeSystem cone{x, h, {}};
  cone.equations.assign(coeffs.begin() + 1, coeffs.end());
  return cone;
}

NormalForm normal_form(const MultiPoly& f, const ProjPoint& x) {
  require_on(f, x, "normal_form");
  const Field& field = f.field();
  const int nv = f.nvars();
  if (nv < 2) throw DimensionError("normal_form: need at least two variables");
  if (f.degree() < 1) throw DomainError("normal_form: constant form");
  MultiPoly grad = taylor_coefficients(f, x.coords(), 1)[1];
  Vector g(nv, field.zero());
  for (const auto& t : grad.terms()) {
    for (int i = 0; i < nv; ++i) {
      if (t.exp[i]) g[i] = t.coeff;
    }
  }
  int q = 0;
  while (q < nv && g[q].is_zero()) ++q;
  if (q == nv) throw SingularPointError("normal_form: gradient vanishes at " + x.to_string());
  // g . x = d F(x) = 0, so x has a nonzero coordinate besides q.
  int r = 0;
  while (r < nv && (r == q || x[r].is_zero())) ++r;
  if (r == nv) throw DomainError("normal_form: point lies off its own tangent hyperplane");

  const Scalar gq_inv = g[q].inverse();
  std::vector<Vector> cols;
  for (int i = 0; i < nv; ++i) {
    if (i == q || i == r) continue;
    Vector v(nv, field.zero());
    v[i] = field.one();
    v[q] = -(g[i] * gq_inv);
    cols.push_back(std::move(v));
  }
  Vector w(nv, field.zero());
  w[q] = gq_inv;
  cols.push_back(std::move(w));
  cols.push_back(x.coords());
  NormalForm nf;
  nf.transform = Matrix::from_columns(field, cols);
  nf.form = substitute_linear(f, nf.transform);
  nf.pivot = q;
  nf.dropped = r;
  return nf;
}

std::vector<MultiPoly> section_equations(const MultiPoly& normal_shape, int h) {
  const int nv = normal_shape.nvars();
  const int n = nv - 2;
  const int d = normal_shape.degree();
  if (n < 1) throw DimensionError("section_equations: need at least three variables");
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(std::max(h, 2)));
  for (const auto& t : normal_shape.terms()) {
    const int k = d - t.exp[n + 1];
    if (k < 2 || k > h - 1 || t.exp[n] != 0) continue;
    parts[k].push_back(Term{Exponents(t.exp.begin(), t.exp.begin() + n), t.coeff});
  }
  std::vector<MultiPoly> out;
  for (int k = 2; k <= h - 1; ++k) {
    out.push_back(MultiPoly::from_terms(normal_shape.field(), n, k, std::move(parts[k])));
  }
  return out;
}

std::vector<int> LambdaSection::degenerate_degrees() const {
  std::vector<int> out;
  for (const auto& e : equations) {
    if (e.is_zero()) out.push_back(e.degree());
  }
  return out;
}

LambdaSection lambda_section(const MultiPoly& f, const ProjPoint& x, int h) {
  if (h < 3 || h > f.degree()) throw DomainError("lambda_section: order must lie in [3, deg F]");
  LambdaSection s;
  s.provenance = normal_form(f, x);
  s.nvars = f.nvars() - 2;
  s.order = h;
  s.equations = section_equations(s.provenance.form, h);
  return s;
}

Vector lift_point(const NormalForm& nf, std::span<const Scalar> section_point) {
  const std::size_t nv = nf.transform.cols();
  if (section_point.size() + 2 != nv) throw DimensionError("lift_point: section point has wrong length");
  Vector z(nv, nf.transform.field().zero());
  std::copy(section_point.begin(), section_point.end(), z.begin());
  return nf.transform * std::span<const Scalar>(z);
}

ZetaReport zeta_rank_check(int n, int d, int h, const Field& field, std::uint64_t seed, std::uint64_t ceiling) {
  if (n < 1) throw DomainError("zeta_rank_check: need n >= 1");
  if (h < 2 || h > d) throw DomainError("zeta_rank_check: order must lie in [2, d]");
  field.require_degree(d);
  const BigInt total = choose(d + n + 1, d);
  if (total > ceiling) {
    throw BudgetExceeded("zeta_rank_check: C(d+n+1, d) exceeds the ceiling",
                         static_cast<unsigned long long>(total), ceiling);
  }
  const int nv = n + 2;
  // Source basis: every monomial except z_{n+1}^d and z_i z_{n+1}^(d-1).
  std::vector<Exponents> source;
  for (auto& e : monomials(nv, d)) {
    if (e[n + 1] >= d - 1) continue;
    source.push_back(std::move(e));
  }
  // Target basis: monomials of degree k in n variables, k = 2..h-1, in order.
  std::vector<std::pair<int, Exponents>> target;
  for (int k = 2; k <= h - 1; ++k) {
    for (auto& e : monomials(n, k)) target.emplace_back(k, std::move(e));
  }
  auto target_index = [&](int k, const Exponents& e) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (target[i].first == k && target[i].second == e) return i;
    }
    throw DomainError("zeta_rank_check: extracted monomial outside the target basis");
  };

  ZetaReport rep;
  rep.dim_source = source.size();
  rep.dim_target = target.size();
  Matrix m(field, target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    MultiPoly mono = MultiPoly::monomial(field, source[j], field.one());
    auto eqs = section_equations(mono, h);
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      for (const auto& t : eqs[k].terms()) m(target_index(static_cast<int>(k) + 2, t.exp), j) = t.coeff;
    }
  }
  rep.rank = rank(m);
  rep.dim_kernel = source.size() - rep.rank;
  rep.surjective = rep.rank == target.size();
  rep.source_formula = BigInt(rep.dim_source) == total - n - 2;
  rep.kernel_formula = BigInt(rep.dim_kernel) == total - choose(h + n - 1, h - 1) - 1;

  // Spot check: solve for a preimage of a random target and push it back through extraction.
  Rng rng(seed);
  Vector goal;
  for (std::size_t i = 0; i < target.size(); ++i) {
    goal.push_back(field.is_prime() ? rng.uniform(field) : field.from_int(static_cast<std::int64_t>(rng.below(19)) - 9));
  }
  auto pre = solve(m, goal);
  if (pre) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < source.size(); ++j) terms.push_back(Term{source[j], (*pre)[j]});
    auto eqs = section_equations(MultiPoly::from_terms(field, nv, d, std::move(terms)), h);
    bool ok = true;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (eqs[target[i].first - 2].coefficient(target[i].second) != goal[i]) ok = false;
    }
    rep.spot_check = ok;
  }
  return rep;
}

}  // namespace gonality
