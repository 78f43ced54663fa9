#include "gonality/fano_lines.hpp"

#include "gonality/combinatorics.hpp"
#include "gonality/errors.hpp"
#include "gonality/packed.hpp"
#include "gonality/random.hpp"

#include <algorithm>

namespace gonality {

CompleteIntersection::CompleteIntersection(Field field, int m, std::vector<MultiPoly> forms)
    : field_(field), m_(m), forms_(std::move(forms)) {
  if (m < 1) throw DimensionError("CompleteIntersection: ambient dimension must be positive");
  for (const auto& f : forms_) {
    if (f.nvars() != m + 1) throw DimensionError("CompleteIntersection: form has the wrong number of variables");
    if (f.field() != field_) throw FieldMismatch("CompleteIntersection: form over a different field");
    if (f.degree() < 1) throw DimensionError("CompleteIntersection: constant form");
  }
}

std::vector<int> CompleteIntersection::type() const {
  std::vector<int> t;
  for (const auto& f : forms_) t.push_back(f.degree());
  return t;
}

BinaryForm restrict_to_line(const MultiPoly& f, const ProjLine& line) {
  if (static_cast<std::size_t>(f.nvars()) != line.ambient_size()) {
    throw DimensionError("restrict_to_line: form and line live in different spaces");
  }
  return BinaryForm::from_poly(substitute_linear(f, line.span().transpose()));
}

bool line_on_ci(const CompleteIntersection& y, const ProjLine& line) {
  for (const auto& f : y.forms()) {
    if (!restrict_to_line(f, line).is_zero()) return false;
  }
  return true;
}

BigInt line_count(int m, std::uint64_t p) {
  BigInt q = p;
  BigInt num = (pow(q, static_cast<unsigned>(m + 1)) - 1) * (pow(q, static_cast<unsigned>(m)) - 1);
  return num / ((q * q - 1) * (q - 1));
}

namespace {

using Residues = std::vector<std::uint64_t>;

// Visits base with every assignment of the `free` positions, lexicographically.
template <class Visit>
void odometer(Residues& base, const std::vector<int>& free, std::uint64_t p, Visit&& visit) {
  for (int k : free) base[k] = 0;
  for (;;) {
    visit(base);
    int k = static_cast<int>(free.size()) - 1;
    while (k >= 0 && base[free[k]] == p - 1) base[free[k--]] = 0;
    if (k < 0) return;
    ++base[free[k]];
  }
}

std::uint64_t saturating_pow(std::uint64_t p, int e) {
  unsigned __int128 v = 1;
  for (int i = 0; i < e; ++i) {
    v *= p;
    if (v > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a + b < a ? ~std::uint64_t{0} : a + b; }

}  // namespace

LineEnumeration enumerate_lines(const CompleteIntersection& y, std::uint64_t budget) {
  const Field& field = y.field();
  if (!field.is_prime()) throw DomainError("enumerate_lines: prime fields only");
  const std::uint64_t p = field.characteristic();
  const int m = y.ambient();
  const int nv = m + 1;
  PackedSystem sys(y.forms());
  const int max_d = sys.max_degree();
  // A form of degree d vanishing at [1:0], [0:1] and [1:lambda] for lambda = 1..d-1 is zero
  // on the line, provided those d + 1 points are distinct, i.e. d <= p.
  const bool exact_by_points = static_cast<std::uint64_t>(max_d) <= p;

  std::uint64_t row_cost = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      row_cost = saturating_add(row_cost, saturating_add(saturating_pow(p, m - i - 1), saturating_pow(p, m - j)));
    }
  }
  if (row_cost > budget) throw BudgetExceeded("enumerate_lines: candidate rows exceed the budget", row_cost, budget);

  LineEnumeration out;
  std::vector<std::pair<Residues, Residues>> found;
  Residues pt(static_cast<std::size_t>(nv));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::vector<Residues> rows_a;
      std::vector<Residues> rows_b;
      Residues a(static_cast<std::size_t>(nv), 0);
      a[i] = 1;
      std::vector<int> free_a;
      for (int k = i + 1; k <= m; ++k) {
        if (k != j) free_a.push_back(k);
      }
      odometer(a, free_a, p, [&](const Residues& v) {
        if (sys.vanishes_at(v.data())) rows_a.push_back(v);
      });
      Residues b(static_cast<std::size_t>(nv), 0);
      b[j] = 1;
      std::vector<int> free_b;
      for (int k = j + 1; k <= m; ++k) free_b.push_back(k);
      odometer(b, free_b, p, [&](const Residues& v) {
        if (sys.vanishes_at(v.data())) rows_b.push_back(v);
      });
      out.work = saturating_add(out.work, saturating_add(saturating_pow(p, static_cast<int>(free_a.size())),
                                                         saturating_pow(p, static_cast<int>(free_b.size()))));
      const std::uint64_t pairs = static_cast<std::uint64_t>(rows_a.size()) * rows_b.size();
      if (saturating_add(out.work, pairs) > budget) {
        throw BudgetExceeded("enumerate_lines: candidate pairs exceed the budget", saturating_add(out.work, pairs),
                             budget);
      }
      out.work += pairs;
      for (const auto& ra : rows_a) {
        for (const auto& rb : rows_b) {
          bool on = true;
          if (exact_by_points) {
            for (std::uint64_t lambda = 1; on && lambda < static_cast<std::uint64_t>(max_d); ++lambda) {
              for (int k = 0; k < nv; ++k) pt[k] = modp::add(ra[k], modp::mul(lambda, rb[k], p), p);
              on = sys.vanishes_at(pt.data());
            }
          } else {
            Vector va, vb;
            for (int k = 0; k < nv; ++k) {
              va.push_back(field.from_residue(ra[k]));
              vb.push_back(field.from_residue(rb[k]));
            }
            on = line_on_ci(y, ProjLine::through(va, vb));
          }
          if (on) found.emplace_back(ra, rb);
        }
      }
    }
  }
  for (const auto& [ra, rb] : found) {
    Vector va, vb;
    for (int k = 0; k < nv; ++k) {
      va.push_back(field.from_residue(ra[k]));
      vb.push_back(field.from_residue(rb[k]));
    }
    out.lines.push_back(ProjLine::through(va, vb));
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

PredonzanInvariants predonzan_invariants(int m, std::span<const int> type) {
  const long s = static_cast<long>(type.size());
  if (s < 1 || s > m - 2) throw DomainError("predonzan_invariants: need 1 <= s <= m - 2");
  long sum = 0;
  BigInt sections = 0;
  for (int d : type) {
    if (d < 1) throw DomainError("predonzan_invariants: degrees must be positive");
    sum += d;
    sections += choose(d + m, m);
  }
  PredonzanInvariants inv;
  const long excess = sum + s - 2L * (m - 1);
  inv.t = std::max(0L, excess);
  inv.theta = std::max(0L, -excess);
  inv.incidence_dim = BigInt(2L * (m - 1)) + sections - BigInt(sum + s);
  return inv;
}

Matrix line_frame(const ProjLine& line) {
  const Field& field = line.field();
  const std::size_t nv = line.ambient_size();
  std::vector<Vector> cols{line.first(), line.second()};
  for (std::size_t k = 0; k < nv; ++k) {
    if (k == line.first_pivot() || k == line.second_pivot()) continue;
    Vector e(nv, field.zero());
    e[k] = field.one();
    cols.push_back(std::move(e));
  }
  return Matrix::from_columns(field, cols);
}

namespace {

// Points of the line at which the Jacobian is tested: all of them over small F_p,
// otherwise [1:lambda] for a fixed range of lambda together with [0:1].
std::vector<Vector> sample_line_points(const ProjLine& line) {
  const Field& field = line.field();
  const std::uint64_t limit = 64;
  std::uint64_t count = field.is_prime() ? std::min<std::uint64_t>(field.characteristic(), limit) : limit;
  std::vector<Vector> pts;
  Vector a = line.first();
  Vector b = line.second();
  for (std::uint64_t l = 0; l < count; ++l) {
    Scalar lambda = field.from_int(static_cast<std::int64_t>(l));
    Vector v(a.size(), field.zero());
    for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k] + lambda * b[k];
    pts.push_back(std::move(v));
  }
  pts.push_back(b);
  return pts;
}

}  // namespace

SigmaSystem sigma_system(const CompleteIntersection& y, const ProjLine& line) {
  if (static_cast<std::size_t>(y.ambient() + 1) != line.ambient_size()) {
    throw DimensionError("sigma_system: line and complete intersection live in different spaces");
  }
  if (!line_on_ci(y, line)) throw DomainError("sigma_system: the line does not lie on the complete intersection");
  const Field& field = y.field();
  const int m = y.ambient();
  SigmaSystem sys;
  sys.transform = line_frame(line);
  std::size_t rows = 0;
  for (const auto& f : y.forms()) rows += static_cast<std::size_t>(f.degree()) + 1;
  const std::size_t cols = 2 * static_cast<std::size_t>(m - 1);
  sys.matrix = Matrix(field, rows, cols);
  std::size_t offset = 0;
  for (std::size_t h = 0; h < y.forms().size(); ++h) {
    MultiPoly g = substitute_linear(y.forms()[h], sys.transform);
    const int d = g.degree();
    for (const auto& t : g.terms()) {
      if (t.exp[0] + t.exp[1] != d - 1) continue;
      int var = 2;
      while (t.exp[var] == 0) ++var;
      sys.coefficients.push_back(SigmaCoefficient{static_cast<int>(h), var, t.exp[0], t.exp[1], t.coeff});
      const std::size_t col = 2 * static_cast<std::size_t>(var - 2);
      // a_{i,0} y0 raises mu0; a_{i,1} y1 raises mu1.
      sys.matrix(offset + static_cast<std::size_t>(t.exp[1]), col) += t.coeff;
      sys.matrix(offset + static_cast<std::size_t>(t.exp[1]) + 1, col + 1) += t.coeff;
    }
    offset += static_cast<std::size_t>(d) + 1;
  }
  sys.kernel_dim = cols - rank(sys.matrix);

  std::vector<std::vector<MultiPoly>> partials;
  for (const auto& f : y.forms()) {
    std::vector<MultiPoly> row;
    for (int k = 0; k <= m; ++k) row.push_back(partial_derivative(f, k));
    partials.push_back(std::move(row));
  }
  sys.smooth_along_line = true;
  for (const auto& pt : sample_line_points(line)) {
    Matrix jac(field, partials.size(), static_cast<std::size_t>(m) + 1);
    for (std::size_t h = 0; h < partials.size(); ++h) {
      for (int k = 0; k <= m; ++k) jac(h, static_cast<std::size_t>(k)) = partials[h][k].eval(pt);
    }
    if (rank(jac) < partials.size()) {
      sys.smooth_along_line = false;
      break;
    }
  }
  return sys;
}

CompleteIntersection random_ci(int m, std::span<const int> type, const Field& field, Rng& rng) {
  std::vector<MultiPoly> forms;
  for (int d : type) {
    MultiPoly f = random_poly(m + 1, d, field, rng);
    while (f.is_zero()) f = random_poly(m + 1, d, field, rng);
    forms.push_back(std::move(f));
  }
  return CompleteIntersection(field, m, std::move(forms));
}

CompleteIntersection random_ci_containing(const ProjLine& line, std::span<const int> type, Rng& rng) {
  const Field& field = line.field();
  if (!field.is_prime()) throw DomainError("random_ci_containing: sampling needs a prime field");
  const int nv = static_cast<int>(line.ambient_size());
  const Matrix back = inverse(line_frame(line));
  std::vector<MultiPoly> forms;
  for (int d : type) {
    field.require_degree(d);
    auto basis = monomials(nv, d);
    // In frame coordinates the forms through span(e0, e1) are those without pure y0, y1 terms.
    std::erase_if(basis, [&](const Exponents& e) { return e[0] + e[1] == d; });
    for (;;) {
      std::vector<Term> terms;
      for (const auto& e : basis) {
        Scalar c = rng.uniform(field);
        if (!c.is_zero()) terms.push_back(Term{e, c});
      }
      if (terms.empty()) continue;
      forms.push_back(substitute_linear(MultiPoly::from_terms(field, nv, d, std::move(terms)), back));
      break;
    }
  }
  return CompleteIntersection(field, nv - 1, std::move(forms));
}

FanoCensus fano_census(int m, std::span<const int> type, const Field& field, int trials, std::uint64_t seed,
                       std::uint64_t budget) {
  if (!field.is_prime()) throw DomainError("fano_census: prime fields only");
  FanoCensus c;
  c.m = m;
  c.type.assign(type.begin(), type.end());
  c.p = field.characteristic();
  c.seed = seed;
  c.trials = trials;
  const Rng root(seed);
  std::uint64_t total_lines = 0;
  for (int k = 0; k < trials; ++k) {
    Rng rng = root.split(static_cast<std::uint64_t>(k));
    CompleteIntersection y = random_ci(m, type, field, rng);
    LineEnumeration e = enumerate_lines(y, budget);
    c.budget_used += e.work;
    c.line_count_histogram[e.lines.size()]++;
    total_lines += e.lines.size();
    if (!e.lines.empty()) c.with_line++;
    for (const auto& l : e.lines) c.kernel_dim_histogram[sigma_system(y, l).kernel_dim]++;
  }
  if (trials > 0) {
    c.fraction_with_line = static_cast<double>(c.with_line) / trials;
    c.avg_line_count = static_cast<double>(total_lines) / trials;
  }
  return c;
}

SigmaCensus sigma_census(int m, std::span<const int> type, const Field& field, int trials, std::uint64_t seed) {
  Vector e0(static_cast<std::size_t>(m) + 1, field.zero());
  Vector e1 = e0;
  e0[0] = field.one();
  e1[1] = field.one();
  const ProjLine line = ProjLine::through(e0, e1);
  const Rng root(seed);
  SigmaCensus c;
  c.trials = trials;
  for (int k = 0; k < trials; ++k) {
    Rng rng = root.split(static_cast<std::uint64_t>(k));
    SigmaSystem s = sigma_system(random_ci_containing(line, type, rng), line);
    c.kernel_dim_histogram[s.kernel_dim]++;
    if (s.smooth_along_line) c.smooth++;
  }
  return c;
}

}  // namespace gonality
