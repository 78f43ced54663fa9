#include "gonality/multipoly.hpp"

#include "gonality/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace gonality {

namespace {

using TermMap = std::map<Exponents, Scalar, std::greater<>>;

std::vector<Term> from_map(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
  }
  return out;
}

// Pascal's triangle up to row n, built by addition so it is exact in any characteristic.
std::vector<std::vector<Scalar>> pascal(const Field& field, int n) {
  std::vector<std::vector<Scalar>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, field.one());
    for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

}  // namespace

MultiPoly::MultiPoly(Field field, int nvars, int degree) : field_(field), nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw DimensionError("MultiPoly: need at least one variable");
  if (degree < 0) throw DimensionError("MultiPoly: negative degree");
  field_.require_degree(degree);
}

MultiPoly MultiPoly::from_terms(Field field, int nvars, int degree, std::vector<Term> terms) {
  MultiPoly p(field, nvars, degree);
  TermMap acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != nvars) throw DimensionError("MultiPoly: exponent vector has wrong length");
    int sum = 0;
    for (int e : t.exp) {
      if (e < 0) throw DimensionError("MultiPoly: negative exponent");
      sum += e;
    }
    if (sum != degree) throw DimensionError("MultiPoly: term is not of degree " + std::to_string(degree));
    if (t.coeff.field() != field) throw FieldMismatch("MultiPoly: coefficient in wrong field");
    auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  p.terms_ = from_map(std::move(acc));
  return p;
}

MultiPoly MultiPoly::monomial(Field field, Exponents exp, Scalar coeff) {
  int nvars = static_cast<int>(exp.size());
  int degree = 0;
  for (int e : exp) degree += e;
  std::vector<Term> t;
  t.push_back(Term{std::move(exp), std::move(coeff)});
  return from_terms(field, nvars, degree, std::move(t));
}

MultiPoly MultiPoly::variable(Field field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("MultiPoly::variable: index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(field, std::move(e), field.one());
}

MultiPoly MultiPoly::linear(Field field, std::span<const Scalar> coeffs) {
  int nvars = static_cast<int>(coeffs.size());
  std::vector<Term> terms;
  for (int i = 0; i < nvars; ++i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    terms.push_back(Term{std::move(e), coeffs[i]});
  }
  return from_terms(field, nvars, 1, std::move(terms));
}

Scalar MultiPoly::coefficient(const Exponents& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponents& e) { return t.exp > e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return field_.zero();
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DimensionError("MultiPoly::eval: point has wrong length");
  // Power tables keep evaluation at O(terms * nvars) multiplications.
  std::vector<std::vector<Scalar>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (point[i].field() != field_) throw FieldMismatch("MultiPoly::eval: point in wrong field");
    powers[i].reserve(degree_ + 1);
    powers[i].push_back(field_.one());
    for (int e = 1; e <= degree_; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar sum = field_.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < nvars_ && !v.is_zero(); ++i) {
      if (t.exp[i]) v *= powers[i][t.exp[i]];
    }
    sum += v;
  }
  return sum;
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* op) const {
  if (field_ != o.field_) throw FieldMismatch(std::string("MultiPoly ") + op + ": fields differ");
  if (nvars_ != o.nvars_) throw DimensionError(std::string("MultiPoly ") + op + ": variable counts differ");
  if (degree_ != o.degree_) throw DimensionError(std::string("MultiPoly ") + op + ": degrees differ");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o, "+");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp > b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp > a->exp) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back(Term{std::move(a->exp), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(field_, nvars_, degree_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("MultiPoly *: fields differ");
  if (a.nvars_ != b.nvars_) throw DimensionError("MultiPoly *: variable counts differ");
  MultiPoly out(a.field_, a.nvars_, a.degree_ + b.degree_);
  TermMap acc;
  Exponents e(a.nvars_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ta.exp[i] + tb.exp[i];
      Scalar c = ta.coeff * tb.coeff;
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  out.terms_ = from_map(std::move(acc));
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.degree_ != b.degree_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string MultiPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    bool has_var = std::any_of(t.exp.begin(), t.exp.end(), [](int e) { return e > 0; });
    bool unit = c == "1";
    if (!unit || !has_var) os << c;
    bool star = !unit || !has_var;
    for (int i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (star) os << "*";
      os << var << i;
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      star = true;
    }
  }
  return os.str();
}

std::size_t monomial_count(int nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1), built incrementally to stay exact.
  unsigned __int128 c = 1;
  for (int i = 1; i < nvars; ++i) c = c * static_cast<unsigned>(degree + i) / static_cast<unsigned>(i);
  return static_cast<std::size_t>(c);
}

std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
  };
  if (nvars > 0) rec(0, degree);
  return out;
}

Scalar binomial(const Field& field, int n, int k) {
  if (k < 0 || k > n) return field.zero();
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return field.from_bigint(c);
}

namespace {

struct Substituter {
  const MultiPoly& f;
  std::vector<MultiPoly> images;               // image of y_j, degree 1 in k variables
  std::vector<std::vector<MultiPoly>> powers;  // powers[j][e] = images[j]^e, filled lazily
  int k;

  const MultiPoly& power(int j, int e) {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(MultiPoly::from_terms(f.field(), k, 0, {Term{Exponents(k, 0), f.field().one()}}));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  }

  // Horner evaluation over variable `var` for terms [first, last), which share all exponents
  // of variables before `var` and have `left` degree remaining.
  MultiPoly run(std::span<const Term> range, int var, int left) {
    const Field& field = f.field();
    if (var == f.nvars()) {
      return MultiPoly::from_terms(field, k, 0, {Term{Exponents(k, 0), range.front().coeff}});
    }
    MultiPoly acc(field, k, 0);
    bool started = false;
    int prev_e = 0;
    std::size_t i = 0;
    while (i < range.size()) {
      int e = range[i].exp[var];
      std::size_t j = i;
      while (j < range.size() && range[j].exp[var] == e) ++j;
      MultiPoly inner = run(range.subspan(i, j - i), var + 1, left - e);
      if (!started) {
        acc = std::move(inner);
        started = true;
      } else {
        acc = acc * power(var, prev_e - e);
        acc += inner;
      }
      prev_e = e;
      i = j;
    }
    if (!started) return MultiPoly(field, k, left);
    if (prev_e > 0) acc = acc * power(var, prev_e);
    return acc;
  }
};

}  // namespace

MultiPoly partial_derivative(const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw DimensionError("partial_derivative: variable index out of range");
  if (f.degree() < 1) throw DimensionError("partial_derivative: constant form");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.exp[var] == 0) continue;
    Exponents e = t.exp;
    --e[var];
    terms.push_back(Term{std::move(e), t.coeff * f.field().from_int(t.exp[var])});
  }
  return MultiPoly::from_terms(f.field(), f.nvars(), f.degree() - 1, std::move(terms));
}

MultiPoly substitute_linear(const MultiPoly& f, const Matrix& m) {
  if (static_cast<int>(m.rows()) != f.nvars()) throw DimensionError("substitute_linear: matrix rows != nvars");
  if (m.cols() < 1) throw DimensionError("substitute_linear: need at least one new variable");
  if (m.field() != f.field()) throw FieldMismatch("substitute_linear: fields differ");
  const int k = static_cast<int>(m.cols());
  if (f.is_zero()) return MultiPoly(f.field(), k, f.degree());
  Substituter s{f, {}, std::vector<std::vector<MultiPoly>>(f.nvars()), k};
  for (int j = 0; j < f.nvars(); ++j) {
    Vector row = m.row(j);
    s.images.push_back(MultiPoly::linear(f.field(), row));
  }
  return s.run(f.terms(), 0, f.degree());
}

std::vector<MultiPoly> taylor_coefficients(const MultiPoly& f, std::span<const Scalar> base, int max_order) {
  const int n = f.nvars();
  const Field& field = f.field();
  if (static_cast<int>(base.size()) != n) throw DimensionError("taylor_coefficients: base point has wrong length");
  max_order = std::min(max_order, f.degree());
  auto binom = pascal(field, f.degree());
  std::vector<std::vector<Scalar>> base_pow(n);
  for (int i = 0; i < n; ++i) {
    base_pow[i].push_back(field.one());
    for (int e = 1; e <= f.degree(); ++e) base_pow[i].push_back(base_pow[i].back() * base[i]);
  }
  std::vector<TermMap> acc(max_order + 1);
  Exponents j(n, 0);
  for (const auto& t : f.terms()) {
    // Enumerate J <= I with |J| <= max_order; weight prod_i C(I_i, J_i) base_i^(I_i - J_i).
    std::function<void(int, int, Scalar)> rec = [&](int var, int used, Scalar w) {
      if (w.is_zero()) return;
      if (var == n) {
        auto [it, inserted] = acc[used].try_emplace(j, w);
        if (!inserted) it->second += w;
        return;
      }
      const int ii = t.exp[var];
      const int hi = std::min(ii, max_order - used);
      for (int jj = 0; jj <= hi; ++jj) {
        j[var] = jj;
        rec(var + 1, used + jj, w * binom[ii][jj] * base_pow[var][ii - jj]);
      }
      j[var] = 0;
    };
    rec(0, 0, t.coeff);
  }
  std::vector<MultiPoly> out;
  for (int k = 0; k <= max_order; ++k) {
    std::vector<Term> terms = from_map(std::move(acc[k]));
    out.push_back(MultiPoly::from_terms(field, n, k, std::move(terms)));
  }
  return out;
}

}  // namespace gonality
