#include "gonality/binary_form.hpp"

#include "gonality/errors.hpp"
#include "gonality/unipoly.hpp"

#include <algorithm>

namespace gonality {

BinaryForm::BinaryForm(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionError("BinaryForm: need at least one coefficient");
  for (const auto& c : c_) {
    if (c.field() != field_) throw FieldMismatch("BinaryForm: coefficient in wrong field");
  }
}

BinaryForm BinaryForm::zero(Field field, int degree) {
  if (degree < 0) throw DimensionError("BinaryForm: negative degree");
  return BinaryForm(field, std::vector<Scalar>(static_cast<std::size_t>(degree) + 1, field.zero()));
}

BinaryForm BinaryForm::from_poly(const MultiPoly& f) {
  if (f.nvars() != 2) throw DimensionError("BinaryForm::from_poly: need two variables");
  BinaryForm out = zero(f.field(), f.degree());
  for (const auto& t : f.terms()) out.c_[t.exp[1]] = t.coeff;
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar BinaryForm::eval(const Scalar& s, const Scalar& t) const {
  const int d = degree();
  std::vector<Scalar> tp(static_cast<std::size_t>(d) + 1, field_.one());
  for (int i = 1; i <= d; ++i) tp[i] = tp[i - 1] * t;
  Scalar out = field_.zero();
  Scalar spow = field_.one();
  for (int i = d; i >= 0; --i) {
    out += c_[i] * spow * tp[i];
    spow *= s;
  }
  return out;
}

int BinaryForm::multiplicity_at(const ProjPoint& param) const {
  if (param.size() != 2) throw DimensionError("BinaryForm::multiplicity_at: need a point of P^1");
  if (param.field() != field_) throw FieldMismatch("BinaryForm::multiplicity_at: point in wrong field");
  if (is_zero()) return kInfiniteContact;
  const int d = degree();
  if (param[0].is_zero()) {
    // [0:1]: the order of vanishing in s.
    int top = d;
    while (c_[top].is_zero()) --top;
    return d - top;
  }
  // param = [1:a]. With t = a s + v the coefficient of s^(d-j) v^j is sum_{i>=j} c_i C(i,j) a^(i-j).
  const Scalar& a = param[1];
  std::vector<Scalar> apow(static_cast<std::size_t>(d) + 1, field_.one());
  for (int i = 1; i <= d; ++i) apow[i] = apow[i - 1] * a;
  // Pascal rows by addition keep the weights exact in characteristic p.
  std::vector<std::vector<Scalar>> pascal(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    pascal[i].assign(static_cast<std::size_t>(i) + 1, field_.one());
    for (int k = 1; k < i; ++k) pascal[i][k] = pascal[i - 1][k - 1] + pascal[i - 1][k];
  }
  for (int j = 0; j <= d; ++j) {
    Scalar acc = field_.zero();
    for (int i = j; i <= d; ++i) {
      if (!c_[i].is_zero()) acc += c_[i] * pascal[i][j] * apow[i - j];
    }
    if (!acc.is_zero()) return j;
  }
  return kInfiniteContact;  // unreachable for a nonzero form
}

std::vector<std::pair<ProjPoint, int>> BinaryForm::rational_roots() const {
  if (!field_.is_prime()) throw DomainError("BinaryForm::rational_roots: prime fields only");
  if (is_zero()) throw DomainError("BinaryForm::rational_roots: zero form");
  const std::uint64_t p = field_.characteristic();
  const int d = degree();
  // Dehomogenize at s = 1: g(t) = sum c_i t^i; roots [1:r]. [0:1] is a root iff c_d = 0.
  std::vector<std::uint64_t> g;
  for (const auto& c : c_) g.push_back(c.residue());
  UniPoly u(p, std::move(g));
  std::vector<std::pair<ProjPoint, int>> out;
  for (auto [r, mult] : roots(u)) {
    out.emplace_back(ProjPoint(field_, {field_.one(), field_.from_residue(r)}), mult);
  }
  if (u.degree() < d) out.emplace_back(ProjPoint(field_, {field_.zero(), field_.one()}), d - u.degree());
  return out;
}

MultiPoly BinaryForm::to_poly() const {
  std::vector<Term> terms;
  const int d = degree();
  for (int i = 0; i <= d; ++i) {
    if (!c_[i].is_zero()) terms.push_back(Term{{d - i, i}, c_[i]});
  }
  return MultiPoly::from_terms(field_, 2, d, std::move(terms));
}

}  // namespace gonality
