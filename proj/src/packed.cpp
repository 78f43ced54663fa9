#include "gonality/packed.hpp"

#include "gonality/errors.hpp"

#include <algorithm>

namespace gonality {

PackedSystem::PackedSystem(std::span<const MultiPoly> forms) {
  if (forms.empty()) return;
  const Field& field = forms.front().field();
  if (!field.is_prime()) throw DomainError("PackedSystem: prime fields only");
  p_ = field.characteristic();
  nvars_ = forms.front().nvars();
  for (const auto& f : forms) {
    if (f.field() != field) throw FieldMismatch("PackedSystem: forms over different fields");
    if (f.nvars() != nvars_) throw DimensionError("PackedSystem: forms in different variable counts");
    if (f.degree() > 255) throw DimensionError("PackedSystem: degree too large");
    Form packed{f.degree(), {}, {}};
    for (const auto& t : f.terms()) {
      for (int e : t.exp) packed.exps.push_back(static_cast<std::uint8_t>(e));
      packed.coeffs.push_back(t.coeff.residue());
    }
    max_degree_ = std::max(max_degree_, f.degree());
    forms_.push_back(std::move(packed));
  }
  powers_.assign(static_cast<std::size_t>(nvars_) * (max_degree_ + 1), 1);
}

void PackedSystem::load_powers(const std::uint64_t* x) {
  const int stride = max_degree_ + 1;
  for (int v = 0; v < nvars_; ++v) {
    std::uint64_t* row = &powers_[static_cast<std::size_t>(v) * stride];
    row[0] = 1;
    for (int e = 1; e < stride; ++e) row[e] = modp::mul(row[e - 1], x[v], p_);
  }
}

std::uint64_t PackedSystem::eval_loaded(const Form& f) const {
  const int stride = max_degree_ + 1;
  std::uint64_t acc = 0;
  const std::uint8_t* e = f.exps.data();
  for (std::uint64_t c : f.coeffs) {
    std::uint64_t term = c;
    for (int v = 0; v < nvars_; ++v, ++e) {
      if (*e) term = modp::mul(term, powers_[static_cast<std::size_t>(v) * stride + *e], p_);
    }
    acc = modp::add(acc, term, p_);
  }
  return acc;
}

std::uint64_t PackedSystem::eval(std::size_t i, const std::uint64_t* x) {
  load_powers(x);
  return eval_loaded(forms_[i]);
}

bool PackedSystem::vanishes_at(const std::uint64_t* x) {
  if (forms_.empty()) return true;
  load_powers(x);
  for (const auto& f : forms_) {
    if (eval_loaded(f) != 0) return false;
  }
  return true;
}

void for_each_point(int nvars, std::uint64_t p, const std::function<void(const std::uint64_t*)>& visit) {
  std::vector<std::uint64_t> x(static_cast<std::size_t>(nvars), 0);
  for (int lead = 0; lead < nvars; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    // Odometer over the coordinates after the leading one.
    for (;;) {
      visit(x.data());
      int k = nvars - 1;
      while (k > lead && x[k] == p - 1) x[k--] = 0;
      if (k == lead) break;
      ++x[k];
    }
  }
}

std::uint64_t count_points(std::span<const MultiPoly> forms) {
  if (forms.empty()) throw DomainError("count_points: need at least one form");
  PackedSystem sys(forms);
  std::uint64_t count = 0;
  for_each_point(sys.nvars(), sys.modulus(), [&](const std::uint64_t* x) {
    if (sys.vanishes_at(x)) ++count;
  });
  return count;
}

}  // namespace gonality
