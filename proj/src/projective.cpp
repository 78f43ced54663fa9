#include "gonality/projective.hpp"

#include "gonality/errors.hpp"

#include <algorithm>

namespace gonality {

ProjPoint::ProjPoint(Field field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == coords_.end()) throw DomainError("ProjPoint: all coordinates are zero");
  for (const auto& c : coords_) {
    if (c.field() != field_) throw FieldMismatch("ProjPoint: coordinate in wrong field");
  }
  if (!lead->is_one()) {
    Scalar inv = lead->inverse();
    for (auto& c : coords_) c *= inv;
  }
}

ProjPoint ProjPoint::from_ints(Field field, std::span<const std::int64_t> coords) {
  std::vector<Scalar> v;
  v.reserve(coords.size());
  for (auto c : coords) v.push_back(field.from_int(c));
  return ProjPoint(field, std::move(v));
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += coords_[i].to_string();
  }
  return s + "]";
}

ProjLine ProjLine::from_span(const Matrix& span) {
  if (span.rows() != 2) throw DimensionError("ProjLine: span must have two rows");
  RowEchelon ech = row_reduce(span);
  if (ech.pivots.size() != 2) throw DomainError("ProjLine: spanning vectors are dependent");
  ProjLine l;
  l.span_ = std::move(ech.reduced);
  l.pivots_[0] = ech.pivots[0];
  l.pivots_[1] = ech.pivots[1];
  return l;
}

ProjLine ProjLine::through(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size() || a.empty()) throw DimensionError("ProjLine: spanning vectors differ in length");
  const Field& f = a.front().field();
  return from_span(Matrix::from_rows(f, {Vector(a.begin(), a.end()), Vector(b.begin(), b.end())}));
}

ProjLine ProjLine::through(const ProjPoint& a, const ProjPoint& b) { return through(a.coords(), b.coords()); }

bool ProjLine::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_size()) throw DimensionError("ProjLine::contains: point has wrong length");
  // In echelon form, v is in the row span iff v = v[p0] * row0 + v[p1] * row1.
  const Scalar& s = v[pivots_[0]];
  const Scalar& t = v[pivots_[1]];
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (s * span_(0, c) + t * span_(1, c) != v[c]) return false;
  }
  return true;
}

ProjPoint ProjLine::parameter_of(const ProjPoint& p) const {
  if (!contains(p)) throw DomainError("ProjLine::parameter_of: point is not on the line");
  return ProjPoint(field(), {p[pivots_[0]], p[pivots_[1]]});
}

bool operator<(const ProjLine& a, const ProjLine& b) {
  const std::size_t n = a.ambient_size();
  if (n != b.ambient_size()) return n < b.ambient_size();
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a.span_(r, c) != b.span_(r, c)) return a.span_(r, c) < b.span_(r, c);
    }
  }
  return false;
}

std::string ProjLine::to_string() const {
  std::string s = "<";
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) s += ", ";
    s += ProjPoint(field(), span_.row(r)).to_string();
  }
  return s + ">";
}

Vector preimage(const Matrix& t, std::span<const Scalar> v) {
  auto z = solve(t, v);
  if (!z) throw DomainError("preimage: vector is not in the image of the transform");
  return *z;
}

}  // namespace gonality
