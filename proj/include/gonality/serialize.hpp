#pragma once

#include "gonality/bounds.hpp"
#include "gonality/certificate.hpp"
#include "gonality/cone_lines.hpp"
#include "gonality/fano_lines.hpp"
#include "gonality/tangent_cone.hpp"

#include "json.hpp"

#include <string>

namespace gonality {

using Json = nlohmann::ordered_json;

/// {"prime": p} (plus "strict": false under the relaxed guard) or "rational".
Json to_json(const Field& f);
Field field_from_json(const Json& j);

/// {"nvars", "degree", "field", "terms": [{"e": [...], "c": "..."}]}; coefficients are
/// decimal residues over F_p and reduced "a/b" over the rationals.
Json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j);

/// FNV-1a of the compact polynomial JSON, as 16 hex digits.
std::string poly_hash(const MultiPoly& f);

/// Points, vectors and matrices are arrays of coefficient strings; the field comes from
/// the surrounding document.
Json to_json(std::span<const Scalar> v);
Vector vector_from_json(const Json& j, const Field& field);
Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const Field& field);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field);
Json to_json(const ProjLine& l);  // the two canonical rows
ProjLine line_from_json(const Json& j, const Field& field);

/// The order-h cone with a provenance block (F hash, x, h, transform of normal_form when
/// the point is smooth).
Json cone_to_json(const MultiPoly& f, const ConeSystem& cone);
Json section_to_json(const MultiPoly& f, const ProjPoint& x, const LambdaSection& s);

Json to_json(const MultiPoly& f, const ConeLineWitness& w);
ConeLineWitness witness_from_json(const Json& j, const Field& field);

/// All certificate fields, stored as given so that a tampered file still loads.
Json to_json(const GonalityCertificate& c);
GonalityCertificate certificate_from_json(const Json& j);

Json to_json(const CompleteIntersection& y);
CompleteIntersection ci_from_json(const Json& j);

Json to_json(const SigmaSystem& s);
Json to_json(const FanoCensus& c);
Json to_json(const WitnessCensus& c);
Json to_json(const DeltaCensus& c);
Json to_json(const ZetaReport& z);
Json to_json(const BoundReport& b);
Json to_json(const FiberReport& r);

}  // namespace gonality
