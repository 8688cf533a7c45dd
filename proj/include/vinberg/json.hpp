#pragma once

#include <json.hpp>

#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers within int64 range become JSON numbers, larger ones strings.
Json integer_json(const Integer& a);
Integer integer_from_json(const Json& j);

Json rational_json(const Rational& q);  // "a/b" string, or number when integral
Rational rational_from_json(const Json& j);

Json vector_json(const LatticeVector& v);
Json vector_json(const std::vector<Integer>& v);
LatticeVector vector_from_json(const Json& j);

Json matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json form_json(const QuadraticForm& form);
QuadraticForm form_from_json(const Json& j);

/// Member access throwing Error(MalformedCertificate) naming the field.
const Json& require(const Json& j, const char* field);

}  // namespace vinberg
