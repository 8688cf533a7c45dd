#include "vinberg/json.hpp"

#include "vinberg/error.hpp"

namespace vinberg {

Json integer_json(const Integer& a) {
  if (a.fits_slong_p()) return Json(static_cast<long long>(a.get_si()));
  return Json(a.get_str());
}

Integer integer_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::MalformedCertificate, "expected an integer, got " + j.dump());
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      throw Error(ErrorCode::MalformedCertificate, "expected a rational, got " + j.dump());
    }
  }
  return Rational(integer_from_json(j));
}

Json vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

Json vector_json(const LatticeVector& v) { return vector_json(v.coeffs()); }

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedCertificate, "expected an integer array, got " + j.dump());
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return LatticeVector(std::move(c));
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::MalformedCertificate, "expected a matrix");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r).coeffs());
  return IntMatrix::from_rows(rows, rows.front().size());
}

Json form_json(const QuadraticForm& form) {
  return Json{{"p", integer_json(form.p())}, {"n", form.n()}};
}

QuadraticForm form_from_json(const Json& j) {
  try {
    return QuadraticForm(integer_from_json(require(j, "p")), require(j, "n").get<int>());
  } catch (const Json::exception&) {
    throw Error(ErrorCode::MalformedCertificate, "form: malformed");
  }
}

const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw Error(ErrorCode::MalformedCertificate, std::string("missing field '") + field + "'");
  return j.at(field);
}

}  // namespace vinberg
