#include "vinberg/arith.hpp"

#include <string>

#include "vinberg/error.hpp"

namespace vinberg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidForm: return "invalid_form";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::ZeroVector: return "zero_vector";
    case ErrorCode::NotAChamber: return "not_a_chamber";
    case ErrorCode::InvalidAngle: return "invalid_angle";
    case ErrorCode::NotAffine: return "not_affine";
    case ErrorCode::NotIsotropic: return "not_isotropic";
    case ErrorCode::NotIntegral: return "not_integral";
    case ErrorCode::GramMismatch: return "gram_mismatch";
    case ErrorCode::SingularBasis: return "singular_basis";
    case ErrorCode::NotACorner: return "not_a_corner";
    case ErrorCode::PolygonNotClosed: return "polygon_not_closed";
    case ErrorCode::MalformedCertificate: return "malformed_certificate";
    case ErrorCode::UnknownFormat: return "unknown_format";
    case ErrorCode::InvalidBudget: return "invalid_budget";
    case ErrorCode::InternalConsistency: return "internal_consistency";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

Integer content(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer isqrt(const Integer& a) {
  if (a < 0) throw Error(ErrorCode::InvalidForm, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (divides(2, n)) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (divides(d, n)) return false;
  }
  return true;
}

long to_long(const Integer& a) {
  if (!a.fits_slong_p()) throw Error(ErrorCode::NotIntegral, "integer does not fit in a machine word: " + a.get_str());
  return a.get_si();
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    Rational q;
    if (slash == std::string::npos) {
      q = Rational(Integer(text));
    } else {
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
      q = Rational(num, den);
    }
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + text + "'");
  }
}

std::vector<Integer> primitive_integer_multiple(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x.get_num() * (den / x.get_den())));
  Integer g = content(out);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace vinberg
