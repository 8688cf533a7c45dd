#include "vinberg/lattice.hpp"

#include <cctype>

#include "vinberg/error.hpp"

namespace vinberg {

QuadraticForm::QuadraticForm(const Integer& p, int n) : p_(p), n_(n) {
  if (p < 5 || !is_prime(p)) throw Error(ErrorCode::InvalidForm, "p must be a prime >= 5, got " + p.get_str());
  if (n < 2) throw Error(ErrorCode::InvalidForm, "n must be >= 2, got " + std::to_string(n));
}

IntMatrix QuadraticForm::matrix() const {
  IntMatrix f = IntMatrix::identity(dimension());
  f(0, 0) = -p_;
  return f;
}

LatticeVector::LatticeVector(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

LatticeVector LatticeVector::basis(std::size_t dim, std::size_t i) {
  LatticeVector v(dim);
  v.coeffs_.at(i) = 1;
  return v;
}

LatticeVector LatticeVector::parse(const std::string& text, std::size_t dim) {
  LatticeVector v(dim);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::Parse, "empty vector literal");
  if (s == "0") return v;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::Parse, "bad vector literal '" + text + "': " + why); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coeff = start == i ? Integer(1) : Integer(s.substr(start, i - start));
    if (i >= s.size() || s[i] != 'v') fail("expected 'v'");
    ++i;
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("missing index after 'v'");
    std::size_t index = std::stoul(s.substr(start, i - start));
    if (index >= dim) fail("index v" + std::to_string(index) + " out of range");
    v.coeffs_[index] += sign * coeff;
  }
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Integer LatticeVector::content() const { return vinberg::content(coeffs_); }

LatticeVector LatticeVector::primitive_part() const {
  Integer g = content();
  if (g <= 1) return *this;
  LatticeVector out(*this);
  for (auto& c : out.coeffs_) c /= g;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sum of different lengths");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector difference of different lengths");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string LatticeVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Integer a = abs(c);
    if (a != 1) out += a.get_str();
    out += 'v' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Integer inner_product(const LatticeVector& u, const LatticeVector& v, const QuadraticForm& form) {
  if (u.size() != form.dimension() || v.size() != form.dimension())
    throw Error(ErrorCode::DimensionMismatch, "inner product expects vectors of length " +
                                                  std::to_string(form.dimension()));
  Integer s = -form.p() * u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

bool is_primitive(const LatticeVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "primitivity of the zero vector");
  return v.content() == 1;
}

std::vector<Integer> admissible_root_norms(const QuadraticForm& form) {
  // m | 2 gcd(p k0, k1, ..., kn), and for primitive r that gcd divides p.
  std::vector<Integer> out;
  const Integer twice = 2 * form.p();
  for (Integer m = 1; m <= twice; ++m)
    if (divides(m, twice)) out.push_back(m);
  return out;
}

std::string to_string(RootDefect d) {
  switch (d) {
    case RootDefect::None: return "none";
    case RootDefect::Zero: return "zero";
    case RootDefect::NotPrimitive: return "not_primitive";
    case RootDefect::NonPositiveNorm: return "non_positive_norm";
    case RootDefect::InadmissibleNorm: return "inadmissible_norm";
    case RootDefect::Divisibility: return "divisibility";
  }
  return "unknown";
}

RootDefect root_defect(const LatticeVector& v, const QuadraticForm& form) {
  if (v.size() != form.dimension())
    throw Error(ErrorCode::DimensionMismatch, "root test expects a vector of length " + std::to_string(form.dimension()));
  if (v.is_zero()) return RootDefect::Zero;
  const Integer m = norm(v, form);
  if (m <= 0) return RootDefect::NonPositiveNorm;
  if (!divides(m, 2 * form.p())) return RootDefect::InadmissibleNorm;
  if (v.content() != 1) return RootDefect::NotPrimitive;
  if (!divides(m, 2 * form.p() * v[0])) return RootDefect::Divisibility;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!divides(m, 2 * v[i])) return RootDefect::Divisibility;
  return RootDefect::None;
}

bool is_root(const LatticeVector& v, const QuadraticForm& form) {
  if (v.size() != form.dimension()) throw Error(ErrorCode::DimensionMismatch, "root test dimension mismatch");
  return root_defect(v, form) == RootDefect::None;
}

bool satisfies_high_norm_pattern(const LatticeVector& v, const QuadraticForm& form) {
  if (divides(form.p(), v[0])) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!divides(form.p(), v[i])) return false;
  return true;
}

Root::Root(LatticeVector v, const QuadraticForm& form) : vector_(std::move(v)) {
  RootDefect d = root_defect(vector_, form);
  if (d != RootDefect::None)
    throw Error(ErrorCode::NotIntegral, vector_.to_string() + " is not a root (" + to_string(d) + ")");
  norm_ = vinberg::norm(vector_, form);
}

std::vector<Root> initial_roots(const QuadraticForm& form) {
  const std::size_t dim = form.dimension();
  std::vector<Root> roots;
  for (std::size_t i = 1; i + 1 < dim; ++i)
    roots.emplace_back(LatticeVector::basis(dim, i + 1) - LatticeVector::basis(dim, i), form);
  roots.emplace_back(-LatticeVector::basis(dim, dim - 1), form);
  return roots;
}

LatticeVector reflect(const LatticeVector& x, const Root& r, const QuadraticForm& form) {
  Integer num = 2 * inner_product(x, r.vector(), form);
  if (!divides(r.norm(), num)) throw Error(ErrorCode::NotIntegral, "reflection image leaves the lattice");
  return x - Integer(num / r.norm()) * r.vector();
}

IntMatrix gram_matrix(const std::vector<LatticeVector>& vectors, const QuadraticForm& form) {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) g(i, j) = g(j, i) = inner_product(vectors[i], vectors[j], form);
  return g;
}

std::vector<LatticeVector> vectors_of(const std::vector<Root>& roots) {
  std::vector<LatticeVector> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.vector());
  return out;
}

IntMatrix gram_matrix(const std::vector<Root>& roots, const QuadraticForm& form) {
  return gram_matrix(vectors_of(roots), form);
}

}  // namespace vinberg
