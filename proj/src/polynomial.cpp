#include "vinberg/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

void trim(Polynomial& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

int euler_phi(int k) {
  int r = k;
  for (int q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    while (k % q == 0) k /= q;
    r -= r / q;
  }
  if (k > 1) r -= r / k;
  return r;
}

}  // namespace

int degree(const Polynomial& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

std::string to_string(const Polynomial& f, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(f); i >= 0; --i) {
    const Integer& c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer a = abs(c);
    if (!first || c < 0) out << (c < 0 ? "-" : "+");
    if (a != 1 || i == 0) out << a.get_str();
    if (i >= 1) out << var;
    if (i > 1) out << "^" << i;
    first = false;
  }
  return first ? "0" : out.str();
}

Polynomial characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  RatMatrix ar = to_rational(a);
  RatMatrix m(n, n);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    RatMatrix next = ar * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    RatMatrix am = ar * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  Polynomial out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) throw Error(ErrorCode::InternalConsistency, "non-integral characteristic polynomial");
    out[i] = c[i].get_num();
  }
  return out;
}

Polynomial cyclotomic(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidForm, "cyclotomic index must be positive");
  Polynomial f(static_cast<std::size_t>(k) + 1);
  f[0] = -1;
  f[static_cast<std::size_t>(k)] = 1;
  for (int d = 1; d < k; ++d)
    if (k % d == 0) f = *divide_exact(f, cyclotomic(d));
  return f;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  const int df = degree(f), dg = degree(g);
  if (dg < 0 || g[static_cast<std::size_t>(dg)] != 1) throw Error(ErrorCode::InternalConsistency, "divisor must be monic");
  if (df < dg) {
    if (df < 0) return Polynomial{0};
    return std::nullopt;
  }
  Polynomial r(f.begin(), f.begin() + df + 1);
  Polynomial q(static_cast<std::size_t>(df - dg) + 1);
  for (int i = df - dg; i >= 0; --i) {
    Integer lead = r[static_cast<std::size_t>(i + dg)];
    q[static_cast<std::size_t>(i)] = lead;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i + j)] -= lead * g[static_cast<std::size_t>(j)];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return q;
}

IntMatrix evaluate(const Polynomial& f, const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix acc(n, n);
  for (int i = degree(f); i >= 0; --i) {
    acc = acc * a;
    for (std::size_t j = 0; j < n; ++j) acc(j, j) += f[static_cast<std::size_t>(i)];
  }
  return acc;
}

OrderAnalysis analyze_order(const IntMatrix& a) {
  OrderAnalysis out;
  out.charpoly = characteristic_polynomial(a);
  Polynomial rest = out.charpoly;
  const int n = degree(rest);
  Polynomial radical{1};
  // phi(k) >= sqrt(k / 2), so only k <= 2 n^2 can contribute.
  for (int k = 1; k <= 2 * n * n + 2 && degree(rest) > 0; ++k) {
    if (euler_phi(k) > degree(rest)) continue;
    Polynomial phi = cyclotomic(k);
    bool used = false;
    while (auto q = divide_exact(rest, phi)) {
      rest = std::move(*q);
      out.cyclotomic_factors.push_back(k);
      used = true;
    }
    if (used) radical = multiply(radical, phi);
  }
  trim(rest);
  out.residual = rest;
  if (degree(rest) > 0) {
    out.finite = false;
    out.order = 0;
    return out;
  }
  IntMatrix z = evaluate(radical, a);
  out.diagonalizable = z == IntMatrix(a.rows(), a.cols());
  out.finite = out.diagonalizable;
  out.order = 0;
  if (out.finite) {
    long ord = 1;
    for (int k : out.cyclotomic_factors) ord = std::lcm(ord, static_cast<long>(k));
    out.order = ord;
  }
  return out;
}

}  // namespace vinberg
