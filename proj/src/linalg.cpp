#include "vinberg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "vinberg/error.hpp"

namespace vinberg {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> apply(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) { return apply(a, x); }
std::vector<Rational> operator*(const RatMatrix& a, std::span<const Rational> x) { return apply(a, x); }

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

bool is_integral(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        throw Error(ErrorCode::NotIntegral, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") = " + to_string(a(i, j)) + " is not an integer");
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix m = a;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return rref(m).size();
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

Inertia inertia(const RatMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw Error(ErrorCode::DimensionMismatch, "inertia of non-square matrix");
  RatMatrix a = symmetric;
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Inertia out;
  while (!active.empty()) {
    auto it = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (it == active.end()) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry into the diagonal by the congruence x_i -> x_i + x_j.
      bool folded = false;
      for (std::size_t u = 0; u < active.size() && !folded; ++u) {
        for (std::size_t v = u + 1; v < active.size() && !folded; ++v) {
          const std::size_t i = active[u];
          const std::size_t j = active[v];
          if (a(i, j) == 0) continue;
          for (std::size_t k : active) a(i, k) += a(j, k);
          for (std::size_t k : active) a(k, i) += a(k, j);
          folded = true;
        }
      }
      if (!folded) {
        out.zero += active.size();
        break;
      }
      continue;
    }
    const std::size_t i = *it;
    const Rational d = a(i, i);
    (d > 0 ? out.positive : out.negative) += 1;
    active.erase(it);
    for (std::size_t j : active) {
      if (a(j, i) == 0) continue;
      Rational f = a(j, i) / d;
      for (std::size_t k : active) a(j, k) -= f * a(i, k);
    }
  }
  return out;
}

Inertia inertia(const IntMatrix& symmetric) { return inertia(to_rational(symmetric)); }

bool is_positive_definite(const IntMatrix& symmetric) {
  auto in = inertia(symmetric);
  return in.positive == symmetric.rows();
}

bool is_positive_semidefinite(const IntMatrix& symmetric) { return inertia(symmetric).negative == 0; }

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  IntMatrix b = a;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t col = 0;
  for (std::size_t r = 0; r < b.rows() && col < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j) {
        if (b(r, j) == 0) continue;
        if (best == n || abs(b(r, j)) < abs(b(r, best))) best = j;
      }
      if (best == n) break;
      b.swap_columns(col, best);
      u.swap_columns(col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (b(r, j) == 0) continue;
        Integer q = floor_div(b(r, j), b(r, col));
        for (std::size_t i = 0; i < b.rows(); ++i) b(i, j) -= q * b(i, col);
        for (std::size_t i = 0; i < n; ++i) u(i, j) -= q * u(i, col);
        if (b(r, j) != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = col; j < n; ++j) basis.push_back(u.column(j));
  return basis;
}

std::vector<std::vector<Integer>> lattice_basis(const std::vector<std::vector<Integer>>& generators,
                                                std::size_t dim) {
  if (generators.empty()) return {};
  IntMatrix m = IntMatrix::from_rows(generators, dim);
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < dim && r < m.rows(); ++c) {
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        if (best == m.rows() || abs(m(i, c)) < abs(m(best, c))) best = i;
      }
      if (best == m.rows()) break;
      m.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        Integer q = floor_div(m(i, c), m(r, c));
        for (std::size_t j = c; j < dim; ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0) done = false;
      }
      if (done) {
        if (m(r, c) < 0)
          for (std::size_t j = c; j < dim; ++j) m(r, j) = -m(r, j);
        for (std::size_t i = 0; i < r; ++i) {
          Integer q = floor_div(m(i, c), m(r, c));
          if (q != 0)
            for (std::size_t j = c; j < dim; ++j) m(i, j) -= q * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(m.row(i));
  return basis;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t k = std::min(m.rows(), m.cols());
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m.rows(), pj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (m(i, j) != 0 && (pi == m.rows() || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m.rows()) {
        for (std::size_t s = t; s < k; ++s) diag.push_back(0);
        return diag;
      }
      m.swap_rows(t, pi);
      m.swap_columns(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        Integer q = floor_div(m(i, t), m(t, t));
        for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        Integer q = floor_div(m(t, j), m(t, t));
        for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!divides(m(t, t), m(i, j))) {
            for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

IntMatrix complete_to_unimodular(std::span<const Integer> c) {
  const std::size_t k = c.size();
  if (content(c) != 1) throw Error(ErrorCode::NotIntegral, "complete_to_unimodular needs a primitive vector");
  std::vector<Integer> w(c.begin(), c.end());
  IntMatrix u = IntMatrix::identity(k);
  // Row operations reduce w to e_1; their inverses are applied to u as
  // column operations so that u ends with first column c.
  while (true) {
    std::size_t best = k;
    for (std::size_t i = 0; i < k; ++i)
      if (w[i] != 0 && (best == k || abs(w[i]) < abs(w[best]))) best = i;
    bool single = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == best || w[i] == 0) continue;
      Integer q = floor_div(w[i], w[best]);
      w[i] -= q * w[best];
      for (std::size_t r = 0; r < k; ++r) u(r, best) += q * u(r, i);
      if (w[i] != 0) single = false;
    }
    if (single) {
      if (best != 0) {
        std::swap(w[0], w[best]);
        u.swap_columns(0, best);
      }
      if (w[0] < 0) {
        w[0] = -w[0];
        for (std::size_t r = 0; r < k; ++r) u(r, 0) = -u(r, 0);
      }
      break;
    }
  }
  return u;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace vinberg

namespace vinberg {

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

SmithForm smith_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& m = f.s;
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
    for (std::size_t j = 0; j < f.u.cols(); ++j) f.u(dst, j) += q * f.u(src, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
    for (std::size_t i = 0; i < f.v.rows(); ++i) f.v(i, dst) += q * f.v(i, src);
  };
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t pi = m.rows(), pj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (m(i, j) != 0 && (pi == m.rows() || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m.rows()) return f;
      m.swap_rows(t, pi);
      f.u.swap_rows(t, pi);
      m.swap_columns(t, pj);
      f.v.swap_columns(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        row_add(i, t, -floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        col_add(j, t, -floor_div(m(t, j), m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!divides(m(t, t), m(i, j))) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (m(t, t) < 0) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < f.u.cols(); ++j) f.u(t, j) = -f.u(t, j);
    }
  }
  return f;
}

}  // namespace vinberg
