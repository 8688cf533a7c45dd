#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vinberg/arith.hpp"

namespace vinberg {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix principal(std::span<const std::size_t> indices) const { return submatrix(indices, indices); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
std::vector<Rational> operator*(const RatMatrix& a, std::span<const Rational> x);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

RatMatrix to_rational(const IntMatrix& a);
/// Throws Error(NotIntegral) if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& a);
bool is_integral(const RatMatrix& a);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Signature of a symmetric matrix, computed by exact symmetric elimination.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const noexcept { return positive + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia inertia(const RatMatrix& symmetric);
Inertia inertia(const IntMatrix& symmetric);
bool is_positive_definite(const IntMatrix& symmetric);
bool is_positive_semidefinite(const IntMatrix& symmetric);

/// Basis of the right null space {x : A x = 0} over Q (columns of the result
/// are not normalised beyond reduced echelon form).
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

/// Basis of the saturated integer kernel {x in Z^n : A x = 0}, returned as
/// a list of vectors. Computed with unimodular column operations.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a);

/// Row-style Hermite basis of the lattice spanned by the given integer
/// vectors (zero rows dropped).
std::vector<std::vector<Integer>> lattice_basis(const std::vector<std::vector<Integer>>& generators,
                                                std::size_t dim);

/// Invariant factors (diagonal of the Smith normal form), including ones and
/// zeros, in divisibility order.
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Smith normal form with transforms: u * a * v == s, u and v unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::vector<Integer> invariants() const;
};
SmithForm smith_form(const IntMatrix& a);

/// Unimodular matrix whose first column is the primitive vector c.
IntMatrix complete_to_unimodular(std::span<const Integer> c);

/// Unique solution of a square nonsingular system, or nullopt if singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, std::span<const Rational> b);
std::optional<RatMatrix> inverse(const RatMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace vinberg
