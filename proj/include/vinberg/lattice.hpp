#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "vinberg/arith.hpp"
#include "vinberg/linalg.hpp"

namespace vinberg {

/// The diagonal form f(x) = -p x0^2 + x1^2 + ... + xn^2 on Z^{n+1}.
class QuadraticForm {
 public:
  /// Throws Error(InvalidForm) unless p is a prime >= 5 and n >= 2.
  QuadraticForm(const Integer& p, int n);
  QuadraticForm(long p, int n) : QuadraticForm(Integer(p), n) {}

  const Integer& p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(n_) + 1; }

  /// diag(-p, 1, ..., 1)
  IntMatrix matrix() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Integer p_;
  int n_;
};

/// Integer coordinates (k0, ..., kn) with respect to v0, ..., vn.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coeffs_(dim) {}
  explicit LatticeVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  LatticeVector(std::initializer_list<long> coeffs);

  static LatticeVector basis(std::size_t dim, std::size_t i);

  /// Parses the "2v0+5v1-v2" notation; missing coordinates are zero.
  static LatticeVector parse(const std::string& text, std::size_t dim);

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  Integer content() const;
  /// Divides out the content; the zero vector is returned unchanged.
  LatticeVector primitive_part() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Integer& s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coeffs_ == b.coeffs_; }
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  /// Renders as "2v0+5v1-v2"; the zero vector renders as "0".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Bilinear form -p u0 v0 + sum_{i>=1} ui vi. Throws Error(DimensionMismatch).
Integer inner_product(const LatticeVector& u, const LatticeVector& v, const QuadraticForm& form);
inline Integer norm(const LatticeVector& v, const QuadraticForm& form) { return inner_product(v, v, form); }

/// True iff the gcd of the coefficients is 1. Throws Error(ZeroVector).
bool is_primitive(const LatticeVector& v);

/// {1, 2, p, 2p}: the norms a primitive vector can have while satisfying the
/// crystallographic condition.
std::vector<Integer> admissible_root_norms(const QuadraticForm& form);

/// Which part of the root test a vector fails, if any.
enum class RootDefect {
  None,
  Zero,
  NotPrimitive,
  NonPositiveNorm,
  InadmissibleNorm,
  Divisibility,
};

std::string to_string(RootDefect d);

RootDefect root_defect(const LatticeVector& v, const QuadraticForm& form);

/// Primitive, positive norm m, m | 2 k_i (i > 0) and m | 2 p k0.
bool is_root(const LatticeVector& v, const QuadraticForm& form);

/// Norm-p and norm-2p roots have p | k_i for i > 0 and p does not divide k0.
bool satisfies_high_norm_pattern(const LatticeVector& v, const QuadraticForm& form);

class Root {
 public:
  /// Throws Error(NotIntegral) if v is not a root of the form.
  Root(LatticeVector v, const QuadraticForm& form);

  const LatticeVector& vector() const noexcept { return vector_; }
  const Integer& norm() const noexcept { return norm_; }

  friend bool operator==(const Root& a, const Root& b) { return a.vector_ == b.vector_; }

 private:
  LatticeVector vector_;
  Integer norm_;
};

/// e_i = v_{i+1} - v_i for 1 <= i < n, then e_n = -v_n.
std::vector<Root> initial_roots(const QuadraticForm& form);

/// x - (2 (x, r) / (r, r)) r; throws Error(NotIntegral) if the image leaves L.
LatticeVector reflect(const LatticeVector& x, const Root& r, const QuadraticForm& form);

IntMatrix gram_matrix(const std::vector<LatticeVector>& vectors, const QuadraticForm& form);
IntMatrix gram_matrix(const std::vector<Root>& roots, const QuadraticForm& form);

std::vector<LatticeVector> vectors_of(const std::vector<Root>& roots);

}  // namespace vinberg
