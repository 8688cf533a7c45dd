#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinberg/linalg.hpp"

namespace vinberg {

/// Integer polynomial, coefficients from the constant term upward.
using Polynomial = std::vector<Integer>;

int degree(const Polynomial& f);
std::string to_string(const Polynomial& f, const std::string& var = "x");

/// det(x I - A), by Faddeev-LeVerrier over the rationals.
Polynomial characteristic_polynomial(const IntMatrix& a);

Polynomial cyclotomic(int k);

/// Quotient f / g when g is monic and divides f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

IntMatrix evaluate(const Polynomial& f, const IntMatrix& a);

/// Order of an integer matrix decided from its characteristic polynomial:
/// finite iff it is a product of cyclotomic factors and the product of the
/// distinct factors annihilates the matrix.
struct OrderAnalysis {
  Polynomial charpoly;
  std::vector<int> cyclotomic_factors;  // indices k of Phi_k, with multiplicity
  Polynomial residual;                  // non-cyclotomic part, 1 if none
  bool diagonalizable = true;
  bool finite = true;
  long order = 1;  // valid when finite
};

OrderAnalysis analyze_order(const IntMatrix& a);

}  // namespace vinberg
