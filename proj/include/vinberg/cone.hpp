#pragma once

#include <vector>

#include "vinberg/linalg.hpp"

namespace vinberg {

/// Generators of the polyhedral cone {y : A y <= 0}: a basis of its
/// lineality space and the extreme rays of its pointed part.
struct ConeGenerators {
  std::vector<std::vector<Integer>> lineality;
  std::vector<std::vector<Integer>> rays;

  bool trivial() const noexcept { return lineality.empty() && rays.empty(); }
};

/// Exact double description method with the algebraic adjacency test.
ConeGenerators double_description(const IntMatrix& constraints);

}  // namespace vinberg
