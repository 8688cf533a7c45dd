#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

/// One wall of a polygon and the angle pi/angle it makes with the next wall;
/// angle 0 means the two walls are parallel.
struct NormAngle {
  Integer norm;
  int angle = 0;
  friend bool operator==(const NormAngle&, const NormAngle&) = default;
};

struct NormAngleSequence {
  std::vector<NormAngle> entries;   // full cyclic sequence
  std::vector<std::size_t> order;   // input indices in cyclic order (empty when parsed)
  int rotation = 1;                 // largest m with the sequence m-periodic
  bool rotation_preserves_form = false;
  std::optional<IntMatrix> rotation_matrix;

  /// "(2_4 1_2 13_inf 13_2)^2"
  std::string symbol() const;
  std::string tex() const;
  /// Accepts the symbol() syntax; entries expanded by the exponent.
  static NormAngleSequence parse(const std::string& text);
};

/// Equal up to rotation and reversal of the polygon.
bool equivalent(const NormAngleSequence& a, const NormAngleSequence& b);

/// Cyclic order of the walls of a finite-volume polygon (n == 2), starting at
/// the first initial root and heading to the second when both are present.
/// Throws Error(PolygonNotClosed) if the walls do not form a single cycle.
NormAngleSequence norm_angle_sequence(const std::vector<Root>& roots, const QuadraticForm& form);

}  // namespace vinberg
