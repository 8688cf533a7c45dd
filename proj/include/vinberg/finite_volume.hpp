#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/diagram.hpp"

namespace vinberg {

enum class CriticalKind { Parabolic, Indefinite };

struct CriticalSubmatrix {
  std::vector<std::size_t> subset;
  CriticalKind kind;
};

std::vector<CriticalSubmatrix> critical_submatrices(const CoxeterDiagram& d);
std::vector<CriticalSubmatrix> critical_submatrices(const Census& c);

struct ConditionA {
  bool pass = true;
  std::vector<std::size_t> witness;  // affine subset with no rank n-1 extension
  std::optional<LatticeVector> null_vector;
};

ConditionA check_condition_a(const CoxeterDiagram& d, const Census& c);
ConditionA check_condition_a(const CoxeterDiagram& d);

struct ConeFixedSet {
  std::vector<std::size_t> subset;
  bool zero = true;
  std::optional<std::vector<Rational>> witness;  // ray in L tensor Q
};

/// Exact decision of {x : (x,ei) = 0 for i in S, (x,ej) <= 0 for all j} == {0}.
ConeFixedSet cone_fixed_set(const std::vector<Root>& roots, const std::vector<std::size_t>& subset,
                            const QuadraticForm& form);

/// A set T of roots orthogonal to all of S, elliptic, with |T| >= n-1.
std::optional<std::vector<std::size_t>> sufficient_condition_witness(const CoxeterDiagram& d, const Census& c,
                                                                    const std::vector<std::size_t>& subset);

enum class ConditionBRoute { Sufficient, Cone };

struct ConditionBEntry {
  std::vector<std::size_t> subset;
  ConditionBRoute route;
  std::vector<std::size_t> orthogonal_elliptic;  // T, for the sufficient route
  bool zero = true;
};

struct ConditionB {
  bool pass = true;
  std::vector<ConditionBEntry> entries;
  std::vector<std::size_t> witness;
  std::optional<std::vector<Rational>> ray;
};

ConditionB check_condition_b(const CoxeterDiagram& d, const Census& c);
ConditionB check_condition_b(const CoxeterDiagram& d);

/// Second decider: every elliptic (n-1)-subset must have exactly two ends,
/// each a finite vertex (elliptic n-subset) or an ideal vertex (parabolic of
/// rank n-1).
struct EdgeCount {
  bool finite = true;
  std::size_t edges = 0;
  std::vector<std::size_t> bad_edge;
  std::size_t bad_edge_ends = 0;
};

EdgeCount edge_count_check(const CoxeterDiagram& d, const Census& c);

struct FiniteVolumeVerdict {
  bool finite = false;
  std::string reason;
  /// The walls span V. Otherwise K contains a line and the volume is infinite.
  bool nondegenerate = false;
  ConditionA condition_a;
  std::optional<ConditionB> condition_b;  // skipped when (a) fails
  EdgeCount cross_check;
};

/// Throws Error(InternalConsistency) if the two deciders disagree.
FiniteVolumeVerdict finite_volume(const CoxeterDiagram& d, const Census& c);
FiniteVolumeVerdict finite_volume(const CoxeterDiagram& d);

bool has_finite_volume(const std::vector<Root>& roots, const QuadraticForm& form);

}  // namespace vinberg
