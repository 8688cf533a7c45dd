#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vinberg/diagram.hpp"
#include "vinberg/json.hpp"
#include "vinberg/polynomial.hpp"
#include "vinberg/search.hpp"

namespace vinberg {

/// Primitive null vector sum(marks_i r_i) of a connected affine root set,
/// oriented with k0 > 0. Throws Error(NotAffine).
LatticeVector affine_null_vector(const std::vector<Root>& roots, const QuadraticForm& form);

/// M = e^perp in L and the positive definite quotient M/Ze.
class QuotientLattice {
 public:
  /// Throws Error(NotIsotropic) unless f(e) == 0, Error(ZeroVector) or
  /// Error(NotIntegral) for a zero or imprimitive e.
  QuotientLattice(LatticeVector e, QuadraticForm form);

  const QuadraticForm& form() const noexcept { return form_; }
  const LatticeVector& null_vector() const noexcept { return e_; }
  /// Basis of M whose first vector is e.
  const std::vector<LatticeVector>& complement_basis() const noexcept { return m_basis_; }
  /// Lifts of the chosen basis of M/Ze.
  const std::vector<LatticeVector>& lift_basis() const noexcept { return lifts_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return lifts_.size(); }

  LatticeVector lift(std::span<const Integer> cls) const;
  /// Class coordinates of x, or nullopt if x is not in M.
  std::optional<std::vector<Integer>> project(const LatticeVector& x) const;
  Integer norm(std::span<const Integer> cls) const;

 private:
  QuadraticForm form_;
  LatticeVector e_;
  std::vector<LatticeVector> m_basis_;
  std::vector<LatticeVector> lifts_;
  IntMatrix gram_;
};

QuotientLattice complement_and_quotient(const LatticeVector& e, const QuadraticForm& form);

/// Outcome of scanning the representatives r + t e, 0 <= t < m, of a class.
struct RootClassScan {
  bool root = false;
  std::optional<LatticeVector> representative;
  RootDefect defect = RootDefect::None;  // why no representative is a root
};

RootClassScan scan_root_class(std::span<const Integer> cls, const QuotientLattice& q);
bool is_root_class(std::span<const Integer> cls, const QuotientLattice& q);

/// All x != 0 with x^T G x <= bound, one of each pair +-x, ordered by norm
/// and then lexicographically. G must be positive definite.
std::vector<std::vector<Integer>> short_vectors(const IntMatrix& gram, const Integer& bound);

/// The sublattice of M/Ze spanned by root classes.
struct RootSpan {
  std::vector<std::vector<Integer>> classes;   // up to sign
  std::vector<LatticeVector> representatives;  // a root of L in each class
  std::vector<std::vector<Integer>> basis;
  std::size_t rank = 0;
  Integer index = 0;  // [M/Ze : span] when the rank is full, else 0
};

RootSpan root_span(const QuotientLattice& q);

/// M/Ze relative to a sublattice D: the orthogonal complement of D and the
/// glue group M/Ze / (D + D^perp).
struct GlueDecomposition {
  std::vector<std::vector<Integer>> d_basis;
  std::vector<std::vector<Integer>> complement;
  IntMatrix complement_gram;
  std::vector<Integer> glue_orders;             // nontrivial invariant factors
  std::vector<std::vector<Integer>> glue;       // one generator per factor
  Integer glue_order() const;
};

GlueDecomposition glue_decomposition(const QuotientLattice& q, const std::vector<std::vector<Integer>>& d_generators);

/// [Z^dim : span(generators)], or 0 when the span has rank < dim.
Integer sublattice_index(const std::vector<std::vector<Integer>>& generators, std::size_t dim);

/// Order of x in Z^dim / span(generators), or 0 when infinite.
Integer order_modulo(std::span<const Integer> x, const std::vector<std::vector<Integer>>& generators, std::size_t dim);

struct Generation {
  bool generated = false;
  RootSpan span;
  std::vector<std::vector<Integer>> witnesses;  // generators outside the root span
};

Generation generated_by_roots(const QuotientLattice& q);

struct ClassWitness {
  std::string role;  // "complement" or "glue"
  LatticeVector vector;
  Integer norm;
  Integer order = 0;  // glue order, 0 for complement generators
  RootClassScan scan;
};

/// Invariants of a null vector e whose orthogonal roots include the given
/// affine roots. valid() holds when the root classes of M/Ze span a lattice
/// of rank < n-1, which rules e out as an ideal vertex of a finite-volume
/// chamber and proves the form non-reflective.
struct IdealVertexFailure {
  explicit IdealVertexFailure(QuadraticForm f) : form(std::move(f)) {}

  QuadraticForm form;
  LatticeVector e;
  std::vector<std::vector<Root>> components;  // connected affine pieces
  std::vector<std::vector<Integer>> marks;
  SubdiagramType affine_type;
  std::vector<LatticeVector> complement_basis;
  std::vector<LatticeVector> quotient_basis;
  IntMatrix quotient_gram;
  std::size_t root_rank = 0;
  Integer root_index = 0;
  std::vector<LatticeVector> root_representatives;
  std::size_t d_rank = 0;
  std::vector<LatticeVector> complement;
  IntMatrix complement_gram;
  std::vector<Integer> glue_orders;
  /// Generators of the complement of the root-class span and glue over it.
  std::vector<ClassWitness> witnesses;

  bool valid() const { return root_rank + 1 < static_cast<std::size_t>(form.n()); }
  Integer glue_order() const;
  /// Norm of the complement generator when D^perp has rank one, else 0.
  Integer complement_norm() const;
};

/// Throws Error(NotAffine) if the roots are not affine or their null vectors
/// are not all proportional to e.
IdealVertexFailure ideal_vertex_failure(const LatticeVector& e, const std::vector<Root>& affine_roots,
                                        const QuadraticForm& form);

/// Generator of the line orthogonal to n independent walls, with k0 > 0.
/// Throws Error(NotACorner) when that line has positive norm or the walls are
/// dependent.
LatticeVector null_corner_vector(const std::vector<Root>& walls, const QuadraticForm& form);

/// A finite vertex of the chamber that no undiscovered wall can reach.
struct Corner {
  LatticeVector vertex;
  Integer norm;
  std::vector<std::size_t> walls;  // indices into the accepted roots
};

/// Squared hyperbolic sine of the distance from v0 to the vertex u.
Rational vertex_sinh2(const LatticeVector& u, const QuadraticForm& form);

/// Simple finite vertices u of the chamber cut out by the accepted roots with
/// p * height(cursor) > sinh^2 d(v0, u), so every wall at u is already known.
std::vector<Corner> chamber_corners(const SearchState& state);

struct InfiniteSymmetry {
  explicit InfiniteSymmetry(QuadraticForm f) : form(std::move(f)) {}

  QuadraticForm form;
  std::vector<LatticeVector> basis_from;
  std::vector<LatticeVector> basis_to;
  IntMatrix matrix;
  bool form_preserved = false;
  OrderAnalysis order;
};

/// The unique linear map sending basis_from[i] to basis_to[i]. Throws
/// Error(GramMismatch), Error(SingularBasis) or Error(NotIntegral).
InfiniteSymmetry isometry_from_bases(const std::vector<LatticeVector>& from, const std::vector<LatticeVector>& to,
                                     const QuadraticForm& form);

/// Corner pair related by an integral isometry of infinite order.
struct CornerIsometry {
  Corner from;
  Corner to;
  InfiniteSymmetry symmetry;
  Rational frontier;  // height below which every wall was found
};

std::optional<CornerIsometry> find_corner_isometry(const SearchState& state);

// Certificates as JSON documents.

Json reflective_certificate(const std::vector<Root>& roots, const QuadraticForm& form);
Json certificate_json(const IdealVertexFailure& c);
Json certificate_json(const CornerIsometry& c);
/// Non-reflectivity at (p, n) derived from a certificate at (p, n0), n0 < n.
Json inherit_nonreflectivity(const Json& base, int n);

struct Verification {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Throws Error(MalformedCertificate) naming the missing or malformed field.
Verification check_certificate(const Json& cert);
bool verify_certificate(const Json& cert);

}  // namespace vinberg
