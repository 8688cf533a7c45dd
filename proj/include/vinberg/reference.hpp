#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/certificates.hpp"

namespace vinberg {

/// Reference data of an ideal-vertex obstruction.
struct IdealVertexBlock {
  long p;
  int n;
  std::string affine_type;  // SubdiagramType::parse syntax
  LatticeVector null_vector;
  std::optional<LatticeVector> complement;  // stated generator, if any
  Integer complement_norm;
  std::optional<LatticeVector> glue;
  Integer glue_order;  // 1 when no glue is needed
};

const std::vector<IdealVertexBlock>& ideal_vertex_blocks();
std::optional<IdealVertexBlock> ideal_vertex_block(long p, int n);

/// The block recomputed at the first search prefix exhibiting its affine type
/// at its null vector.
struct BlockEvaluation {
  explicit BlockEvaluation(IdealVertexBlock b) : block(std::move(b)), computed(QuadraticForm(block.p, block.n)) {}

  IdealVertexBlock block;
  bool found = false;
  std::size_t prefix = 0;
  SubdiagramType affine_type;
  IdealVertexFailure computed;

  // Stated vectors checked against M/Ze and the affine roots D.
  bool complement_in_m = false;
  bool complement_orthogonal = false;
  Integer complement_class_norm = 0;
  Integer stated_index = 0;  // [M/Ze : D + <complement>], 0 if infinite
  bool glue_in_m = false;
  Integer glue_class_order = 0;  // over D and the complement when in M, 0 if infinite

  bool type_matches() const;
  bool null_vector_matches() const;
  bool invariants_match() const;
  /// Type, null vector and invariants reproduced by a valid certificate.
  bool pass() const;
};

BlockEvaluation evaluate_block(const IdealVertexBlock& block);

/// Reference corner-isometry data for p = 23, n = 3.
struct CornerReference {
  long p;
  int n;
  LatticeVector from;
  LatticeVector to;
  Integer norm;
  IntMatrix matrix;
};

const CornerReference& corner_reference();

struct CornerEvaluation {
  explicit CornerEvaluation(QuadraticForm f) : symmetry(std::move(f)) {}

  std::vector<std::size_t> from_walls;  // accepted-root indices orthogonal to the corner
  std::vector<std::size_t> to_walls;
  LatticeVector from;
  LatticeVector to;
  Integer from_norm = 0;
  Integer to_norm = 0;
  bool from_is_corner = false;
  bool to_is_corner = false;
  InfiniteSymmetry symmetry;
  bool certified = false;  // both corners are certified chamber corners of the state
  bool matches_reference = false;
  /// Closest reading of the reference matrix: "matrix", "inverse",
  /// "matrix, coordinates v1..vn v0" or "inverse, coordinates v1..vn v0".
  std::string reference_reading;
  /// Entries where that reading differs from the reference.
  std::vector<std::pair<std::size_t, std::size_t>> differing_entries;

  bool pass() const;
};

/// Recomputes both corners from the walls of the search state and the
/// isometry sending one (walls, corner) frame to the other.
CornerEvaluation evaluate_corner_reference(const SearchState& state);

/// Reference values for the form of the state, compared with the certificate
/// and recomputed where the reference names other data; empty object when
/// nothing is recorded.
Json reference_annotations(const SearchState& state, const Json& certificate);

}  // namespace vinberg
