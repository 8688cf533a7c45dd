#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/json.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

enum class EdgeKind { None, Simple, Double, Sextuple, Parallel, Divergent };

std::string to_string(EdgeKind k);

struct EdgeLabel {
  EdgeKind kind = EdgeKind::None;
  Rational cos2 = 0;  // (ei,ej)^2 / ((ei,ei)(ej,ej))

  /// k for a dihedral angle pi/k (2, 3, 4, 6); 0 for parallel or divergent.
  int angle_denominator() const;
};

/// Throws Error(NotAChamber) for a positive entry and Error(InvalidAngle)
/// when cos^2 lies in the gap (0,1) \ {1/4, 1/2, 3/4}.
EdgeLabel classify_edge(const Integer& gij, const Integer& gii, const Integer& gjj);

class CoxeterDiagram {
 public:
  CoxeterDiagram(QuadraticForm form, std::vector<Root> roots, IntMatrix gram, std::vector<EdgeLabel> edges);

  const QuadraticForm& form() const noexcept { return form_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const EdgeLabel& edge(std::size_t i, std::size_t j) const { return edges_[i * size() + j]; }
  bool joined(std::size_t i, std::size_t j) const { return i != j && edge(i, j).kind != EdgeKind::None; }

 private:
  QuadraticForm form_;
  std::vector<Root> roots_;
  IntMatrix gram_;
  std::vector<EdgeLabel> edges_;
};

CoxeterDiagram build_diagram(const std::vector<Root>& roots, const QuadraticForm& form);

enum class Family { A, B, D, E, F, G, AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG };

struct Component {
  Family family;
  int rank;

  bool affine() const noexcept { return family >= Family::AffineA; }
  /// Number of vertices in the diagram.
  int vertices() const noexcept { return affine() ? rank + 1 : rank; }
  /// "A3", "E~8", ...
  std::string name() const;
  std::string tex() const;

  friend auto operator<=>(const Component&, const Component&) = default;
};

/// A multiset of connected components, kept sorted.
class SubdiagramType {
 public:
  SubdiagramType() = default;
  explicit SubdiagramType(std::vector<Component> components);

  /// Accepts "A~1 B~3", "A~1^2", "D~7"; whitespace separated.
  static SubdiagramType parse(const std::string& text);

  const std::vector<Component>& components() const noexcept { return components_; }
  int rank() const;
  bool empty() const noexcept { return components_.empty(); }
  std::string name() const;
  std::string tex() const;

  friend auto operator<=>(const SubdiagramType&, const SubdiagramType&) = default;

 private:
  std::vector<Component> components_;
};

enum class SubdiagramKind { Elliptic, Affine, Other };

std::string to_string(SubdiagramKind k);

struct SubdiagramClass {
  SubdiagramKind kind;
  SubdiagramType type;  // empty for Other
};

/// Connected components of the induced subgraph, as sorted vertex lists.
std::vector<std::vector<std::size_t>> connected_components(const CoxeterDiagram& d,
                                                           const std::vector<std::size_t>& subset);

/// Names a connected subdiagram from its shape and labels alone.
std::optional<Component> recognize_component(const CoxeterDiagram& d, const std::vector<std::size_t>& vertices);

/// Structural classification, verified against exact definiteness of the Gram
/// submatrix. Throws Error(InternalConsistency) if the two disagree.
SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

/// Kernel marks of a connected affine subset: primitive positive integers.
std::vector<Integer> affine_marks(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

/// A null direction of the chamber: the roots orthogonal to it and the
/// affine part of that set.
struct IdealPoint {
  LatticeVector e;                         // primitive, k0 > 0
  std::vector<std::size_t> orthogonal;     // Z_e
  std::vector<std::size_t> affine_part;    // union of affine components of Z_e
  SubdiagramType affine_type;
  std::size_t rank = 0;                    // rank of the Gram matrix of Z_e
  bool complete = false;                   // Z_e is all affine of rank n-1
};

/// Elliptic subsets and minimal non-elliptic (critical) subsets of a diagram.
struct Census {
  std::vector<std::vector<std::size_t>> elliptic;          // all nonempty elliptic subsets
  std::vector<std::vector<std::size_t>> parabolic;         // critical with det 0 (connected affine)
  std::vector<std::vector<std::size_t>> indefinite;        // critical with det < 0
  std::vector<IdealPoint> ideal_points;                    // one per distinct null direction
};

Census census(const CoxeterDiagram& d);

/// Types of the maximal affine subdiagrams.
std::vector<SubdiagramType> maximal_affine_types(const CoxeterDiagram& d);
std::vector<SubdiagramType> maximal_affine_types(const Census& c);

enum class RenderFormat { Dot, Tikz, Json };

/// Throws Error(UnknownFormat).
RenderFormat parse_render_format(const std::string& name);
std::string render(const CoxeterDiagram& d, RenderFormat format);

/// {schema_version, form, nodes: [{index, root, norm}], edges: [{i, j, kind, cos2_num, cos2_den}]}
Json diagram_json(const CoxeterDiagram& d);

}  // namespace vinberg
