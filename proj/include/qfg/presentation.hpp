#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qfg/quiver.hpp"

namespace qfg {

/// Quiver, relation generators and an arrow grading defining kQ/I.
/// Relations are stored as given; the quiver is shared so that paths stay
/// valid when presentations are copied.
struct GradedPresentation {
  QuiverPtr quiver;
  std::vector<PathElement> relations;
  ArrowGrading grading;

  GradedPresentation() = default;
  GradedPresentation(QuiverPtr q, std::vector<PathElement> rels, ArrowGrading g);
  /// Trivially graded (all arrows in degree 0).
  GradedPresentation(QuiverPtr q, std::vector<PathElement> rels);

  const Quiver& q() const { return *quiver; }
  std::vector<int> arrowDegrees() const { return grading.forQuiver(*quiver); }

  /// Throws StructuralError naming the first inhomogeneous relation.
  void requireHomogeneous() const;
  /// Relations nonzero, uniform after splitting, and every term of length >= 2.
  bool isAdmissible() const;
  /// Acyclicity of the subquiver of degree-0 arrows.
  bool degreeZeroAcyclic() const;
  /// Re-expresses a path element of another copy of the same quiver in ours.
  PathElement adopt(const PathElement& x) const;
};

/// Helper to write paths by arrow names: path(q, {"a1","a2"}); empty list
/// is not allowed (use Path(q, v)).
Path pathOf(const Quiver& q, const std::vector<std::string>& arrowNames);
PathElement elementOf(const Quiver& q, const std::vector<std::pair<Scalar, std::vector<std::string>>>& terms);

}  // namespace qfg
