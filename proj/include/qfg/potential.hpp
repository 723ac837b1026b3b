#pragma once

#include <string>
#include <vector>

#include "qfg/presentation.hpp"

namespace qfg {

struct PotentialTerm {
  Scalar coef;
  std::vector<ArrowId> cycle;  // canonical rotation
};

/// Linear combination of cycles. Terms are kept as given (up to rotation),
/// so a dimer face list survives even when terms cancel.
class Potential {
 public:
  Potential() = default;
  /// Throws StructuralError if a term is not a nonempty cycle.
  Potential(QuiverPtr q, const std::vector<std::pair<Scalar, Path>>& terms);

  const QuiverPtr& quiver() const { return quiver_; }
  const Quiver& q() const { return *quiver_; }
  const std::vector<PotentialTerm>& terms() const { return terms_; }
  /// Terms merged by rotation class with zero sums removed.
  std::vector<PotentialTerm> merged() const;
  std::string str() const;

  /// Rotation-invariant equality of the underlying potentials.
  friend bool operator==(const Potential& a, const Potential& b);

 private:
  QuiverPtr quiver_;
  std::vector<PotentialTerm> terms_;
};

/// Lexicographically minimal rotation by arrow declaration order.
std::vector<ArrowId> canonicalRotation(const std::vector<ArrowId>& cycle);

/// ∂_a of a single cycle: one rotated remainder per occurrence of a.
PathElement cyclicDerivative(const Quiver& q, const std::vector<ArrowId>& cycle, ArrowId a);
PathElement cyclicDerivative(const Potential& W, ArrowId a);
PathElement cyclicDerivative(const Potential& W, const std::string& arrow);

/// kQ / (∂_a W : a ∈ Q_1), nonzero derivatives only, trivial grading.
GradedPresentation jacobianAlgebra(const Potential& W);

}  // namespace qfg
