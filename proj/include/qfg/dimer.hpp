#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfg/potential.hpp"

namespace qfg {

/// Quiver with potential whose +1 terms are white faces and -1 terms black
/// faces; each arrow lies on exactly one face of each colour.
class DimerQP {
 public:
  DimerQP() = default;
  /// Throws StructuralError when a coefficient is not ±1 or an arrow
  /// violates the once-per-colour condition.
  explicit DimerQP(Potential W);

  const Potential& potential() const { return W_; }
  const Quiver& q() const { return W_.q(); }
  std::size_t faceCount() const { return W_.terms().size(); }
  const std::vector<ArrowId>& face(std::size_t i) const { return W_.terms()[i].cycle; }
  bool white(std::size_t i) const { return W_.terms()[i].coef.sign() > 0; }

 private:
  Potential W_;
};

struct PerfectMatching {
  std::vector<ArrowId> arrows;  // sorted
  std::vector<std::string> names(const Quiver& q) const;
  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) { return a.arrows == b.arrows; }
};

/// True when the arrow set meets every face exactly once (with multiplicity).
bool isPerfectMatching(const DimerQP& D, const std::vector<ArrowId>& arrows);
/// Exact-cover enumeration, sorted lexicographically by arrow ids.
std::vector<PerfectMatching> perfectMatchings(const DimerQP& D);
/// Matched arrows in degree 1, the rest in degree 0.
ArrowGrading matchingGrading(const DimerQP& D, const PerfectMatching& m);

struct DegreeZeroWitness {
  bool finite = false;
  long long dimension = 0;              // when finite
  std::vector<std::string> cycle;       // pumping cycle when infinite
  int bound = 0;
};
/// Decides finiteness of Λ_0 from the Ufnarovski graph of the degree-0
/// part. Throws InconclusiveError when the bound does not settle it.
DegreeZeroWitness degreeZeroFiniteDim(const GradedPresentation& J, int bound = 12);

struct RCharges {
  bool feasible = false;
  std::vector<Scalar> charges;  // per arrow, when feasible
};
/// R(a) in (0, 2), face sums 2, and Σ_{a at v} (1 - R(a)) = 2 at every
/// vertex (loops counted twice). Exact Fourier–Motzkin elimination.
RCharges consistencyFeasible(const DimerQP& D);

/// Strict-inequality feasibility: exists x with A x < b (rows of A, b).
/// Returns a witness when feasible.
std::optional<std::vector<Scalar>> strictFeasible(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b,
                                                  std::size_t vars);

}  // namespace qfg
