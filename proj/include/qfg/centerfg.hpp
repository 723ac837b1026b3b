#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfg/graded.hpp"
#include "qfg/koszul.hpp"
#include "qfg/modcplx.hpp"

namespace qfg {

enum class CenterFlavor { Graded, Plain };

/// Bases of central elements per degree. basis[k] lives in degree k * step;
/// step > 1 after taking a Veronese.
struct CenterTruncation {
  CenterFlavor flavor = CenterFlavor::Plain;
  /// Graded flavor: zy = (-1)^{signWeight·d·e} yz.
  int signWeight = 1;
  int step = 1;
  std::vector<std::vector<SparseVec>> basis;

  int degree(std::size_t k) const { return static_cast<int>(k) * step; }
  std::vector<long long> dimensions() const;
  bool zeroInPositiveDegrees() const;
};

/// Throws ParameterError unless products reach D plus the top generator degree.
CenterTruncation centerTruncation(const GradedAlgebra& G, int D, CenterFlavor flavor, int signWeight = 1);
CenterTruncation veroneseOfCenter(const CenterTruncation& C, int l);

/// Rechecks every listed element against every basis element inside the
/// product window.
bool verifyCentral(const GradedAlgebra& G, const CenterTruncation& C);

struct FinitenessWitness {
  enum class Outcome { Witness, Refuted, Inconclusive } outcome = Outcome::Inconclusive;
  int genDegBound = 0, checkDegBound = 0;
  std::vector<std::pair<int, SparseVec>> generators;
  int failedDegree = -1;
  long long spanned = 0, needed = 0;
  std::string reason;
};

FinitenessWitness moduleFinitenessWitness(const GradedAlgebra& G, const CenterTruncation& C, int genDegBound,
                                          int checkDegBound);
/// Independent rank recheck: every G_d, d <= checkDegBound, is spanned by z·g.
bool verifyWitness(const GradedAlgebra& G, const CenterTruncation& C, const FinitenessWitness& w);

struct FgBounds {
  int ext = 8;
  int dual = 6;
  int center = 6;
  int gen = 4;
  int horizon = 6;
};

struct FgVerdict {
  enum class Outcome { HoldsAtBound, RefutedAtBound, Inconclusive } outcome = Outcome::Inconclusive;
  int n = 0;
  FgBounds bounds;
  int dualWindow = 0;
  std::string reason;
  // evidence
  SymmetryVerdict symmetry;
  bool quasiVeronese = false;
  NRIResult nri;
  std::optional<OrthogonalityVerdict> orthogonality;
  std::vector<long long> dualDimensions;
  std::vector<long long> preprojectiveDimensions;
  std::vector<long long> modelDimensions;
  std::vector<long long> centerDimensions;
  std::vector<long long> veroneseDimensions;
  std::vector<std::vector<std::string>> centerElements;
  std::optional<FinitenessWitness> witness;
  bool witnessVerified = false;  // independent rank recheck
  std::vector<std::string> generatorLabels;
  std::vector<std::string> warnings;
};

/// Symmetry, n-representation infiniteness of Λ_0, (n+1)Z-orthogonality,
/// the dual against the preprojective algebra, then the center and a
/// finiteness witness. Errors carry the stage name.
FgVerdict fgVerdict(const GradedPresentation& L, int n, const FgBounds& bounds);

const char* outcomeName(FgVerdict::Outcome o);
const char* outcomeName(FinitenessWitness::Outcome o);

}  // namespace qfg
