#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfg/gb.hpp"
#include "qfg/linalg.hpp"

namespace qfg {

/// Finite-dimensional algebra given by structure constants on a basis.
class FDAlgebra {
 public:
  FDAlgebra() = default;
  /// products[i*n + j] = b_i b_j. Throws StructuralError if the idempotents
  /// are not orthogonal or do not sum to 1, or if the grading is not
  /// multiplicative. Associativity is checked by validate().
  FDAlgebra(std::vector<std::string> labels, std::vector<SparseVec> products, std::vector<SparseVec> idempotents,
            std::optional<std::vector<int>> grading = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec one() const;
  const std::vector<SparseVec>& idempotents() const { return idempotents_; }
  std::size_t vertexCount() const { return idempotents_.size(); }
  bool graded() const { return grading_.has_value(); }
  const std::vector<int>& grading() const { return *grading_; }
  int degree(std::size_t i) const { return grading_ ? (*grading_)[i] : 0; }
  int highestDegree() const;
  std::uint32_t characteristic() const { return char_; }

  /// Basis element i lies in e_u A e_v; only valid for Peirce-adapted bases.
  std::pair<VertexId, VertexId> peirce(std::size_t i) const { return peirce_.at(i); }
  bool peirceAdapted() const { return !peirce_.empty(); }

  /// Optional known radical (a basis of rad A), e.g. non-trivial paths.
  void setRadical(std::vector<SparseVec> basis) { radical_ = std::move(basis); }
  const std::optional<std::vector<SparseVec>>& knownRadical() const { return radical_; }

  /// Optional per-basis-element paths in a presenting quiver (set for
  /// algebras built from normal words).
  void setWords(std::vector<Path> words, QuiverPtr q) {
    words_ = std::move(words);
    wordQuiver_ = std::move(q);
  }
  const std::vector<Path>& words() const { return words_; }
  const QuiverPtr& wordQuiver() const { return wordQuiver_; }

  /// Associativity on all basis triples; throws StructuralError.
  void validate() const;

 private:
  void computePeirce();

  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::vector<SparseVec> idempotents_;
  std::optional<std::vector<int>> grading_;
  std::vector<std::pair<VertexId, VertexId>> peirce_;
  std::optional<std::vector<SparseVec>> radical_;
  std::vector<Path> words_;
  QuiverPtr wordQuiver_;
  std::uint32_t char_ = 0;
};

/// Finite normal-word basis of kQ/I together with the basis it came from.
struct NormalBasis {
  GroebnerBasis gb;
  std::vector<Path> words;
  std::map<Path, std::uint32_t> index;
};

/// Certifies finite dimensionality (no normal words in a full top window of
/// weights, relations homogeneous for the truncation weight) and returns
/// the normal words. Throws InconclusiveError when the bound is too small.
NormalBasis finiteNormalBasis(const GradedPresentation& p, int bound);

/// Multiplication table of a finite-dimensional kQ/I on its normal words.
FDAlgebra algebraFromPresentation(const GradedPresentation& p, int bound = 32);

/// A ⊕ DA with A in degree 0 and DA in degree 1.
FDAlgebra trivialExtension(const FDAlgebra& A);

/// Basis of the Jacobson radical: the known radical if present, else the
/// trace-form kernel (verified nilpotent in positive characteristic).
std::vector<SparseVec> radicalBasis(const FDAlgebra& A);
/// Smallest L with rad^L = 0.
int loewyLength(const FDAlgebra& A);

/// Quiver with relations of a basic algebra. Throws StructuralError for
/// non-basic input and "incomplete presentation" when the Loewy length
/// exceeds the bound or graded dimensions disagree.
GradedPresentation gabrielPresentation(const FDAlgebra& A, int relationDegreeBound);

GradedPresentation tensorProduct(const GradedPresentation& A, const GradedPresentation& B);

/// Smash product with the induced Z/aZ-grading.
FDAlgebra quasiVeronese(const FDAlgebra& L, int a);
FDAlgebra quasiVeronese(const GradedPresentation& L, int a, int bound = 32);

/// Degree-0 arrows with the degree-0 relations.
GradedPresentation degreeZeroPresentation(const GradedPresentation& L);
/// Throws StructuralError with a pumping cycle when Λ_0 is infinite.
FDAlgebra degreeZeroPart(const GradedPresentation& L, int bound = 16);

struct GrowthReport {
  enum class Kind { Finite, Infinite, Undecided } kind = Kind::Undecided;
  long long count = 0;           // number of normal words when finite
  std::vector<ArrowId> cycle;    // pumping cycle when infinite
  int suggestedBound = -1;
};
/// Decides finiteness of the normal words of kQ/I under a length-lex basis
/// truncated at `bound`, via cycles in the Ufnarovski graph.
GrowthReport normalWordGrowth(const GradedPresentation& p, int bound);

struct RelationDegrees {
  std::vector<int> lengths;  // longest path length of each minimal relation
  bool isQuadratic = false;
  std::vector<PathElement> relations;
};
RelationDegrees minimalRelationDegrees(const GradedPresentation& p, int bound = 16);

/// Replaces each arrow by an element of another path algebra.
PathElement substituteArrows(const PathElement& x, const std::map<std::string, PathElement>& images,
                             const Quiver& target);

/// Ideal equality by mutual normal-form reduction. The two presentations
/// must share the same quiver (by content).
bool sameIdeal(const GradedPresentation& a, const GradedPresentation& b, int bound);

}  // namespace qfg
