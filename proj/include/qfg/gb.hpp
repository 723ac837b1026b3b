#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qfg/presentation.hpp"

namespace qfg {

/// Admissible order on paths. Weight (grading degree, or length for the
/// plain length-lex order) is compared first; ties by length, then
/// lexicographically with earlier-precedence arrows larger.
class MonomialOrder {
 public:
  enum class Kind { LengthLex, GradedLengthLex };

  MonomialOrder() = default;
  static MonomialOrder lengthLex(const Quiver& q);
  static MonomialOrder graded(const Quiver& q, const ArrowGrading& g);
  /// Graded when the presentation has positive degrees and its degree-0
  /// arrows are acyclic; length-lex otherwise.
  static MonomialOrder forPresentation(const GradedPresentation& p);
  /// Listed arrows become the largest, in the given order; the rest follow
  /// in declaration order.
  MonomialOrder withPrecedence(const Quiver& q, const std::vector<std::string>& first) const;

  Kind kind() const { return kind_; }
  int arrowWeight(ArrowId a) const { return kind_ == Kind::LengthLex ? 1 : deg_[a]; }
  int weight(const Path& p) const;
  int weight(const std::vector<ArrowId>& arrows) const;
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Path& a, const Path& b) const;
  bool greater(const Path& a, const Path& b) const { return compare(a, b) > 0; }
  const std::vector<int>& precedenceRank() const { return rank_; }

 private:
  Kind kind_ = Kind::LengthLex;
  std::vector<int> deg_;
  std::vector<int> rank_;  // 0 = largest
};

struct Term {
  Path path;
  Scalar coef;
};
/// Polynomial with terms in strictly decreasing monomial order.
using Poly = std::vector<Term>;

Poly toPoly(const PathElement& x, const MonomialOrder& order);
PathElement fromPoly(const Poly& p);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const MonomialOrder& order() const { return order_; }
  int bound() const { return bound_; }
  /// True when no overlap was skipped for exceeding the bound, i.e. the
  /// basis is a genuine (untruncated) Gröbner basis.
  bool complete() const { return complete_; }
  const Quiver& quiver() const { return *quiver_; }

  /// Reduced basis elements, monic, sorted by increasing leading term.
  const std::vector<Poly>& polys() const { return polys_; }
  std::vector<PathElement> elements() const;
  std::vector<Path> leadingTerms() const;

  /// Throws ParameterError when x has weight above the bound.
  PathElement normalForm(const PathElement& x) const;
  Poly reduce(Poly x) const;
  Poly reduceWord(const Path& w) const;
  bool inIdeal(const PathElement& x) const { return normalForm(x).isZero(); }
  bool isNormalWord(const Path& w) const;
  /// Position/length of a leading-term occurrence in w, or nullopt.
  std::optional<std::pair<std::size_t, std::size_t>> findTip(const Path& w, std::size_t* elem = nullptr) const;

  /// Depth-first enumeration of normal words of weight <= maxWeight.
  /// Requires maxWeight <= bound.
  void forEachNormalWord(int maxWeight, const std::function<void(const Path&, int)>& fn) const;
  std::vector<Path> normalWords(int weight) const;
  /// Normal words w with w = u·a for a normal u (the graph edges used by
  /// growth analysis) are exactly extensions that stay normal.
  bool extensionIsNormal(const std::vector<ArrowId>& word, ArrowId a) const;

  friend GroebnerBasis buchbergerTruncated(const std::vector<PathElement>& relations,
                                           const MonomialOrder& order, int bound);
  friend GroebnerBasis groebnerFor(const GradedPresentation& p, int bound);
  friend std::vector<long long> gradedDimensions(const GradedPresentation& p, int bound);

 private:
  struct Node {
    std::vector<std::pair<ArrowId, std::uint32_t>> next;
    int elem = -1;
  };
  void buildTrie();
  int tipEndingAt(const std::vector<ArrowId>& w, std::size_t end, std::size_t* len) const;

  const Quiver* quiver_ = nullptr;
  MonomialOrder order_;
  int bound_ = 0;
  bool complete_ = true;
  std::vector<Poly> polys_;
  std::vector<bool> killedVertex_;
  std::vector<Node> trie_;  // reversed leading words
};

/// Truncated Buchberger completion: every overlap of weight <= bound is
/// resolved. Throws ParameterError if a relation has weight above bound.
GroebnerBasis buchbergerTruncated(const std::vector<PathElement>& relations, const MonomialOrder& order,
                                  int bound);

/// GB for a presentation under its default order.
GroebnerBasis groebnerFor(const GradedPresentation& p, int bound);

/// dim (kQ/I)_d for d = 0..bound by counting normal words under the graded
/// order. Throws StructuralError for inhomogeneous relations and
/// ParameterError when the degree-0 arrows contain a cycle.
std::vector<long long> gradedDimensions(const GradedPresentation& p, int bound);

}  // namespace qfg
