#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qfg/gb.hpp"
#include "qfg/linalg.hpp"

namespace qfg {

/// A positively graded algebra known degreewise up to a window, with a
/// basis per degree and multiplication of basis elements.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  /// Degrees 0..window() have known bases.
  virtual int window() const = 0;
  /// Largest d + e for which product(d, ., e, .) is available.
  virtual int productWindow() const { return window(); }
  virtual std::size_t dim(int d) const = 0;
  virtual std::string label(int d, std::size_t i) const = 0;
  /// Product of basis elements as a vector in degree d + e. When d + e
  /// exceeds window(), coordinates are only meaningful among themselves.
  virtual SparseVec product(int d, std::size_t i, int e, std::size_t k) const = 0;
  /// Homogeneous algebra generators (degree, vector), idempotents included.
  virtual std::vector<std::pair<int, SparseVec>> generators() const = 0;
  /// Multidegree of a basis element for a finer grading compatible with the
  /// product; empty when unavailable.
  virtual std::vector<int> fineDegree(int, std::size_t) const { return {}; }

  std::vector<long long> dimensions() const;
  SparseVec multiply(int d, const SparseVec& x, int e, const SparseVec& y) const;
};

/// Structure constants stored per pair of degrees.
class TableAlgebra : public GradedAlgebra {
 public:
  TableAlgebra() = default;
  /// table[d][e][i * dim(e) + k] = b^d_i b^e_k, for d + e <= window.
  TableAlgebra(std::vector<std::vector<std::string>> labels,
               std::vector<std::vector<std::vector<SparseVec>>> table);

  int window() const override { return static_cast<int>(labels_.size()) - 1; }
  std::size_t dim(int d) const override { return labels_.at(d).size(); }
  std::string label(int d, std::size_t i) const override { return labels_.at(d).at(i); }
  SparseVec product(int d, std::size_t i, int e, std::size_t k) const override;
  std::vector<std::pair<int, SparseVec>> generators() const override;

  /// Associativity on all basis triples within the window.
  bool associative() const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<SparseVec>>> table_;
};

/// kQ/I through its Gröbner basis: normal words are the basis.
class PresentedAlgebra : public GradedAlgebra {
 public:
  /// Normal words up to `window`; products are available up to the
  /// Gröbner bound. Requires homogeneous relations.
  PresentedAlgebra(GradedPresentation p, int window, int productWindow);

  int window() const override { return window_; }
  int productWindow() const override { return gb_.bound(); }
  std::size_t dim(int d) const override { return words_.at(d).size(); }
  std::string label(int d, std::size_t i) const override { return words_.at(d).at(i).str(); }
  SparseVec product(int d, std::size_t i, int e, std::size_t k) const override;
  std::vector<std::pair<int, SparseVec>> generators() const override;
  std::vector<int> fineDegree(int d, std::size_t i) const override;

  const GradedPresentation& presentation() const { return p_; }
  const GroebnerBasis& gb() const { return gb_; }
  const Path& word(int d, std::size_t i) const { return words_.at(d).at(i); }
  /// Coordinates of an element in degree d (words interned on demand above
  /// the window).
  SparseVec coordinates(int d, const PathElement& x) const;
  /// Arrow weights spanning the lattice of gradings making every relation
  /// homogeneous (one vector per arrow).
  const std::vector<std::vector<int>>& arrowWeights() const { return weights_; }

 private:
  std::uint32_t indexOf(int d, const Path& w) const;

  GradedPresentation p_;
  GroebnerBasis gb_;
  int window_;
  std::vector<std::vector<Path>> words_;
  mutable std::vector<std::unordered_map<Path, std::uint32_t, PathHash>> index_;
  mutable std::vector<std::uint32_t> nextIndex_;
  std::vector<std::vector<int>> weights_;
};

/// Integer basis of arrow weightings w with every relation homogeneous.
std::vector<std::vector<int>> homogeneityLattice(const GradedPresentation& p);

/// "c*label + ..." in degree d.
std::string formatElement(const GradedAlgebra& G, int d, const SparseVec& x);

}  // namespace qfg
