#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qfg/graded.hpp"
#include "qfg/present.hpp"

namespace qfg {

/// A basic algebra with a Peirce-adapted basis plus the data homological
/// routines reuse: the rows e_v A, radical generators and top coefficients.
struct Ring {
  FDAlgebra A;
  std::vector<std::vector<std::uint32_t>> row;  // basis elements of e_v A
  std::vector<std::uint32_t> posInRow;
  /// Peirce-pure homogeneous elements spanning rad modulo rad^2.
  std::vector<SparseVec> radGens;
  /// top[b][u]: b = sum_u top[b][u] e_u modulo the radical.
  std::vector<std::vector<Scalar>> top;

  std::size_t dim() const { return A.dim(); }
  std::size_t vertices() const { return A.vertexCount(); }
  VertexId source(std::uint32_t b) const { return A.peirce(b).first; }
  VertexId target(std::uint32_t b) const { return A.peirce(b).second; }
};
using RingPtr = std::shared_ptr<const Ring>;

/// Throws StructuralError unless A is basic with a Peirce-adapted basis.
RingPtr makeRing(FDAlgebra A);

/// Finite-dimensional graded right module given by the action of every
/// basis element of the ring on every basis vector. Each basis vector is
/// homogeneous and lies in some M e_v.
class GradedModule {
 public:
  GradedModule() = default;
  /// act[b][i] = m_i * b_b.
  GradedModule(RingPtr R, std::vector<int> degree, std::vector<VertexId> vertex,
               std::vector<std::vector<SparseVec>> act);

  const RingPtr& ring() const { return R_; }
  std::size_t dim() const { return degree_.size(); }
  int degree(std::size_t i) const { return degree_[i]; }
  VertexId vertex(std::size_t i) const { return vertex_[i]; }
  const SparseVec& act(std::uint32_t b, std::uint32_t i) const { return act_[b][i]; }
  SparseVec mul(const SparseVec& m, std::uint32_t b) const;
  SparseVec mul(const SparseVec& m, const SparseVec& r) const;

  /// M<j>: a vector of degree d moves to degree d + j.
  GradedModule shifted(int j) const;
  /// Dimension of M e_v summed over degrees.
  std::vector<long long> dimensionVector() const;
  /// Basis indices grouped by (degree, vertex).
  std::map<std::pair<int, VertexId>, std::vector<std::uint32_t>> blocks() const;
  /// Unit, associativity of the action and compatibility of vertices and
  /// degrees; throws StructuralError.
  void validate() const;

 private:
  RingPtr R_;
  std::vector<int> degree_;
  std::vector<VertexId> vertex_;
  std::vector<std::vector<SparseVec>> act_;
};

GradedModule regularModule(const RingPtr& R);
GradedModule projectiveModule(const RingPtr& R, VertexId v, int shift = 0);
/// DA as a right module; b_j* has degree -deg b_j.
GradedModule dualModule(const RingPtr& R);
/// D(A e_v), spanned by the b_j* with b_j ending at v.
GradedModule injectiveModule(const RingPtr& R, VertexId v);
GradedModule simpleModule(const RingPtr& R, VertexId v, int degree = 0);
/// A / rad A.
GradedModule topModule(const RingPtr& R);
/// Λ_0 = Λ / Λ_{>0} as a graded Λ-module.
GradedModule degreeZeroModule(const RingPtr& R);
GradedModule directSum(const std::vector<GradedModule>& parts);
/// Z / B for graded submodules B ⊂ Z of M given by spanning vectors.
GradedModule subquotientModule(const GradedModule& M, const std::vector<SparseVec>& Z,
                               const std::vector<SparseVec>& B);

/// Z / B inside a coordinate space, with coordinates of cosets.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const std::vector<SparseVec>& Z, const std::vector<SparseVec>& B);
  std::size_t dim() const { return reps_.size(); }
  const std::vector<SparseVec>& reps() const { return reps_; }
  /// Coordinates of z + B on the representatives; throws StructuralError
  /// when z is not in Z + B.
  SparseVec coordinates(SparseVec z) const;

 private:
  SparseEchelon ech_{true};
  std::vector<SparseVec> reps_;
};

/// Direct sum of shifted indecomposable projectives P_v<s>. Coordinate
/// (g, b) is generator g times the basis element b of e_{v_g} A.
class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(RingPtr R) : R_(std::move(R)) {}

  void add(VertexId v, int shift);
  std::size_t gens() const { return genVertex_.size(); }
  VertexId genVertex(std::size_t g) const { return genVertex_[g]; }
  int genDegree(std::size_t g) const { return genDegree_[g]; }
  std::size_t dim() const { return genOf_.size(); }
  std::uint32_t coord(std::size_t g, std::uint32_t b) const {
    return static_cast<std::uint32_t>(offset_[g] + R_->posInRow[b]);
  }
  /// The generator e_{v_g} as a vector.
  SparseVec generator(std::size_t g) const;
  std::size_t genOf(std::uint32_t c) const { return genOf_[c]; }
  std::uint32_t basisOf(std::uint32_t c) const { return R_->row[genVertex_[genOf_[c]]][c - offset_[genOf_[c]]]; }
  int degree(std::uint32_t c) const;
  VertexId vertex(std::uint32_t c) const { return R_->target(basisOf(c)); }
  SparseVec mul(const SparseVec& x, std::uint32_t b) const;
  SparseVec mul(const SparseVec& x, const SparseVec& r) const;
  const RingPtr& ring() const { return R_; }
  GradedModule asModule() const;
  /// Multiset of (vertex, shift) summands.
  std::vector<std::pair<VertexId, int>> summands() const;

 private:
  RingPtr R_;
  std::vector<VertexId> genVertex_;
  std::vector<int> genDegree_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> genOf_;
};

/// Minimal graded projective resolution ... -> F_1 -> F_0 -> M.
struct Resolution {
  GradedModule M;
  std::vector<FreeModule> F;
  /// d[0][g]: image of generator g of F_0 in M; d[i][g] for i >= 1: image of
  /// generator g of F_i in F_{i-1}.
  std::vector<std::vector<SparseVec>> d;
  /// The last term's differential is injective: the resolution is finite.
  bool complete = false;

  int terms() const { return static_cast<int>(F.size()); }
  /// d_i on coordinates of F_i (landing in M for i = 0).
  SparseVec apply(int i, const SparseVec& x) const;
  /// Projective dimension when complete, -1 otherwise.
  int projectiveDimension() const;
};

/// Computes F_0..F_steps, stopping early when a syzygy vanishes.
Resolution projectiveResolution(const GradedModule& M, int steps);

/// Solves d_i(x) = y blockwise against a resolution, memoizing the echelon
/// forms of each (level, degree, vertex) block.
class LiftSolver {
 public:
  explicit LiftSolver(const Resolution& Q) : Q_(Q) {}
  /// x in F_level with d_level(x) = y; y must be homogeneous of the given
  /// degree and vertex. Throws StructuralError when y is not an image.
  SparseVec solve(int level, int degree, VertexId v, SparseVec y);
  const Resolution& resolution() const { return Q_; }

 private:
  struct Block {
    SparseEchelon ech{true};
    std::vector<std::uint32_t> coords;
  };
  const Resolution& Q_;
  std::map<std::tuple<int, int, VertexId>, Block> cache_;
};

/// Lifts a map out of generators of P_start into Q.M<shift> (a cocycle, or
/// a module map when start = 0) to maps P_{start+k} -> Q_k<shift>.
/// Result[k][g] is the image of generator g of P_{start+k} in Q_k.
std::vector<std::vector<SparseVec>> liftChainMap(const Resolution& P, int start,
                                                 const std::vector<SparseVec>& initial, LiftSolver& Q,
                                                 int levels, int shift);

/// Hom_gr(P_i, N<shift>) for a resolution P. Cochain coordinate t at level
/// i sends generator g to the basis vector m of N and kills the others.
class HomComplex {
 public:
  HomComplex(const Resolution& P, const GradedModule& N, int shift);

  std::size_t cochainDim(int i) const { return level(i).basis.size(); }
  std::pair<std::size_t, std::uint32_t> cochainBasis(int i, std::size_t t) const { return level(i).basis[t]; }
  SparseVec coboundary(int i, const SparseVec& phi) const;
  std::vector<SparseVec> evaluate(int i, const SparseVec& phi) const;
  SparseVec fromImages(int i, const std::vector<SparseVec>& images) const;
  /// dim Ext^i(M, N<shift>); needs P_{i+1} or a complete resolution.
  long long extDim(int i) const;
  /// Cocycles modulo coboundaries at level i.
  Subquotient ext(int i) const;
  const Resolution& resolution() const { return P_; }
  const GradedModule& target() const { return N_; }
  int shift() const { return shift_; }

 private:
  struct Level {
    bool built = false;
    std::vector<std::pair<std::size_t, std::uint32_t>> basis;
    std::vector<std::vector<std::uint32_t>> index;  // [g][m] -> t + 1, 0 if absent
  };
  const Level& level(int i) const;
  std::vector<SparseVec> coboundaryImages(int i) const;
  std::size_t coboundaryRank(int i) const;

  const Resolution& P_;
  GradedModule N_;
  int shift_;
  mutable std::deque<Level> levels_;
  mutable std::map<int, std::size_t> ranks_;
};

/// Bounded complex of modules; maps[k] sends terms[k] to terms[k+1], as
/// images of basis vectors.
struct BoundedComplex {
  int lowest = 0;
  std::vector<GradedModule> terms;
  std::vector<std::vector<SparseVec>> maps;

  int highest() const { return lowest + static_cast<int>(terms.size()) - 1; }
  /// d^2 = 0 and every differential is a module map.
  bool isComplex() const;
  /// H^lowest .. H^highest as modules.
  std::vector<GradedModule> homology() const;
  /// Cohomological shift [i]: X[i]^k = X^{k+i}.
  BoundedComplex shifted(int i) const;
};

/// Complex whose terms are sums of indecomposable projectives or injectives
/// P_v<s> / I_v<s>. A map term[k] -> term[k+1] sends generator g to
/// sum c (h, b): for projectives g -> sum c h b, for injectives the same
/// element b acts from the left, I_{v_g} -> I_{v_h}.
struct SummandComplex {
  enum class Kind { Projective, Injective } kind = Kind::Projective;
  RingPtr R;
  int lowest = 0;
  std::vector<FreeModule> terms;
  std::vector<std::vector<SparseVec>> maps;

  BoundedComplex realize() const;
};

enum class Direction { Forward, Inverse };

/// Resolution P_steps -> ... -> P_0 placed in degrees -steps..0.
SummandComplex resolutionComplex(const Resolution& P);
/// Termwise Nakayama: P_v <-> I_v with the same connecting elements.
SummandComplex nakayama(const SummandComplex& X, Direction dir);

/// Ext^*(DA, -) with right module structures from lifted left
/// multiplications on DA = sum_v I_v.
class InverseNakayama {
 public:
  /// Resolves each I_v; throws StructuralError when a resolution does not
  /// terminate within `window` steps.
  InverseNakayama(RingPtr A, int window);

  struct ExtModule {
    GradedModule module;
    GradedModule source;
    int level = 0;
    std::vector<std::shared_ptr<HomComplex>> hom;  // per vertex
    std::vector<Subquotient> quotient;             // per vertex
    std::vector<std::size_t> offset;               // per vertex
  };

  int globalBound() const { return maxPd_; }
  ExtModule ext(int i, const GradedModule& X) const;
  std::vector<long long> extDims(const GradedModule& X) const;
  /// Ext^i(DA, f) for f: src.source -> dst.source given by images of basis vectors.
  std::vector<SparseVec> extMap(const ExtModule& src, const ExtModule& dst, const std::vector<SparseVec>& f) const;

 private:
  RingPtr R_;
  int maxPd_ = 0;
  std::vector<Resolution> res_;
  std::vector<std::unique_ptr<LiftSolver>> solvers_;
  /// lambda_[a][k][g]: lift of left multiplication by basis element a,
  /// I_w -> I_u, on generator g of P_k(I_w), in P_k(I_u).
  std::vector<std::vector<std::vector<SparseVec>>> lambda_;
};

/// Homology of ν(X) (forward: H^{-i} = Tor_i(X, DA), listed from degree
/// -steps) or of ν^{-1}(X) (inverse: H^i = Ext^i(DA, X), from degree 0).
struct NakayamaHomology {
  int lowest = 0;
  std::vector<GradedModule> H;
};
NakayamaHomology nakayamaHomology(const GradedModule& X, Direction dir, int window);

/// max pd of the simples if every resolution terminates within `window`.
std::optional<int> globalDimension(const RingPtr& R, int window);

/// Cartan matrix C[v][w] = dim e_v A e_w.
Matrix cartanMatrix(const Ring& R);
/// (-1)^n x C^{-T} C: the class of ν_n^{-1} on dimension vectors.
std::vector<long long> coxeterInverse(const Ring& R, const std::vector<long long>& x, int n);

struct NRIResult {
  bool passes = false;
  int n = 0;
  int horizon = 0;
  std::optional<int> globalDimension;
  int failedAt = -1;       // first j with homology off degree 0
  int failedDegree = 0;    // a cohomological degree carrying that homology
  std::string reason;
  /// dims[j][v]: dimension vector of ν_n^{-j}(P_v), j = 0..last computed.
  std::vector<std::vector<std::vector<long long>>> dims;
  std::vector<std::vector<std::vector<long long>>> coxeter;
  bool coxeterAgrees = true;
};
NRIResult nRepInfiniteTest(const FDAlgebra& A, int n, int horizon);

/// ⊕_i Hom(A, ν_n^{-i} A) for i <= degreeBound with composition.
/// Throws StructuralError if A fails nRepInfiniteTest within the bound.
std::shared_ptr<TableAlgebra> preprojective(const FDAlgebra& A, int n, int degreeBound);

/// Presented (n+1)-preprojective algebra of B = kQ/I with gldim B <= n:
/// the doubled quiver with mesh relations for n = 1, the Jacobian algebra
/// of sum ρ ρ* over minimal relations ρ for n = 2. Dual arrows in degree 1.
GradedPresentation preprojectivePresentation(const GradedPresentation& B, int n);

}  // namespace qfg
