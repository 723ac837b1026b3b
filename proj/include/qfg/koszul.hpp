#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfg/graded.hpp"
#include "qfg/modcplx.hpp"

namespace qfg {

/// dim Ext^i_gr(T, T<j>) for i <= iBound. Cells absent from `dims` are zero:
/// a cochain at level i needs a generator of P_i in degree j.
struct BigradedExtTable {
  int iBound = 0;
  std::map<std::pair<int, int>, long long> dims;
  std::shared_ptr<Resolution> resolution;
  GradedModule T;

  long long at(int i, int j) const;
  /// Internal degrees j of generators of P_i.
  std::vector<int> window(int i) const;
};

BigradedExtTable gradedExtTable(const GradedModule& T, int iBound);

struct OrthogonalityVerdict {
  bool orthogonal = true;
  int i = 0, j = 0;  // first violation in (i, j) order
  long long dim = 0;
};
OrthogonalityVerdict orthogonalityCheck(const BigradedExtTable& tbl, int n);

/// Degree i of the dual has dimension Ext^{ni}(T, T<i>); i <= iBound / n.
std::vector<long long> koszulDualDimensions(const BigradedExtTable& tbl, int n, int degreeBound);

/// ⊕_i Ext^{ni}(T, T<i>) with Yoneda products x·y = x ∘ (lift of y).
/// Throws StructuralError when the table is not graded nZ-orthogonal.
std::shared_ptr<TableAlgebra> koszulDual(const BigradedExtTable& tbl, int n, int degreeBound);

struct SymmetryVerdict {
  bool symmetric = false;
  int highestDegree = 0;
  /// Symmetrizing form on the top degree, indexed by basis elements.
  SparseVec form;
  /// Set when the forms were found but no nondegenerate one was hit.
  bool caveat = false;
};
/// Looks for a form t on Λ_a with t(xy) = t(yx) whose pairing is
/// nondegenerate, i.e. a bimodule isomorphism Λ<-a> ≅ DΛ.
SymmetryVerdict gradedSymmetricCheck(const FDAlgebra& A);

}  // namespace qfg
