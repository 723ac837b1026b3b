#include <algorithm>

#include "qfg/centerfg.hpp"
#include "qfg/error.hpp"

namespace qfg {

const char* outcomeName(FgVerdict::Outcome o) {
  switch (o) {
    case FgVerdict::Outcome::HoldsAtBound: return "holds-at-bound";
    case FgVerdict::Outcome::RefutedAtBound: return "refuted-at-bound";
    default: return "inconclusive";
  }
}

namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructuralError& e) {
    throw StructuralError(std::string(name) + ": " + e.what());
  } catch (const ParameterError& e) {
    throw ParameterError(std::string(name) + ": " + e.what());
  } catch (const InconclusiveError& e) {
    throw InconclusiveError(std::string(name) + ": " + e.what());
  }
}

bool prefixEqual(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::size_t k = std::min(a.size(), b.size());
  return std::equal(a.begin(), a.begin() + static_cast<long>(k), b.begin());
}

}  // namespace

FgVerdict fgVerdict(const GradedPresentation& L, int n, const FgBounds& bounds) {
  if (n < 1) throw ParameterError("n must be positive");
  FgVerdict v;
  v.n = n;
  v.bounds = bounds;

  FDAlgebra Lambda = stage("symmetry", [&] { return algebraFromPresentation(L); });
  GradedPresentation B = stage("symmetry", [&] { return degreeZeroPresentation(L); });
  v.symmetry = stage("symmetry", [&] { return gradedSymmetricCheck(Lambda); });
  if (!v.symmetry.symmetric)
    throw StructuralError(std::string("symmetry: not graded symmetric") +
                          (v.symmetry.caveat ? " (no nondegenerate form found among sampled points)" : ""));
  int a = v.symmetry.highestDegree;
  if (a < 1) throw StructuralError("symmetry: concentrated in degree 0");
  if (a > 1) {
    v.quasiVeronese = true;
    v.warnings.push_back("highest degree " + std::to_string(a) + ": continuing with the quasi-Veronese");
    Lambda = stage("quasi-veronese", [&] { return quasiVeronese(Lambda, a); });
    B = stage("quasi-veronese", [&] { return degreeZeroPresentation(gabrielPresentation(Lambda, 2 * a + 4)); });
  }

  FDAlgebra A0 = stage("degree-zero", [&] { return algebraFromPresentation(B); });
  v.nri = stage("n-representation-infinite", [&] { return nRepInfiniteTest(A0, n, bounds.horizon); });
  if (!v.nri.passes) {
    v.reason = "degree-0 part is not " + std::to_string(n) + "-representation infinite: " + v.nri.reason;
    return v;
  }

  RingPtr R = stage("ring", [&] { return makeRing(Lambda); });
  BigradedExtTable tbl = stage("ext", [&] { return gradedExtTable(degreeZeroModule(R), bounds.ext); });
  v.orthogonality = orthogonalityCheck(tbl, n + 1);
  if (!v.orthogonality->orthogonal) {
    v.reason = "Ext^" + std::to_string(v.orthogonality->i) + "(T, T<" + std::to_string(v.orthogonality->j) +
               ">) != 0 off the line i = " + std::to_string(n + 1) + "j";
    return v;
  }

  v.dualWindow = std::min(bounds.dual, bounds.ext / (n + 1));
  if (v.dualWindow < bounds.dual)
    v.warnings.push_back("dual window capped at " + std::to_string(v.dualWindow) + " by the Ext bound");
  if (v.dualWindow < 1) {
    v.reason = "Ext bound " + std::to_string(bounds.ext) + " leaves no positive degree of the dual to compare";
    return v;
  }
  auto dual = stage("dual", [&] { return koszulDual(tbl, n + 1, v.dualWindow); });
  v.dualDimensions = dual->dimensions();
  v.preprojectiveDimensions = stage("preprojective", [&] { return preprojective(A0, n, v.dualWindow)->dimensions(); });
  if (v.dualDimensions != v.preprojectiveDimensions)
    throw StructuralError("dual: graded dimensions differ from the preprojective algebra");

  std::unique_ptr<PresentedAlgebra> model;
  const GradedAlgebra* G = dual.get();
  int D = bounds.center;
  if (n <= 2) {
    model = stage("center", [&] {
      return std::make_unique<PresentedAlgebra>(preprojectivePresentation(B, n), D, D + 1);
    });
    v.modelDimensions = model->dimensions();
    if (!prefixEqual(v.modelDimensions, v.dualDimensions))
      throw StructuralError("center: presented model disagrees with the dual");
    G = model.get();
  } else {
    D = std::min(D, v.dualWindow - 1);
    v.warnings.push_back("no presented model for n > 2: center computed on the dual up to degree " +
                         std::to_string(D));
  }

  CenterTruncation C = stage("center", [&] { return centerTruncation(*G, D, CenterFlavor::Graded, n + 1); });
  CenterTruncation C2 = veroneseOfCenter(C, 2);
  v.centerDimensions = C.dimensions();
  v.veroneseDimensions = C2.dimensions();
  for (std::size_t k = 0; k < C.basis.size(); ++k) {
    std::vector<std::string> els;
    for (const auto& z : C.basis[k]) els.push_back(formatElement(*G, C.degree(k), z));
    v.centerElements.push_back(std::move(els));
  }
  int gen = std::min(bounds.gen, D);
  v.witness = stage("witness", [&] { return moduleFinitenessWitness(*G, C2, gen, D); });
  for (const auto& [d, g] : v.witness->generators) v.generatorLabels.push_back(formatElement(*G, d, g));
  switch (v.witness->outcome) {
    case FinitenessWitness::Outcome::Witness:
      v.witnessVerified = verifyWitness(*G, C2, *v.witness);
      if (!v.witnessVerified) {
        v.reason = "witness failed its rank recheck";
        break;
      }
      v.outcome = FgVerdict::Outcome::HoldsAtBound;
      v.reason = "dual generated over the 2-Veronese of its graded center by " +
                 std::to_string(v.witness->generators.size()) + " elements of degree <= " + std::to_string(gen) +
                 ", checked to degree " + std::to_string(D);
      break;
    case FinitenessWitness::Outcome::Refuted:
      v.outcome = FgVerdict::Outcome::RefutedAtBound;
      v.reason = v.witness->reason;
      break;
    default:
      v.reason = v.witness->reason;
  }
  v.warnings.push_back("noetherianity of the center is not checked separately");
  return v;
}

}  // namespace qfg
