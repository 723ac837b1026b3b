#include <algorithm>
#include <map>
#include <unordered_map>

#include "qfg/centerfg.hpp"
#include "qfg/error.hpp"

namespace qfg {

std::vector<long long> CenterTruncation::dimensions() const {
  std::vector<long long> out;
  for (const auto& b : basis) out.push_back(static_cast<long long>(b.size()));
  return out;
}

bool CenterTruncation::zeroInPositiveDegrees() const {
  for (std::size_t k = 1; k < basis.size(); ++k)
    if (!basis[k].empty()) return false;
  return true;
}

namespace {

Scalar commutationSign(CenterFlavor flavor, int w, int d, int e) {
  if (flavor == CenterFlavor::Plain) return Scalar(1);
  return (static_cast<long long>(w) * d * e) % 2 ? Scalar(-1) : Scalar(1);
}

// Combines the vectors K with the coefficient vectors ker.
std::vector<SparseVec> combine(const std::vector<SparseVec>& K, const std::vector<SparseVec>& ker) {
  std::vector<SparseVec> out;
  for (const auto& c : ker) {
    SparseVec z;
    for (const auto& e : c) sparse::axpy(z, e.value, K[e.index]);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

CenterTruncation centerTruncation(const GradedAlgebra& G, int D, CenterFlavor flavor, int signWeight) {
  if (D < 0 || D > G.window()) throw ParameterError("center window exceeds the algebra window");
  auto gens = G.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.first);
  if (D + top > G.productWindow())
    throw ParameterError("products known to degree " + std::to_string(G.productWindow()) + ", need " +
                         std::to_string(D + top));

  CenterTruncation C;
  C.flavor = flavor;
  C.signWeight = signWeight;
  C.basis.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    std::map<std::vector<int>, std::vector<std::uint32_t>> blocks;
    for (std::size_t i = 0; i < G.dim(d); ++i) blocks[G.fineDegree(d, i)].push_back(static_cast<std::uint32_t>(i));
    for (const auto& [fine, idx] : blocks) {
      std::vector<SparseVec> K;
      for (auto i : idx) K.push_back(sparse::unit(i));
      for (const auto& [e, y] : gens) {
        if (K.empty()) break;
        Scalar s = commutationSign(flavor, signWeight, d, e);
        // commutator columns of single words, computed on demand
        std::unordered_map<std::uint32_t, SparseVec> unitCols;
        auto column = [&](std::uint32_t i) -> const SparseVec& {
          auto it = unitCols.find(i);
          if (it != unitCols.end()) return it->second;
          SparseVec u = sparse::unit(i);
          SparseVec c = G.multiply(d, u, e, y);
          sparse::axpy(c, -s, G.multiply(e, y, d, u));
          return unitCols.emplace(i, std::move(c)).first->second;
        };
        std::vector<SparseVec> cols;
        cols.reserve(K.size());
        for (const auto& z : K) {
          SparseVec c;
          for (const auto& t : z) sparse::axpy(c, t.value, column(t.index));
          cols.push_back(std::move(c));
        }
        K = combine(K, sparseKernel(cols));
      }
      for (auto& z : K) C.basis[d].push_back(std::move(z));
    }
  }
  return C;
}

CenterTruncation veroneseOfCenter(const CenterTruncation& C, int l) {
  if (l < 1) throw ParameterError("Veronese index must be positive");
  CenterTruncation out = C;
  out.step = C.step * l;
  out.basis.clear();
  for (std::size_t k = 0; k < C.basis.size(); k += l) out.basis.push_back(C.basis[k]);
  return out;
}

bool verifyCentral(const GradedAlgebra& G, const CenterTruncation& C) {
  for (std::size_t k = 0; k < C.basis.size(); ++k) {
    int d = C.degree(k);
    for (const auto& z : C.basis[k])
      for (int e = 0; d + e <= G.productWindow() && e <= G.window(); ++e) {
        Scalar s = commutationSign(C.flavor, C.signWeight, d, e);
        for (std::size_t y = 0; y < G.dim(e); ++y) {
          SparseVec u = sparse::unit(static_cast<std::uint32_t>(y));
          SparseVec c = G.multiply(d, z, e, u);
          sparse::axpy(c, -s, G.multiply(e, u, d, z));
          if (!c.empty()) return false;
        }
      }
  }
  return true;
}

namespace {

const std::vector<SparseVec>* centerAt(const CenterTruncation& C, int e) {
  if (e % C.step) return nullptr;
  std::size_t k = static_cast<std::size_t>(e / C.step);
  return k < C.basis.size() ? &C.basis[k] : nullptr;
}

}  // namespace

FinitenessWitness moduleFinitenessWitness(const GradedAlgebra& G, const CenterTruncation& C, int genDegBound,
                                          int checkDegBound) {
  if (checkDegBound > G.window()) throw ParameterError("check bound exceeds the algebra window");
  if (genDegBound > checkDegBound) throw ParameterError("generator bound exceeds the check bound");
  FinitenessWitness w;
  w.genDegBound = genDegBound;
  w.checkDegBound = checkDegBound;

  for (int d = 0; d <= genDegBound; ++d) {
    SparseEchelon ech;
    for (int e = 1; e <= d; ++e)
      if (auto Ce = centerAt(C, e))
        for (const auto& z : *Ce)
          for (std::size_t x = 0; x < G.dim(d - e); ++x)
            ech.insert(G.multiply(e, z, d - e, sparse::unit(static_cast<std::uint32_t>(x))));
    for (std::size_t i = 0; i < G.dim(d); ++i) {
      SparseVec u = sparse::unit(static_cast<std::uint32_t>(i));
      if (ech.insert(u)) w.generators.push_back({d, std::move(u)});
    }
  }

  int lastCenter = C.degree(C.basis.size() - 1);
  bool zero = C.zeroInPositiveDegrees();
  for (int d = genDegBound + 1; d <= checkDegBound; ++d) {
    SparseEchelon ech;
    for (const auto& [gd, g] : w.generators)
      if (auto Ce = centerAt(C, d - gd))
        for (const auto& z : *Ce) ech.insert(G.multiply(d - gd, z, gd, g));
    if (ech.rank() < G.dim(d)) {
      w.failedDegree = d;
      w.spanned = static_cast<long long>(ech.rank());
      w.needed = static_cast<long long>(G.dim(d));
      if (zero && lastCenter >= checkDegBound && G.dim(checkDegBound) > 0) {
        w.outcome = FinitenessWitness::Outcome::Refuted;
        w.reason = "center vanishes in degrees 1.." + std::to_string(checkDegBound) + " while dim G_" +
                   std::to_string(checkDegBound) + " = " + std::to_string(G.dim(checkDegBound));
      } else {
        w.reason = "central action spans " + std::to_string(w.spanned) + " of " + std::to_string(w.needed) +
                   " dimensions in degree " + std::to_string(d);
      }
      w.generators.clear();
      return w;
    }
  }
  w.outcome = FinitenessWitness::Outcome::Witness;
  return w;
}

bool verifyWitness(const GradedAlgebra& G, const CenterTruncation& C, const FinitenessWitness& w) {
  if (w.outcome != FinitenessWitness::Outcome::Witness) return false;
  for (int d = 0; d <= w.checkDegBound; ++d) {
    std::vector<SparseVec> span;
    for (const auto& [gd, g] : w.generators)
      if (auto Ce = centerAt(C, d - gd))
        for (const auto& z : *Ce) span.push_back(G.multiply(d - gd, z, gd, g));
    if (sparseRank(span) != G.dim(d)) return false;
  }
  return true;
}

const char* outcomeName(FinitenessWitness::Outcome o) {
  switch (o) {
    case FinitenessWitness::Outcome::Witness: return "witness";
    case FinitenessWitness::Outcome::Refuted: return "refuted-at-bound";
    default: return "inconclusive";
  }
}

}  // namespace qfg
