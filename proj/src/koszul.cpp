#include "qfg/koszul.hpp"

#include <random>
#include <set>

#include "qfg/error.hpp"

namespace qfg {

long long BigradedExtTable::at(int i, int j) const {
  auto it = dims.find({i, j});
  return it == dims.end() ? 0 : it->second;
}

std::vector<int> BigradedExtTable::window(int i) const {
  std::set<int> js;
  if (resolution && i < resolution->terms())
    for (auto [v, s] : resolution->F[i].summands()) js.insert(s);
  return {js.begin(), js.end()};
}

BigradedExtTable gradedExtTable(const GradedModule& T, int iBound) {
  for (std::size_t m = 0; m < T.dim(); ++m)
    if (T.degree(m) != 0) throw ParameterError("T must be concentrated in degree 0");
  BigradedExtTable tbl;
  tbl.iBound = iBound;
  tbl.T = T;
  tbl.resolution = std::make_shared<Resolution>(projectiveResolution(T, iBound + 1));
  std::map<int, std::unique_ptr<HomComplex>> homs;
  for (int i = 0; i <= iBound; ++i)
    for (int j : tbl.window(i)) {
      auto& h = homs[j];
      if (!h) h = std::make_unique<HomComplex>(*tbl.resolution, T, j);
      long long d;
      try {
        d = h->extDim(i);
      } catch (const InconclusiveError&) {
        throw InconclusiveError("resolution too short for Ext^" + std::to_string(i));
      }
      if (d) tbl.dims[{i, j}] = d;
    }
  return tbl;
}

OrthogonalityVerdict orthogonalityCheck(const BigradedExtTable& tbl, int n) {
  OrthogonalityVerdict out;
  for (const auto& [ij, d] : tbl.dims)
    if (d != 0 && ij.first != n * ij.second) {
      out.orthogonal = false;
      out.i = ij.first;
      out.j = ij.second;
      out.dim = d;
      return out;
    }
  return out;
}

std::vector<long long> koszulDualDimensions(const BigradedExtTable& tbl, int n, int degreeBound) {
  std::vector<long long> out;
  for (int i = 0; i <= degreeBound && n * i <= tbl.iBound; ++i) out.push_back(tbl.at(n * i, i));
  return out;
}

std::shared_ptr<TableAlgebra> koszulDual(const BigradedExtTable& tbl, int n, int degreeBound) {
  if (n < 1) throw ParameterError("n must be positive");
  OrthogonalityVerdict o = orthogonalityCheck(tbl, n);
  if (!o.orthogonal)
    throw StructuralError("not graded " + std::to_string(n) + "Z-orthogonal: Ext^" + std::to_string(o.i) + "(T, T<" +
                          std::to_string(o.j) + ">) has dimension " + std::to_string(o.dim));
  degreeBound = std::min(degreeBound, tbl.iBound / n);
  const Resolution& P = *tbl.resolution;
  const GradedModule& T = tbl.T;

  std::vector<std::unique_ptr<HomComplex>> hom;
  std::vector<Subquotient> ext;
  std::vector<std::vector<std::string>> labels;
  for (int a = 0; a <= degreeBound; ++a) {
    hom.push_back(std::make_unique<HomComplex>(P, T, a));
    ext.push_back(hom[a]->ext(n * a));
    std::vector<std::string> ls;
    for (std::size_t k = 0; k < ext[a].dim(); ++k) ls.push_back("x" + std::to_string(a) + "_" + std::to_string(k));
    labels.push_back(std::move(ls));
  }

  std::vector<std::vector<std::vector<SparseVec>>> table(degreeBound + 1);
  for (int a = 0; a <= degreeBound; ++a) {
    table[a].resize(degreeBound - a + 1);
    for (int b = 0; a + b <= degreeBound; ++b) table[a][b].resize(ext[a].dim() * ext[b].dim());
  }
  // images of the generators of P_p under each representative x
  std::vector<std::vector<std::vector<SparseVec>>> xImages(degreeBound + 1);
  for (int a = 0; a <= degreeBound; ++a)
    for (const auto& x : ext[a].reps()) xImages[a].push_back(hom[a]->evaluate(n * a, x));

  LiftSolver solver(P);
  for (int b = 0; b <= degreeBound; ++b) {
    int q = n * b;
    for (std::size_t k = 0; k < ext[b].dim(); ++k) {
      auto lift = liftChainMap(P, q, hom[b]->evaluate(q, ext[b].reps()[k]), solver, n * (degreeBound - b), b);
      for (int a = 0; a + b <= degreeBound; ++a) {
        int p = n * a;
        const FreeModule& Pp = P.F[p];
        const FreeModule& Ppq = P.F[p + q];
        for (std::size_t i = 0; i < ext[a].dim(); ++i) {
          const auto& xi = xImages[a][i];
          std::vector<SparseVec> images(Ppq.gens());
          for (std::size_t g = 0; g < Ppq.gens(); ++g)
            for (const auto& e : lift.at(p)[g]) {
              const SparseVec& img = xi[Pp.genOf(e.index)];
              if (!img.empty()) sparse::axpy(images[g], e.value, T.mul(img, Pp.basisOf(e.index)));
            }
          SparseVec cochain = hom[a + b]->fromImages(p + q, images);
          table[a][b][i * ext[b].dim() + k] = ext[a + b].coordinates(std::move(cochain));
        }
      }
    }
  }
  return std::make_shared<TableAlgebra>(std::move(labels), std::move(table));
}

SymmetryVerdict gradedSymmetricCheck(const FDAlgebra& A) {
  SymmetryVerdict out;
  int a = A.highestDegree();
  out.highestDegree = a;
  std::size_t N = A.dim();
  std::vector<std::uint32_t> top;
  std::map<std::uint32_t, std::size_t> topPos;
  for (std::uint32_t i = 0; i < N; ++i)
    if (A.degree(i) == a) {
      topPos[i] = top.size();
      top.push_back(i);
    }
  auto pairs = [&](std::size_t i, std::size_t j) { return A.degree(i) + A.degree(j) == a; };

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (!pairs(i, j)) continue;
      std::vector<Scalar> r(top.size(), Scalar(0));
      bool any = false;
      for (const auto& e : A.product(i, j)) r[topPos.at(e.index)] += e.value, any = true;
      for (const auto& e : A.product(j, i)) r[topPos.at(e.index)] -= e.value, any = true;
      if (any) rows.push_back(std::move(r));
    }
  std::vector<std::vector<Scalar>> forms;
  if (rows.empty()) {
    for (std::size_t t = 0; t < top.size(); ++t) {
      std::vector<Scalar> e(top.size(), Scalar(0));
      e[t] = Scalar(1);
      forms.push_back(std::move(e));
    }
  } else {
    Matrix M(rows.size(), top.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < top.size(); ++c) M(r, c) = rows[r][c];
    forms = kernelBasis(M);
  }
  if (forms.empty()) return out;

  auto nondegenerate = [&](const std::vector<Scalar>& t) {
    Matrix G(N, N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (pairs(i, j))
          for (const auto& e : A.product(i, j)) G(i, j) += e.value * t[topPos.at(e.index)];
    return rank(G) == N;
  };
  // A nonzero determinant polynomial has non-roots among small integers;
  // a handful of random points settles it with overwhelming probability.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Scalar> t(top.size(), Scalar(0));
    for (std::size_t f = 0; f < forms.size(); ++f) {
      Scalar c = attempt == 0 && forms.size() == 1 ? Scalar(1) : Scalar(coef(rng));
      for (std::size_t k = 0; k < top.size(); ++k) t[k] += c * forms[f][k];
    }
    if (nondegenerate(t)) {
      out.symmetric = true;
      for (std::size_t k = 0; k < top.size(); ++k)
        if (!t[k].isZero()) out.form.push_back({top[k], t[k]});
      return out;
    }
  }
  out.caveat = forms.size() > 1;
  return out;
}

}  // namespace qfg
