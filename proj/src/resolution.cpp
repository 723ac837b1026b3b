#include <algorithm>
#include <functional>

#include "qfg/error.hpp"
#include "qfg/modcplx.hpp"

namespace qfg {

void FreeModule::add(VertexId v, int shift) {
  std::size_t g = genVertex_.size();
  genVertex_.push_back(v);
  genDegree_.push_back(shift);
  offset_.push_back(genOf_.size());
  genOf_.insert(genOf_.end(), R_->row[v].size(), g);
}

SparseVec FreeModule::generator(std::size_t g) const {
  std::vector<Entry> es;
  for (const auto& e : R_->A.idempotents()[genVertex_[g]]) es.push_back({coord(g, e.index), e.value});
  return sparse::normalize(std::move(es));
}

int FreeModule::degree(std::uint32_t c) const { return genDegree_[genOf_[c]] + R_->A.degree(basisOf(c)); }

SparseVec FreeModule::mul(const SparseVec& x, std::uint32_t b) const {
  std::vector<Entry> es;
  for (const auto& e : x) {
    std::size_t g = genOf_[e.index];
    for (const auto& p : R_->A.product(basisOf(e.index), b)) es.push_back({coord(g, p.index), e.value * p.value});
  }
  return sparse::normalize(std::move(es));
}

SparseVec FreeModule::mul(const SparseVec& x, const SparseVec& r) const {
  SparseVec out;
  for (const auto& e : r) sparse::axpy(out, e.value, mul(x, e.index));
  return out;
}

GradedModule FreeModule::asModule() const {
  std::vector<int> deg(dim());
  std::vector<VertexId> ver(dim());
  std::vector<std::vector<SparseVec>> act(R_->dim(), std::vector<SparseVec>(dim()));
  for (std::uint32_t c = 0; c < dim(); ++c) {
    deg[c] = degree(c);
    ver[c] = vertex(c);
    for (std::uint32_t b = 0; b < R_->dim(); ++b) act[b][c] = mul(sparse::unit(c), b);
  }
  return GradedModule(R_, deg, ver, act);
}

std::vector<std::pair<VertexId, int>> FreeModule::summands() const {
  std::vector<std::pair<VertexId, int>> out;
  for (std::size_t g = 0; g < gens(); ++g) out.push_back({genVertex_[g], genDegree_[g]});
  std::sort(out.begin(), out.end());
  return out;
}

SparseVec Resolution::apply(int i, const SparseVec& x) const {
  const FreeModule& Fi = F[i];
  SparseVec out;
  for (const auto& e : x) {
    const SparseVec& img = d[i][Fi.genOf(e.index)];
    std::uint32_t b = Fi.basisOf(e.index);
    sparse::axpy(out, e.value, i == 0 ? M.mul(img, b) : F[i - 1].mul(img, b));
  }
  return out;
}

int Resolution::projectiveDimension() const { return complete ? terms() - 1 : -1; }

namespace {

using MulFn = std::function<SparseVec(const SparseVec&, std::uint32_t)>;

// Complement of N·rad inside N, from block-pure spanning vectors of N.
std::vector<SparseVec> minimalGenerators(const std::vector<SparseVec>& N, const Ring& R, const MulFn& mul) {
  SparseEchelon ech;
  std::vector<SparseVec> prods(N.size() * R.radGens.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < prods.size(); ++k) {
    const SparseVec& n = N[k / R.radGens.size()];
    SparseVec out;
    for (const auto& e : R.radGens[k % R.radGens.size()]) sparse::axpy(out, e.value, mul(n, e.index));
    prods[k] = std::move(out);
  }
  for (auto& p : prods)
    if (!p.empty()) ech.insert(std::move(p));
  std::vector<SparseVec> gens;
  for (const auto& n : N)
    if (ech.insert(n)) gens.push_back(n);
  return gens;
}

}  // namespace

Resolution projectiveResolution(const GradedModule& M, int steps) {
  const RingPtr& R = M.ring();
  Resolution res;
  res.M = M;
  std::vector<SparseVec> N;
  for (std::uint32_t i = 0; i < M.dim(); ++i) N.push_back(sparse::unit(i));
  for (int i = 0; i <= steps; ++i) {
    if (N.empty()) {
      res.complete = true;
      return res;
    }
    MulFn mul = i == 0 ? MulFn([&](const SparseVec& x, std::uint32_t b) { return M.mul(x, b); })
                       : MulFn([&res, i](const SparseVec& x, std::uint32_t b) { return res.F[i - 1].mul(x, b); });
    auto blockOf = [&](std::uint32_t c) -> std::pair<int, VertexId> {
      if (i == 0) return {M.degree(c), M.vertex(c)};
      return {res.F[i - 1].degree(c), res.F[i - 1].vertex(c)};
    };
    std::vector<SparseVec> gens = minimalGenerators(N, *R, mul);
    FreeModule Fi(R);
    for (const auto& g : gens) {
      auto [deg, v] = blockOf(g[0].index);
      Fi.add(v, deg);
    }
    res.F.push_back(std::move(Fi));
    res.d.push_back(std::move(gens));

    const FreeModule& F = res.F.back();
    std::map<std::pair<int, VertexId>, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t c = 0; c < F.dim(); ++c) blocks[{F.degree(c), F.vertex(c)}].push_back(c);
    std::vector<const std::vector<std::uint32_t>*> list;
    for (const auto& [k, cs] : blocks) list.push_back(&cs);
    std::vector<std::vector<SparseVec>> kernels(list.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto& cs = *list[k];
      std::vector<SparseVec> cols;
      cols.reserve(cs.size());
      for (auto c : cs) cols.push_back(res.apply(i, sparse::unit(c)));
      for (auto& rel : sparseKernel(cols)) {
        for (auto& e : rel) e.index = cs[e.index];
        kernels[k].push_back(sparse::normalize(std::move(rel)));
      }
    }
    N.clear();
    for (auto& ks : kernels)
      for (auto& v : ks) N.push_back(std::move(v));
  }
  res.complete = N.empty();
  return res;
}

SparseVec LiftSolver::solve(int level, int degree, VertexId v, SparseVec y) {
  if (y.empty()) return {};
  if (level >= Q_.terms()) throw StructuralError("lift needs a term beyond the computed resolution");
  auto key = std::make_tuple(level, degree, v);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    Block blk;
    const FreeModule& F = Q_.F[level];
    for (std::uint32_t c = 0; c < F.dim(); ++c)
      if (F.degree(c) == degree && F.vertex(c) == v) {
        blk.ech.insertTracked(Q_.apply(level, sparse::unit(c)),
                              sparse::unit(static_cast<std::uint32_t>(blk.coords.size())));
        blk.coords.push_back(c);
      }
    it = cache_.emplace(key, std::move(blk)).first;
  }
  SparseVec comb;
  it->second.ech.reduceTracked(y, comb);
  if (!y.empty()) throw StructuralError("map does not lift through the resolution");
  std::vector<Entry> es;
  for (const auto& e : comb) es.push_back({it->second.coords[e.index], -e.value});
  return sparse::normalize(std::move(es));
}

std::vector<std::vector<SparseVec>> liftChainMap(const Resolution& P, int start, const std::vector<SparseVec>& initial,
                                                 LiftSolver& Q, int levels, int shift) {
  const Resolution& T = Q.resolution();
  std::vector<std::vector<SparseVec>> out;
  if (start >= P.terms()) return out;
  const FreeModule& P0 = P.F[start];
  std::vector<SparseVec> cur(P0.gens());
  for (std::size_t g = 0; g < P0.gens(); ++g)
    cur[g] = Q.solve(0, P0.genDegree(g) - shift, P0.genVertex(g), initial.at(g));
  out.push_back(std::move(cur));
  for (int k = 0; k < levels && start + k + 1 < P.terms(); ++k) {
    const FreeModule& Pn = P.F[start + k + 1];
    const FreeModule& Pk = P.F[start + k];
    std::vector<SparseVec> next(Pn.gens());
    for (std::size_t g = 0; g < Pn.gens(); ++g) {
      SparseVec y;
      if (k < T.terms())
        for (const auto& e : P.d[start + k + 1][g]) {
          const SparseVec& img = out[k][Pk.genOf(e.index)];
          if (!img.empty()) sparse::axpy(y, e.value, T.F[k].mul(img, Pk.basisOf(e.index)));
        }
      if (!y.empty()) next[g] = Q.solve(k + 1, Pn.genDegree(g) - shift, Pn.genVertex(g), std::move(y));
    }
    out.push_back(std::move(next));
  }
  return out;
}

HomComplex::HomComplex(const Resolution& P, const GradedModule& N, int shift) : P_(P), N_(N), shift_(shift) {}

const HomComplex::Level& HomComplex::level(int i) const {
  if (i < 0) throw ParameterError("negative cochain level");
  if (static_cast<int>(levels_.size()) <= i) levels_.resize(i + 1);
  Level& L = levels_[i];
  if (L.built) return L;
  L.built = true;
  if (i >= P_.terms()) return L;
  const FreeModule& F = P_.F[i];
  L.index.assign(F.gens(), std::vector<std::uint32_t>(N_.dim(), 0));
  for (std::size_t g = 0; g < F.gens(); ++g)
    for (std::uint32_t m = 0; m < N_.dim(); ++m)
      if (N_.vertex(m) == F.genVertex(g) && N_.degree(m) + shift_ == F.genDegree(g)) {
        L.basis.push_back({g, m});
        L.index[g][m] = static_cast<std::uint32_t>(L.basis.size());
      }
  return L;
}

std::vector<SparseVec> HomComplex::evaluate(int i, const SparseVec& phi) const {
  const Level& L = level(i);
  std::vector<SparseVec> images(i < P_.terms() ? P_.F[i].gens() : 0);
  for (const auto& e : phi) {
    auto [g, m] = L.basis[e.index];
    sparse::axpy(images[g], e.value, sparse::unit(m));
  }
  return images;
}

SparseVec HomComplex::fromImages(int i, const std::vector<SparseVec>& images) const {
  const Level& L = level(i);
  std::vector<Entry> es;
  for (std::size_t g = 0; g < images.size(); ++g)
    for (const auto& e : images[g]) {
      std::uint32_t t = L.index[g][e.index];
      if (t == 0) throw StructuralError("image outside the graded Hom space");
      es.push_back({t - 1, e.value});
    }
  return sparse::normalize(std::move(es));
}

SparseVec HomComplex::coboundary(int i, const SparseVec& phi) const {
  if (i + 1 >= P_.terms()) return {};
  std::vector<SparseVec> images = evaluate(i, phi);
  const FreeModule& Fi = P_.F[i];
  const FreeModule& Fn = P_.F[i + 1];
  std::vector<SparseVec> out(Fn.gens());
  for (std::size_t g = 0; g < Fn.gens(); ++g)
    for (const auto& e : P_.d[i + 1][g]) {
      const SparseVec& img = images[Fi.genOf(e.index)];
      if (!img.empty()) sparse::axpy(out[g], e.value, N_.mul(img, Fi.basisOf(e.index)));
    }
  return fromImages(i + 1, out);
}

std::vector<SparseVec> HomComplex::coboundaryImages(int i) const {
  std::vector<SparseVec> out(cochainDim(i));
  if (i + 1 >= P_.terms() || out.empty()) return out;
  const Level& L = level(i);
  const Level& Ln = level(i + 1);
  const FreeModule& Fi = P_.F[i];
  const FreeModule& Fn = P_.F[i + 1];
  // incidence[g] = (g', b, c): d(g') contains c (g, b)
  std::vector<std::vector<std::tuple<std::size_t, std::uint32_t, Scalar>>> incidence(Fi.gens());
  for (std::size_t g2 = 0; g2 < Fn.gens(); ++g2)
    for (const auto& e : P_.d[i + 1][g2]) incidence[Fi.genOf(e.index)].push_back({g2, Fi.basisOf(e.index), e.value});
  bool outside = false;
#pragma omp parallel for schedule(dynamic) reduction(|| : outside)
  for (std::size_t t = 0; t < out.size(); ++t) {
    auto [g, m] = L.basis[t];
    std::vector<Entry> es;
    for (const auto& [g2, b, c] : incidence[g])
      for (const auto& e : N_.act(b, m)) {
        std::uint32_t s = Ln.index[g2][e.index];
        if (s == 0) {
          outside = true;
          continue;
        }
        es.push_back({s - 1, c * e.value});
      }
    out[t] = sparse::normalize(std::move(es));
  }
  if (outside) throw StructuralError("coboundary outside the graded Hom space");
  return out;
}

std::size_t HomComplex::coboundaryRank(int i) const {
  if (i < 0) return 0;
  auto it = ranks_.find(i);
  if (it != ranks_.end()) return it->second;
  std::size_t r = sparseRank(coboundaryImages(i));
  ranks_[i] = r;
  return r;
}

long long HomComplex::extDim(int i) const {
  if (i < 0) return 0;
  if (i + 1 >= P_.terms() && !P_.complete)
    throw InconclusiveError("resolution too short to determine Ext^" + std::to_string(i), i + 1);
  return static_cast<long long>(cochainDim(i)) - static_cast<long long>(coboundaryRank(i)) -
         static_cast<long long>(coboundaryRank(i - 1));
}

Subquotient HomComplex::ext(int i) const {
  if (i + 1 >= P_.terms() && !P_.complete)
    throw InconclusiveError("resolution too short to determine Ext^" + std::to_string(i), i + 1);
  std::vector<SparseVec> Z;
  if (i + 1 < P_.terms()) {
    Z = sparseKernel(coboundaryImages(i));
  } else {
    for (std::uint32_t t = 0; t < cochainDim(i); ++t) Z.push_back(sparse::unit(t));
  }
  std::vector<SparseVec> B = i > 0 ? coboundaryImages(i - 1) : std::vector<SparseVec>{};
  return Subquotient(Z, B);
}

}  // namespace qfg
