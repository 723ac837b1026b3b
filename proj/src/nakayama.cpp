#include <algorithm>
#include <set>

#include "qfg/error.hpp"
#include "qfg/modcplx.hpp"
#include "qfg/potential.hpp"

namespace qfg {

namespace {

// Position of b_j* inside I_{target(j)}.
struct InjectiveIndex {
  std::vector<std::vector<std::uint32_t>> members;  // per vertex
  std::vector<std::uint32_t> pos;
  explicit InjectiveIndex(const Ring& R) : members(R.vertices()), pos(R.dim()) {
    for (std::uint32_t j = 0; j < R.dim(); ++j) {
      pos[j] = static_cast<std::uint32_t>(members[R.target(j)].size());
      members[R.target(j)].push_back(j);
    }
  }
};

// left[b][j] = b . b_j* = sum_k (coefficient of b_j in b_k b) b_k*
std::vector<std::vector<SparseVec>> leftActionOnDual(const Ring& R) {
  std::size_t n = R.dim();
  std::vector<std::vector<std::vector<Entry>>> raw(n, std::vector<std::vector<Entry>>(n));
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t b = 0; b < n; ++b)
      for (const auto& e : R.A.product(k, b)) raw[b][e.index].push_back({k, e.value});
  std::vector<std::vector<SparseVec>> out(n, std::vector<SparseVec>(n));
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t j = 0; j < n; ++j) out[b][j] = sparse::normalize(std::move(raw[b][j]));
  return out;
}

SparseVec applyLinear(const std::vector<SparseVec>& images, const SparseVec& x) {
  SparseVec out;
  for (const auto& e : x) sparse::axpy(out, e.value, images[e.index]);
  return out;
}

bool sameVec(const SparseVec& a, const SparseVec& b) { return sparse::difference(a, b).empty(); }

}  // namespace

bool BoundedComplex::isComplex() const {
  if (maps.size() + 1 != terms.size() && !(terms.empty() && maps.empty())) return false;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const GradedModule &S = terms[k], &T = terms[k + 1];
    if (maps[k].size() != S.dim()) return false;
    const auto& R = S.ring();
    for (std::uint32_t i = 0; i < S.dim(); ++i)
      for (std::uint32_t b = 0; b < R->dim(); ++b)
        if (!sameVec(applyLinear(maps[k], S.act(b, i)), T.mul(maps[k][i], b))) return false;
    if (k + 1 < maps.size())
      for (std::uint32_t i = 0; i < S.dim(); ++i)
        if (!applyLinear(maps[k + 1], maps[k][i]).empty()) return false;
  }
  return true;
}

std::vector<GradedModule> BoundedComplex::homology() const {
  std::vector<GradedModule> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const GradedModule& M = terms[k];
    std::vector<SparseVec> Z, B;
    if (k < maps.size()) {
      Z = sparseKernel(maps[k]);
    } else {
      for (std::uint32_t i = 0; i < M.dim(); ++i) Z.push_back(sparse::unit(i));
    }
    if (k > 0) B = maps[k - 1];
    out.push_back(subquotientModule(M, Z, B));
  }
  return out;
}

BoundedComplex BoundedComplex::shifted(int i) const {
  BoundedComplex X = *this;
  X.lowest = lowest - i;
  if (i % 2 != 0)
    for (auto& m : X.maps)
      for (auto& v : m) v = sparse::scaled(v, Scalar(-1));
  return X;
}

BoundedComplex SummandComplex::realize() const {
  BoundedComplex X;
  X.lowest = lowest;
  if (kind == Kind::Projective) {
    for (const auto& F : terms) X.terms.push_back(F.asModule());
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const FreeModule &S = terms[k], &T = terms[k + 1];
      std::vector<SparseVec> imgs(S.dim());
      for (std::uint32_t c = 0; c < S.dim(); ++c) imgs[c] = T.mul(maps[k][S.genOf(c)], S.basisOf(c));
      X.maps.push_back(std::move(imgs));
    }
    return X;
  }
  InjectiveIndex idx(*R);
  auto left = leftActionOnDual(*R);
  std::vector<std::vector<std::uint32_t>> offsets;
  for (const auto& F : terms) {
    std::vector<GradedModule> parts;
    std::vector<std::uint32_t> off;
    std::uint32_t o = 0;
    for (std::size_t g = 0; g < F.gens(); ++g) {
      parts.push_back(injectiveModule(R, F.genVertex(g)).shifted(F.genDegree(g)));
      off.push_back(o);
      o += static_cast<std::uint32_t>(parts.back().dim());
    }
    offsets.push_back(off);
    if (parts.empty()) {
      X.terms.push_back(GradedModule(R, {}, {}, std::vector<std::vector<SparseVec>>(R->dim())));
    } else {
      X.terms.push_back(directSum(parts));
    }
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const FreeModule &S = terms[k], &T = terms[k + 1];
    std::vector<SparseVec> imgs(X.terms[k].dim());
    for (std::size_t g = 0; g < S.gens(); ++g) {
      const auto& mem = idx.members[S.genVertex(g)];
      for (std::size_t l = 0; l < mem.size(); ++l) {
        std::vector<Entry> es;
        for (const auto& e : maps[k][g]) {
          std::size_t h = T.genOf(e.index);
          std::uint32_t b = T.basisOf(e.index);
          for (const auto& f : left[b][mem[l]]) es.push_back({offsets[k + 1][h] + idx.pos[f.index], e.value * f.value});
        }
        imgs[offsets[k][g] + l] = sparse::normalize(std::move(es));
      }
    }
    X.maps.push_back(std::move(imgs));
  }
  return X;
}

SummandComplex resolutionComplex(const Resolution& P) {
  SummandComplex X;
  X.kind = SummandComplex::Kind::Projective;
  X.R = P.M.ring();
  int t = P.terms();
  X.lowest = -(t - 1);
  for (int k = 0; k < t; ++k) X.terms.push_back(P.F[t - 1 - k]);
  for (int k = 0; k + 1 < t; ++k) X.maps.push_back(P.d[t - 1 - k]);
  return X;
}

SummandComplex nakayama(const SummandComplex& X, Direction dir) {
  using K = SummandComplex::Kind;
  SummandComplex Y = X;
  if (dir == Direction::Forward) {
    if (X.kind != K::Projective) throw ParameterError("forward Nakayama needs a complex of projectives");
    Y.kind = K::Injective;
  } else {
    if (X.kind != K::Injective) throw ParameterError("inverse Nakayama needs a complex of injectives");
    Y.kind = K::Projective;
  }
  return Y;
}

InverseNakayama::InverseNakayama(RingPtr A, int window) : R_(std::move(A)) {
  for (std::uint32_t b = 0; b < R_->dim(); ++b)
    if (R_->A.degree(b) != 0) throw ParameterError("inverse Nakayama is implemented for trivially graded algebras");
  for (VertexId v = 0; v < R_->vertices(); ++v) {
    res_.push_back(projectiveResolution(injectiveModule(R_, v), window));
    if (!res_.back().complete)
      throw StructuralError("injective module without a finite resolution within " + std::to_string(window) +
                            " steps: global dimension exceeds the window");
    maxPd_ = std::max(maxPd_, res_.back().projectiveDimension());
  }
  for (VertexId v = 0; v < R_->vertices(); ++v) solvers_.push_back(std::make_unique<LiftSolver>(res_[v]));
  InjectiveIndex idx(*R_);
  auto left = leftActionOnDual(*R_);
  lambda_.resize(R_->dim());
  for (std::uint32_t a = 0; a < R_->dim(); ++a) {
    VertexId u = R_->source(a), w = R_->target(a);
    const Resolution& P = res_[w];
    std::vector<SparseVec> initial;
    for (std::size_t g = 0; g < (P.terms() ? P.F[0].gens() : 0); ++g) {
      std::vector<Entry> es;
      for (const auto& e : P.d[0][g])
        for (const auto& f : left[a][idx.members[w][e.index]]) es.push_back({idx.pos[f.index], e.value * f.value});
      initial.push_back(sparse::normalize(std::move(es)));
    }
    lambda_[a] = liftChainMap(P, 0, initial, *solvers_[u], maxPd_, 0);
  }
}

InverseNakayama::ExtModule InverseNakayama::ext(int i, const GradedModule& X) const {
  ExtModule em;
  em.source = X;
  em.level = i;
  std::size_t total = 0;
  std::vector<std::pair<VertexId, std::uint32_t>> repOf;
  for (VertexId v = 0; v < R_->vertices(); ++v) {
    em.hom.push_back(std::make_shared<HomComplex>(res_[v], X, 0));
    em.quotient.push_back(i < res_[v].terms() ? em.hom.back()->ext(i) : Subquotient());
    em.offset.push_back(total);
    for (std::uint32_t r = 0; r < em.quotient.back().dim(); ++r) repOf.push_back({v, r});
    total += em.quotient.back().dim();
  }
  std::vector<int> deg(total, 0);
  std::vector<VertexId> ver(total);
  for (std::size_t t = 0; t < total; ++t) ver[t] = repOf[t].first;
  std::vector<std::vector<SparseVec>> act(R_->dim(), std::vector<SparseVec>(total));
  for (std::uint32_t a = 0; a < R_->dim(); ++a) {
    VertexId u = R_->source(a), w = R_->target(a);
    if (i >= static_cast<int>(lambda_[a].size()) || em.quotient[w].dim() == 0) continue;
    const FreeModule& Fu = res_[u].F[i];
    const auto& lam = lambda_[a][i];
    for (std::uint32_t r = 0; r < em.quotient[u].dim(); ++r) {
      auto phi = em.hom[u]->evaluate(i, em.quotient[u].reps()[r]);
      std::vector<SparseVec> images(lam.size());
      for (std::size_t g = 0; g < lam.size(); ++g)
        for (const auto& e : lam[g]) {
          const SparseVec& img = phi[Fu.genOf(e.index)];
          if (!img.empty()) sparse::axpy(images[g], e.value, X.mul(img, Fu.basisOf(e.index)));
        }
      SparseVec c = em.quotient[w].coordinates(em.hom[w]->fromImages(i, images));
      for (auto& e : c) e.index += static_cast<std::uint32_t>(em.offset[w]);
      act[a][em.offset[u] + r] = std::move(c);
    }
  }
  em.module = GradedModule(R_, deg, ver, act);
  return em;
}

std::vector<long long> InverseNakayama::extDims(const GradedModule& X) const {
  std::vector<long long> out(maxPd_ + 1, 0);
  for (VertexId v = 0; v < R_->vertices(); ++v) {
    HomComplex H(res_[v], X, 0);
    for (int i = 0; i <= maxPd_; ++i) out[i] += H.extDim(i);
  }
  return out;
}

std::vector<SparseVec> InverseNakayama::extMap(const ExtModule& src, const ExtModule& dst,
                                               const std::vector<SparseVec>& f) const {
  std::vector<SparseVec> out;
  int i = src.level;
  for (VertexId v = 0; v < R_->vertices(); ++v)
    for (const auto& rep : src.quotient[v].reps()) {
      auto images = src.hom[v]->evaluate(i, rep);
      for (auto& img : images) img = applyLinear(f, img);
      SparseVec c = dst.quotient[v].coordinates(dst.hom[v]->fromImages(i, images));
      for (auto& e : c) e.index += static_cast<std::uint32_t>(dst.offset[v]);
      out.push_back(std::move(c));
    }
  return out;
}

NakayamaHomology nakayamaHomology(const GradedModule& X, Direction dir, int window) {
  NakayamaHomology out;
  if (dir == Direction::Forward) {
    Resolution P = projectiveResolution(X, window);
    if (!P.complete) throw StructuralError("no finite projective resolution within " + std::to_string(window) + " steps");
    BoundedComplex C = nakayama(resolutionComplex(P), Direction::Forward).realize();
    out.lowest = C.lowest;
    out.H = C.homology();
    return out;
  }
  InverseNakayama NI(X.ring(), window);
  out.lowest = 0;
  for (int i = 0; i <= NI.globalBound(); ++i) out.H.push_back(NI.ext(i, X).module);
  return out;
}

std::optional<int> globalDimension(const RingPtr& R, int window) {
  int gd = 0;
  for (VertexId v = 0; v < R->vertices(); ++v) {
    Resolution P = projectiveResolution(simpleModule(R, v), window);
    if (!P.complete) return std::nullopt;
    gd = std::max(gd, P.projectiveDimension());
  }
  return gd;
}

Matrix cartanMatrix(const Ring& R) {
  Matrix C(R.vertices(), R.vertices());
  for (std::uint32_t b = 0; b < R.dim(); ++b) C(R.source(b), R.target(b)) += Scalar(1);
  return C;
}

std::vector<long long> coxeterInverse(const Ring& R, const std::vector<long long>& x, int n) {
  Matrix C = cartanMatrix(R);
  auto inv = inverse(C.transpose());
  if (!inv) throw StructuralError("Cartan matrix is singular");
  Matrix Phi = *inv * C;
  std::size_t m = x.size();
  std::vector<long long> out(m, 0);
  for (std::size_t w = 0; w < m; ++w) {
    Scalar s(0);
    for (std::size_t v = 0; v < m; ++v) s += Scalar(x[v]) * Phi(v, w);
    if (n % 2 != 0) s = -s;
    if (!s.isInteger()) throw StructuralError("non-integral Coxeter image");
    out[w] = s.toMpq().get_num().get_si();
  }
  return out;
}

NRIResult nRepInfiniteTest(const FDAlgebra& A, int n, int horizon) {
  if (n < 1 || horizon < 1) throw ParameterError("n and horizon must be at least 1");
  NRIResult r;
  r.n = n;
  r.horizon = horizon;
  RingPtr R = makeRing(A);
  r.globalDimension = globalDimension(R, n);
  if (!r.globalDimension) {
    r.failedAt = 0;
    r.reason = "global dimension exceeds " + std::to_string(n);
    return r;
  }
  InverseNakayama NI(R, n);
  std::vector<GradedModule> X;
  std::vector<std::vector<long long>> d0;
  for (VertexId v = 0; v < R->vertices(); ++v) {
    X.push_back(projectiveModule(R, v));
    d0.push_back(X.back().dimensionVector());
  }
  r.dims.push_back(d0);
  r.coxeter.push_back(d0);
  for (int j = 1; j <= horizon; ++j) {
    for (VertexId v = 0; v < R->vertices(); ++v) {
      auto e = NI.extDims(X[v]);
      e.resize(n + 1, 0);
      for (int m = 0; m < n; ++m)
        if (e[m] != 0) {
          r.failedAt = j;
          r.failedDegree = m - n;
          r.reason = "homology of the " + std::to_string(j) + "-th iterate in degree " + std::to_string(m - n);
          return r;
        }
    }
    std::vector<std::vector<long long>> dj, cj;
    for (VertexId v = 0; v < R->vertices(); ++v) {
      X[v] = NI.ext(n, X[v]).module;
      dj.push_back(X[v].dimensionVector());
      cj.push_back(coxeterInverse(*R, r.coxeter.back()[v], n));
      if (dj.back() != cj.back()) r.coxeterAgrees = false;
    }
    r.dims.push_back(dj);
    r.coxeter.push_back(cj);
  }
  r.passes = true;
  return r;
}

std::shared_ptr<TableAlgebra> preprojective(const FDAlgebra& A, int n, int degreeBound) {
  if (degreeBound < 0) throw ParameterError("negative degree bound");
  NRIResult t = nRepInfiniteTest(A, n, std::max(1, degreeBound));
  if (!t.passes)
    throw StructuralError("algebra is not " + std::to_string(n) + "-representation infinite: " + t.reason);
  RingPtr R = makeRing(A);
  InverseNakayama NI(R, n);
  int W = degreeBound;
  std::vector<GradedModule> X{regularModule(R)};
  std::vector<InverseNakayama::ExtModule> ext;
  for (int i = 0; i < W; ++i) {
    ext.push_back(NI.ext(n, X[i]));
    X.push_back(ext.back().module);
  }
  std::vector<std::vector<std::string>> labels(W + 1);
  labels[0] = A.labels();
  for (int i = 1; i <= W; ++i)
    for (std::size_t k = 0; k < X[i].dim(); ++k) labels[i].push_back("p" + std::to_string(i) + "_" + std::to_string(k));
  std::vector<std::vector<std::vector<SparseVec>>> table(W + 1);
  for (int i = 0; i <= W; ++i) {
    table[i].resize(W - i + 1);
    for (int k = 0; i + k <= W; ++k) table[i][k].resize(X[i].dim() * X[k].dim());
    for (std::uint32_t x = 0; x < X[i].dim(); ++x) {
      // f: X_0 = A -> X_i, b |-> x b; then F^k(f): X_k -> X_{i+k}.
      std::vector<SparseVec> f(R->dim());
      for (std::uint32_t b = 0; b < R->dim(); ++b) f[b] = X[i].act(b, x);
      for (int k = 0; i + k <= W; ++k) {
        for (std::size_t y = 0; y < X[k].dim(); ++y) table[i][k][x * X[k].dim() + y] = f[y];
        if (i + k < W) f = NI.extMap(ext[k], ext[i + k], f);
      }
    }
  }
  return std::make_shared<TableAlgebra>(std::move(labels), std::move(table));
}

GradedPresentation preprojectivePresentation(const GradedPresentation& B, int n) {
  const Quiver& Q = B.q();
  std::vector<std::string> vs = Q.vertices();
  std::vector<Arrow> arrows = Q.arrows();
  std::set<std::string> used;
  for (const auto& v : vs) used.insert(v);
  for (const auto& a : arrows) used.insert(a.name);
  auto fresh = [&](std::string name) {
    while (used.count(name)) name += "_";
    used.insert(name);
    return name;
  };
  std::map<std::string, int> deg;
  for (const auto& a : arrows) deg[a.name] = 0;
  if (n == 1) {
    for (const auto& r : B.relations)
      if (!r.isZero()) throw ParameterError("n = 1 needs a path algebra without relations");
    std::size_t m = arrows.size();
    for (std::size_t a = 0; a < m; ++a) {
      std::string name = fresh(arrows[a].name + "s");
      arrows.push_back({name, arrows[a].target, arrows[a].source});
      deg[name] = 1;
    }
    auto q = std::make_shared<Quiver>(vs, arrows);
    std::vector<PathElement> rels;
    for (VertexId v = 0; v < q->vertexCount(); ++v) {
      PathElement rho;
      for (std::size_t a = 0; a < m; ++a) {
        auto a0 = static_cast<ArrowId>(a), a1 = static_cast<ArrowId>(a + m);
        if (arrows[a].source == v) rho.add(Path(*q, std::vector<ArrowId>{a0, a1}), Scalar(1));
        if (arrows[a].target == v) rho.add(Path(*q, std::vector<ArrowId>{a1, a0}), Scalar(-1));
      }
      if (!rho.isZero()) rels.push_back(rho);
    }
    return GradedPresentation(q, rels, ArrowGrading(deg));
  }
  if (n != 2) throw ParameterError("presented preprojective algebras are built for n = 1 and n = 2");
  std::vector<PathElement> minimal;
  for (const auto& r : minimalRelationDegrees(B).relations)
    for (auto& c : r.uniformComponents()) minimal.push_back(c);
  std::size_t m = arrows.size();
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const Path& p = minimal[k].terms().begin()->first;
    std::string name = fresh("rho" + std::to_string(k + 1));
    arrows.push_back({name, p.target(), p.source()});
    deg[name] = 1;
  }
  auto q = std::make_shared<Quiver>(vs, arrows);
  std::vector<std::pair<Scalar, Path>> terms;
  for (std::size_t k = 0; k < minimal.size(); ++k)
    for (const auto& [p, c] : minimal[k].terms()) {
      std::vector<ArrowId> w = p.arrows();
      w.push_back(static_cast<ArrowId>(m + k));
      terms.push_back({c, Path(*q, w)});
    }
  Potential W(q, terms);
  std::vector<PathElement> rels;
  for (ArrowId a = 0; a < q->arrowCount(); ++a) {
    PathElement d = cyclicDerivative(W, a);
    if (!d.isZero()) rels.push_back(d);
  }
  return GradedPresentation(q, rels, ArrowGrading(deg));
}

}  // namespace qfg
