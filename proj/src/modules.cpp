#include <algorithm>

#include "qfg/error.hpp"
#include "qfg/modcplx.hpp"

namespace qfg {

namespace {

// Splits a vector into its pieces on the given blocks of coordinates.
std::vector<SparseVec> blockComponents(const SparseVec& v, const std::vector<int>& blockOf) {
  std::map<int, SparseVec> parts;
  for (const auto& e : v) parts[blockOf[e.index]].push_back(e);
  std::vector<SparseVec> out;
  for (auto& [k, p] : parts) out.push_back(std::move(p));
  return out;
}

SparseVec negated(SparseVec v) {
  for (auto& e : v) e.value = -e.value;
  return v;
}

}  // namespace

RingPtr makeRing(FDAlgebra A) {
  if (!A.peirceAdapted()) throw StructuralError("homological routines need a Peirce-adapted basis");
  auto R = std::make_shared<Ring>();
  std::size_t n = A.dim(), nv = A.vertexCount();
  R->row.assign(nv, {});
  R->posInRow.assign(n, 0);
  for (std::uint32_t b = 0; b < n; ++b) {
    VertexId v = A.peirce(b).first;
    R->posInRow[b] = static_cast<std::uint32_t>(R->row[v].size());
    R->row[v].push_back(b);
  }
  std::vector<SparseVec> rad = radicalBasis(A);
  if (n - rad.size() != nv) throw StructuralError("algebra is not basic: dim A/rad A differs from the number of idempotents");

  std::map<std::tuple<VertexId, VertexId, int>, int> blockId;
  std::vector<int> blockOf(n);
  for (std::uint32_t b = 0; b < n; ++b) {
    auto key = std::make_tuple(A.peirce(b).first, A.peirce(b).second, A.degree(b));
    auto it = blockId.emplace(key, static_cast<int>(blockId.size())).first;
    blockOf[b] = it->second;
  }
  SparseEchelon ech;
  for (const auto& x : rad)
    for (const auto& y : rad)
      for (auto& c : blockComponents(A.multiply(x, y), blockOf)) ech.insert(std::move(c));
  for (const auto& x : rad)
    for (auto& c : blockComponents(x, blockOf))
      if (ech.insert(c)) R->radGens.push_back(std::move(c));

  SparseEchelon radEch;
  for (const auto& x : rad) radEch.insert(x);
  SparseEchelon tops(true);
  for (std::size_t u = 0; u < nv; ++u)
    tops.insertTracked(radEch.reduce(A.idempotents()[u]), sparse::unit(static_cast<std::uint32_t>(u)));
  R->top.assign(n, std::vector<Scalar>(nv, Scalar(0)));
  for (std::uint32_t b = 0; b < n; ++b) {
    SparseVec r = radEch.reduce(sparse::unit(b)), comb;
    tops.reduceTracked(r, comb);
    if (!r.empty()) throw StructuralError("idempotents do not span the top of the algebra");
    for (const auto& e : comb) R->top[b][e.index] = -e.value;
  }
  R->A = std::move(A);
  return R;
}

GradedModule::GradedModule(RingPtr R, std::vector<int> degree, std::vector<VertexId> vertex,
                           std::vector<std::vector<SparseVec>> act)
    : R_(std::move(R)), degree_(std::move(degree)), vertex_(std::move(vertex)), act_(std::move(act)) {
  if (vertex_.size() != degree_.size() || act_.size() != R_->dim())
    throw StructuralError("module data has inconsistent sizes");
  for (const auto& a : act_)
    if (a.size() != dim()) throw StructuralError("module action has the wrong number of vectors");
}

SparseVec GradedModule::mul(const SparseVec& m, std::uint32_t b) const {
  SparseVec out;
  for (const auto& e : m) sparse::axpy(out, e.value, act_[b][e.index]);
  return out;
}

SparseVec GradedModule::mul(const SparseVec& m, const SparseVec& r) const {
  SparseVec out;
  for (const auto& e : r) sparse::axpy(out, e.value, mul(m, e.index));
  return out;
}

GradedModule GradedModule::shifted(int j) const {
  GradedModule M = *this;
  for (auto& d : M.degree_) d += j;
  return M;
}

std::vector<long long> GradedModule::dimensionVector() const {
  std::vector<long long> out(R_->vertices(), 0);
  for (VertexId v : vertex_) ++out[v];
  return out;
}

std::map<std::pair<int, VertexId>, std::vector<std::uint32_t>> GradedModule::blocks() const {
  std::map<std::pair<int, VertexId>, std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < dim(); ++i) out[{degree_[i], vertex_[i]}].push_back(i);
  return out;
}

void GradedModule::validate() const {
  const FDAlgebra& A = R_->A;
  SparseVec one = A.one();
  for (std::uint32_t i = 0; i < dim(); ++i) {
    SparseVec m = sparse::unit(i);
    SparseVec mo = mul(m, one);
    if (!sparse::difference(mo, m).empty()) throw StructuralError("identity does not act as the identity");
    if (!sparse::difference(mul(m, A.idempotents()[vertex_[i]]), m).empty())
      throw StructuralError("basis vector not in its declared vertex");
    for (std::uint32_t b = 0; b < A.dim(); ++b) {
      const SparseVec& mb = act_[b][i];
      for (const auto& e : mb)
        if (degree_[e.index] != degree_[i] + A.degree(b)) throw StructuralError("action does not respect degrees");
      for (std::uint32_t c = 0; c < A.dim(); ++c)
        if (!sparse::difference(mul(mb, c), mul(m, A.product(b, c))).empty())
          throw StructuralError("action is not associative");
    }
  }
}

GradedModule regularModule(const RingPtr& R) {
  const FDAlgebra& A = R->A;
  std::size_t n = A.dim();
  std::vector<int> deg(n);
  std::vector<VertexId> ver(n);
  std::vector<std::vector<SparseVec>> act(n, std::vector<SparseVec>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    deg[i] = A.degree(i);
    ver[i] = R->target(i);
    for (std::uint32_t b = 0; b < n; ++b) act[b][i] = A.product(i, b);
  }
  return GradedModule(R, deg, ver, act);
}

GradedModule projectiveModule(const RingPtr& R, VertexId v, int shift) {
  FreeModule F(R);
  F.add(v, shift);
  return F.asModule();
}

GradedModule dualModule(const RingPtr& R) {
  const FDAlgebra& A = R->A;
  std::size_t n = A.dim();
  std::vector<int> deg(n);
  std::vector<VertexId> ver(n);
  std::vector<std::vector<std::vector<Entry>>> raw(n, std::vector<std::vector<Entry>>(n));
  for (std::uint32_t j = 0; j < n; ++j) {
    deg[j] = -A.degree(j);
    ver[j] = R->source(j);
  }
  // b_j* . b_i = sum_k (coefficient of b_j in b_i b_k) b_k*
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k)
      for (const auto& e : A.product(i, k)) raw[i][e.index].push_back({k, e.value});
  std::vector<std::vector<SparseVec>> act(n, std::vector<SparseVec>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) act[i][j] = sparse::normalize(std::move(raw[i][j]));
  return GradedModule(R, deg, ver, act);
}

namespace {

// Restriction of M to a set of basis vectors spanning a submodule.
GradedModule restrictTo(const GradedModule& M, const std::vector<std::uint32_t>& keep) {
  std::vector<std::int64_t> pos(M.dim(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<std::int64_t>(k);
  const auto& R = M.ring();
  std::vector<int> deg;
  std::vector<VertexId> ver;
  for (auto i : keep) {
    deg.push_back(M.degree(i));
    ver.push_back(M.vertex(i));
  }
  std::vector<std::vector<SparseVec>> act(R->dim(), std::vector<SparseVec>(keep.size()));
  for (std::uint32_t b = 0; b < R->dim(); ++b)
    for (std::size_t k = 0; k < keep.size(); ++k) {
      std::vector<Entry> es;
      for (const auto& e : M.act(b, keep[k])) {
        if (pos[e.index] < 0) throw StructuralError("basis subset is not a submodule");
        es.push_back({static_cast<std::uint32_t>(pos[e.index]), e.value});
      }
      act[b][k] = sparse::normalize(std::move(es));
    }
  return GradedModule(R, deg, ver, act);
}

}  // namespace

GradedModule injectiveModule(const RingPtr& R, VertexId v) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t j = 0; j < R->dim(); ++j)
    if (R->target(j) == v) keep.push_back(j);
  return restrictTo(dualModule(R), keep);
}

GradedModule simpleModule(const RingPtr& R, VertexId v, int degree) {
  std::vector<std::vector<SparseVec>> act(R->dim(), std::vector<SparseVec>(1));
  for (std::uint32_t b = 0; b < R->dim(); ++b)
    if (!R->top[b][v].isZero()) act[b][0] = sparse::unit(0, R->top[b][v]);
  return GradedModule(R, {degree}, {v}, act);
}

GradedModule topModule(const RingPtr& R) {
  std::vector<GradedModule> parts;
  for (VertexId v = 0; v < R->vertices(); ++v) parts.push_back(simpleModule(R, v));
  return directSum(parts);
}

GradedModule degreeZeroModule(const RingPtr& R) {
  const FDAlgebra& A = R->A;
  std::vector<std::uint32_t> keep;
  std::vector<std::int64_t> pos(A.dim(), -1);
  for (std::uint32_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) == 0) {
      pos[i] = static_cast<std::int64_t>(keep.size());
      keep.push_back(i);
    }
  std::vector<int> deg(keep.size(), 0);
  std::vector<VertexId> ver;
  for (auto i : keep) ver.push_back(R->target(i));
  std::vector<std::vector<SparseVec>> act(A.dim(), std::vector<SparseVec>(keep.size()));
  for (std::uint32_t b = 0; b < A.dim(); ++b) {
    if (A.degree(b) != 0) continue;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      std::vector<Entry> es;
      for (const auto& e : A.product(keep[k], b)) {
        if (pos[e.index] < 0) throw StructuralError("degree-0 product leaves degree 0");
        es.push_back({static_cast<std::uint32_t>(pos[e.index]), e.value});
      }
      act[b][k] = sparse::normalize(std::move(es));
    }
  }
  return GradedModule(R, deg, ver, act);
}

GradedModule directSum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw ParameterError("direct sum of no modules");
  const auto& R = parts[0].ring();
  std::vector<int> deg;
  std::vector<VertexId> ver;
  std::vector<std::vector<SparseVec>> act(R->dim());
  std::uint32_t off = 0;
  for (const auto& M : parts) {
    for (std::uint32_t i = 0; i < M.dim(); ++i) {
      deg.push_back(M.degree(i));
      ver.push_back(M.vertex(i));
    }
    for (std::uint32_t b = 0; b < R->dim(); ++b)
      for (std::uint32_t i = 0; i < M.dim(); ++i) {
        SparseVec v = M.act(b, i);
        for (auto& e : v) e.index += off;
        act[b].push_back(std::move(v));
      }
    off += static_cast<std::uint32_t>(M.dim());
  }
  return GradedModule(R, deg, ver, act);
}

Subquotient::Subquotient(const std::vector<SparseVec>& Z, const std::vector<SparseVec>& B) {
  for (const auto& b : B) ech_.insertTracked(b, {});
  for (const auto& z : Z) {
    std::size_t before = ech_.rank();
    ech_.insertTracked(z, sparse::unit(static_cast<std::uint32_t>(reps_.size())));
    if (ech_.rank() > before) reps_.push_back(z);
  }
}

SparseVec Subquotient::coordinates(SparseVec z) const {
  SparseVec comb;
  ech_.reduceTracked(z, comb);
  if (!z.empty()) throw StructuralError("vector outside the subquotient");
  return negated(std::move(comb));
}

GradedModule subquotientModule(const GradedModule& M, const std::vector<SparseVec>& Z,
                               const std::vector<SparseVec>& B) {
  auto blocks = M.blocks();
  std::vector<int> blockOf(M.dim());
  std::vector<std::pair<int, VertexId>> keys;
  for (const auto& [k, idx] : blocks) {
    for (auto i : idx) blockOf[i] = static_cast<int>(keys.size());
    keys.push_back(k);
  }
  std::vector<std::vector<SparseVec>> zb(keys.size()), bb(keys.size());
  for (const auto& z : Z)
    for (auto& c : blockComponents(z, blockOf)) zb[blockOf[c[0].index]].push_back(std::move(c));
  for (const auto& b : B)
    for (auto& c : blockComponents(b, blockOf)) bb[blockOf[c[0].index]].push_back(std::move(c));
  std::vector<Subquotient> sq;
  std::vector<std::uint32_t> offset;
  std::vector<int> deg;
  std::vector<VertexId> ver;
  std::vector<std::pair<int, std::uint32_t>> repOf;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    offset.push_back(static_cast<std::uint32_t>(deg.size()));
    sq.emplace_back(zb[k], bb[k]);
    for (std::size_t r = 0; r < sq.back().dim(); ++r) {
      deg.push_back(keys[k].first);
      ver.push_back(keys[k].second);
      repOf.push_back({static_cast<int>(k), static_cast<std::uint32_t>(r)});
    }
  }
  const auto& R = M.ring();
  std::vector<std::vector<SparseVec>> act(R->dim(), std::vector<SparseVec>(deg.size()));
  for (std::uint32_t b = 0; b < R->dim(); ++b)
    for (std::size_t i = 0; i < deg.size(); ++i) {
      SparseVec img = M.mul(sq[repOf[i].first].reps()[repOf[i].second], b);
      if (img.empty()) continue;
      int k = blockOf[img[0].index];
      SparseVec c = sq[k].coordinates(std::move(img));
      for (auto& e : c) e.index += offset[k];
      act[b][i] = std::move(c);
    }
  return GradedModule(R, deg, ver, act);
}

}  // namespace qfg
