#include "qfg/present.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qfg {

namespace {

bool isIdentifier(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }) &&
         std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::uint32_t detectChar(const std::vector<SparseVec>& vs) {
  for (const auto& v : vs)
    for (const auto& e : v)
      if (e.value.characteristic()) return e.value.characteristic();
  return 0;
}

}  // namespace

FDAlgebra::FDAlgebra(std::vector<std::string> labels, std::vector<SparseVec> products,
                     std::vector<SparseVec> idempotents, std::optional<std::vector<int>> grading)
    : labels_(std::move(labels)),
      table_(std::move(products)),
      idempotents_(std::move(idempotents)),
      grading_(std::move(grading)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n * n) throw StructuralError("structure-constant table has the wrong size");
  if (grading_ && grading_->size() != n) throw StructuralError("grading has the wrong size");
  for (const auto& v : table_)
    for (const auto& e : v)
      if (e.index >= n) throw StructuralError("structure constant refers to a missing basis element");
  char_ = detectChar(table_);
  if (!char_) char_ = detectChar(idempotents_);

  for (std::size_t u = 0; u < idempotents_.size(); ++u)
    for (std::size_t v = 0; v < idempotents_.size(); ++v) {
      SparseVec p = multiply(idempotents_[u], idempotents_[v]);
      SparseVec expect = u == v ? idempotents_[u] : SparseVec{};
      if (!sparse::difference(p, expect).empty())
        throw StructuralError("idempotents are not orthogonal idempotents");
    }
  SparseVec unit = one();
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec b = sparse::unit(static_cast<std::uint32_t>(i));
    if (!sparse::difference(multiply(unit, b), b).empty() || !sparse::difference(multiply(b, unit), b).empty())
      throw StructuralError("idempotents do not sum to the identity");
  }
  if (grading_) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& e : product(i, j))
          if ((*grading_)[e.index] != (*grading_)[i] + (*grading_)[j])
            throw StructuralError("grading is not multiplicative at " + labels_[i] + " * " + labels_[j]);
  }
  computePeirce();
}

void FDAlgebra::computePeirce() {
  const std::size_t n = dim(), m = idempotents_.size();
  std::vector<std::pair<VertexId, VertexId>> peirce(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec b = sparse::unit(static_cast<std::uint32_t>(i));
    std::optional<VertexId> src, tgt;
    for (std::size_t u = 0; u < m; ++u) {
      SparseVec l = multiply(idempotents_[u], b), r = multiply(b, idempotents_[u]);
      if (!l.empty()) {
        if (src || !sparse::difference(l, b).empty()) return;
        src = static_cast<VertexId>(u);
      }
      if (!r.empty()) {
        if (tgt || !sparse::difference(r, b).empty()) return;
        tgt = static_cast<VertexId>(u);
      }
    }
    if (!src || !tgt) return;
    peirce[i] = {*src, *tgt};
  }
  peirce_ = std::move(peirce);
}

SparseVec FDAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  std::vector<Entry> acc;
  for (const auto& a : x)
    for (const auto& b : y)
      for (const auto& e : product(a.index, b.index)) acc.push_back({e.index, a.value * b.value * e.value});
  return sparse::normalize(std::move(acc));
}

SparseVec FDAlgebra::one() const {
  SparseVec u;
  for (const auto& e : idempotents_) sparse::axpy(u, Scalar(1), e);
  return u;
}

int FDAlgebra::highestDegree() const {
  int h = 0;
  if (grading_)
    for (int d : *grading_) h = std::max(h, d);
  return h;
}

void FDAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec left = multiply(ij, sparse::unit(static_cast<std::uint32_t>(k)));
        SparseVec right = multiply(sparse::unit(static_cast<std::uint32_t>(i)), product(j, k));
        if (!sparse::difference(left, right).empty())
          throw StructuralError("multiplication is not associative at (" + labels_[i] + ", " + labels_[j] +
                                ", " + labels_[k] + ")");
      }
    }
}

// ---------------------------------------------------------------------------

namespace {

bool lengthHomogeneous(const PathElement& r) {
  for (const auto& comp : r.uniformComponents()) {
    std::optional<std::size_t> len;
    for (const auto& [p, c] : comp.terms()) {
      if (len && *len != p.length()) return false;
      len = p.length();
    }
  }
  return true;
}

bool hasLazyTerm(const std::vector<PathElement>& rels) {
  for (const auto& r : rels)
    for (const auto& [p, c] : r.terms())
      if (p.isLazy()) return true;
  return false;
}

}  // namespace

NormalBasis finiteNormalBasis(const GradedPresentation& p, int bound) {
  MonomialOrder order = MonomialOrder::forPresentation(p);
  bool homogeneous;
  if (order.kind() == MonomialOrder::Kind::GradedLengthLex) {
    p.requireHomogeneous();
    homogeneous = true;
  } else {
    homogeneous = std::all_of(p.relations.begin(), p.relations.end(), lengthHomogeneous);
  }
  NormalBasis nb;
  nb.gb = buchbergerTruncated(p.relations, order, bound);
  if (p.relations.empty()) nb.gb = groebnerFor(p, bound);
  if (!homogeneous && !nb.gb.complete())
    throw InconclusiveError("relations are inhomogeneous for the truncation weight and the Groebner basis "
                            "did not close within the bound",
                            2 * bound);
  int maxStep = 1;
  for (ArrowId a = 0; a < p.q().arrowCount(); ++a) maxStep = std::max(maxStep, order.arrowWeight(a));
  bool topEmpty = true;
  std::vector<Path> words;
  nb.gb.forEachNormalWord(bound, [&](const Path& w, int wt) {
    if (wt > bound - maxStep) topEmpty = false;
    words.push_back(w);
  });
  if (!topEmpty)
    throw InconclusiveError("normal words persist up to weight " + std::to_string(bound) +
                                "; the algebra may be infinite dimensional",
                            2 * bound);
  std::stable_sort(words.begin(), words.end(), [&](const Path& a, const Path& b) {
    if (a.isLazy() != b.isLazy()) return a.isLazy();
    return a < b;
  });
  nb.words = std::move(words);
  for (std::uint32_t i = 0; i < nb.words.size(); ++i) nb.index.emplace(nb.words[i], i);
  return nb;
}

FDAlgebra algebraFromPresentation(const GradedPresentation& p, int bound) {
  NormalBasis nb = finiteNormalBasis(p, bound);
  const std::size_t n = nb.words.size();
  std::vector<SparseVec> table(n * n);
  const MonomialOrder& order = nb.gb.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = composePaths(nb.words[i], nb.words[j]);
      if (!w || order.weight(*w) > bound) continue;
      std::vector<Entry> entries;
      for (const auto& t : nb.gb.reduceWord(*w)) {
        auto it = nb.index.find(t.path);
        if (it == nb.index.end()) throw StructuralError("internal: normal form left the normal basis");
        entries.push_back({it->second, t.coef});
      }
      table[i * n + j] = sparse::normalize(std::move(entries));
    }
  std::vector<std::string> labels;
  std::vector<SparseVec> idem;
  std::vector<int> grading;
  std::vector<SparseVec> rad;
  auto deg = p.arrowDegrees();
  for (std::uint32_t i = 0; i < n; ++i) {
    const Path& w = nb.words[i];
    labels.push_back(w.str());
    int d = 0;
    for (ArrowId a : w.arrows()) d += deg[a];
    grading.push_back(d);
    if (w.isLazy())
      idem.push_back(sparse::unit(i));
    else
      rad.push_back(sparse::unit(i));
  }
  FDAlgebra A(std::move(labels), std::move(table), std::move(idem), std::move(grading));
  if (!hasLazyTerm(p.relations)) A.setRadical(std::move(rad));
  A.setWords(nb.words, p.quiver);
  return A;
}

FDAlgebra trivialExtension(const FDAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<SparseVec> table(4 * n * n);
  auto at = [&](std::size_t i, std::size_t j) -> SparseVec& { return table[i * 2 * n + j]; };
  std::vector<std::vector<Entry>> acc(4 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = A.product(i, j);
  // b_i · b_j* = Σ_k c^j_{ki} b_k*   and   b_j* · b_i = Σ_k c^j_{ik} b_k*
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : A.product(k, i))
        acc[i * 2 * n + (n + e.index)].push_back({static_cast<std::uint32_t>(n + k), e.value});
      for (const auto& e : A.product(i, k))
        acc[(n + e.index) * 2 * n + i].push_back({static_cast<std::uint32_t>(n + k), e.value});
    }
  for (std::size_t c = 0; c < acc.size(); ++c)
    if (!acc[c].empty()) table[c] = sparse::normalize(std::move(acc[c]));
  std::vector<std::string> labels = A.labels();
  for (const auto& l : A.labels()) labels.push_back("D(" + l + ")");
  std::vector<int> grading(2 * n, 0);
  for (std::size_t i = n; i < 2 * n; ++i) grading[i] = 1;
  FDAlgebra T(std::move(labels), std::move(table), A.idempotents(), std::move(grading));
  std::vector<SparseVec> rad = radicalBasis(A);
  for (std::size_t i = n; i < 2 * n; ++i) rad.push_back(sparse::unit(static_cast<std::uint32_t>(i)));
  T.setRadical(std::move(rad));
  return T;
}

namespace {

std::vector<SparseVec> productSpan(const FDAlgebra& A, const std::vector<SparseVec>& X,
                                   const std::vector<SparseVec>& Y) {
  SparseEchelon ech;
  std::vector<SparseVec> out;
  for (const auto& x : X)
    for (const auto& y : Y) {
      SparseVec p = A.multiply(x, y);
      if (!p.empty() && ech.insert(p)) out.push_back(std::move(p));
    }
  return out;
}

}  // namespace

std::vector<SparseVec> radicalBasis(const FDAlgebra& A) {
  if (A.knownRadical()) return *A.knownRadical();
  const std::size_t n = A.dim();
  std::vector<Scalar> tr(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) tr[k] += sparse::coefficient(A.product(k, m), static_cast<std::uint32_t>(m));
  Matrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : A.product(i, j)) M(i, j) += e.value * tr[e.index];
  std::vector<SparseVec> rad;
  for (const auto& v : kernelBasis(M.transpose())) rad.push_back(sparse::fromDense(v));
  if (A.characteristic() != 0) {
    // The trace kernel contains the radical; it equals it iff it is nilpotent.
    std::vector<SparseVec> power = rad;
    for (std::size_t k = 0; k <= n && !power.empty(); ++k) power = productSpan(A, power, rad);
    if (!power.empty())
      throw StructuralError("radical cannot be determined by the trace form in characteristic " +
                            std::to_string(A.characteristic()));
  }
  return rad;
}

int loewyLength(const FDAlgebra& A) {
  std::vector<SparseVec> rad = radicalBasis(A);
  std::vector<SparseVec> power = rad;
  int L = 1;
  while (!power.empty()) {
    power = productSpan(A, power, rad);
    ++L;
    if (L > static_cast<int>(A.dim()) + 1) throw StructuralError("radical is not nilpotent");
  }
  return rad.empty() ? 1 : L;
}

// ---------------------------------------------------------------------------

namespace {

struct ArrowCandidate {
  VertexId src, tgt;
  int degree;
  long rank;
  SparseVec vec;
  std::string label;
};

// All paths of length <= N, depth first from each vertex.
void forEachPath(const Quiver& q, std::size_t N, const std::function<void(const Path&)>& fn) {
  std::vector<ArrowId> word;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (word.size() == N) return;
    for (ArrowId a : q.outgoing(v)) {
      word.push_back(a);
      fn(Path(q, word));
      dfs(q.arrow(a).target);
      word.pop_back();
    }
  };
  for (VertexId v = 0; v < q.vertexCount(); ++v) {
    fn(Path(q, v));
    dfs(v);
  }
}

// Candidates independent modulo (J·I + I·J) truncated at length N, where the
// basis computes exact normal forms for paths of length <= N.
std::vector<PathElement> minimalSubset(const GroebnerBasis& gb, const Quiver& q, std::size_t N,
                                       const std::vector<PathElement>& candidates) {
  std::map<Path, std::uint32_t> idx;
  auto vec = [&](const Poly& x) {
    std::vector<Entry> es;
    for (const auto& t : x) {
      if (t.path.length() > N) continue;
      auto [it, ins] = idx.emplace(t.path, static_cast<std::uint32_t>(idx.size()));
      es.push_back({it->second, t.coef});
    }
    return sparse::normalize(std::move(es));
  };
  SparseEchelon S;
  forEachPath(q, N, [&](const Path& p) {
    Poly nf = gb.reduceWord(p);
    if (nf.size() == 1 && nf[0].path == p && nf[0].coef.isOne()) return;
    Poly k{{p, Scalar(1)}};
    for (const auto& t : nf) k.push_back({t.path, -t.coef});
    for (ArrowId a : q.incoming(p.source())) {
      Poly ak;
      Path pa(q, std::vector<ArrowId>{a});
      for (const auto& t : k) ak.push_back({*composePaths(pa, t.path), t.coef});
      S.insert(vec(ak));
    }
    for (ArrowId a : q.outgoing(p.target())) {
      Poly ka;
      Path pa(q, std::vector<ArrowId>{a});
      for (const auto& t : k) ka.push_back({*composePaths(t.path, pa), t.coef});
      S.insert(vec(ka));
    }
  });
  std::vector<PathElement> out;
  for (const auto& c : candidates) {
    Poly cp;
    for (const auto& [p, v] : c.terms()) cp.push_back({p, v});
    if (S.insert(vec(cp))) out.push_back(c);
  }
  return out;
}

}  // namespace

GradedPresentation gabrielPresentation(const FDAlgebra& A, int relationDegreeBound) {
  if (!A.peirceAdapted())
    throw StructuralError("basis is not adapted to the idempotents (each basis element must lie in some e_u A e_v)");
  const std::size_t n = A.dim(), m = A.vertexCount();
  std::vector<SparseVec> rad = radicalBasis(A);
  if (n - rad.size() != m)
    throw StructuralError("algebra is not basic: " + std::to_string(m) + " idempotents but dim A/rad A = " +
                          std::to_string(n - rad.size()));

  // Split a vector into its Peirce/degree blocks.
  using Key = std::tuple<VertexId, VertexId, int>;
  auto split = [&](const SparseVec& v) {
    std::map<Key, SparseVec> parts;
    for (const auto& e : v) {
      auto [u, w] = A.peirce(e.index);
      parts[{u, w, A.degree(e.index)}].push_back(e);
    }
    return parts;
  };
  std::map<Key, std::vector<SparseVec>> radBlocks, rad2Blocks;
  for (const auto& r : rad)
    for (auto& [k, v] : split(r)) radBlocks[k].push_back(v);
  for (const auto& v : productSpan(A, rad, rad))
    for (auto& [k, part] : split(v)) rad2Blocks[k].push_back(part);

  // Vertex and arrow naming.
  std::vector<std::string> vnames(m);
  const auto& words = A.words();
  for (std::size_t u = 0; u < m; ++u) {
    vnames[u] = std::to_string(u + 1);
    const SparseVec& e = A.idempotents()[u];
    if (!words.empty() && e.size() == 1 && words[e[0].index].isLazy())
      vnames[u] = A.wordQuiver()->vertexName(words[e[0].index].source());
  }
  std::vector<ArrowCandidate> arrows;
  for (auto& [key, vs] : radBlocks) {
    auto [u, w, d] = key;
    SparseEchelon E;
    for (const auto& r2 : rad2Blocks[key]) E.insert(r2);
    // Canonical candidates: unit vectors when the block is spanned by basis elements.
    std::vector<SparseVec> cands;
    bool unitSpan = std::all_of(vs.begin(), vs.end(), [](const SparseVec& v) { return v.size() == 1; });
    if (unitSpan) {
      for (const auto& v : vs) cands.push_back(sparse::unit(v[0].index));
      std::sort(cands.begin(), cands.end(), [](const SparseVec& a, const SparseVec& b) { return a[0].index < b[0].index; });
    } else {
      cands = vs;
    }
    for (const auto& c : cands) {
      if (!E.insert(c)) continue;
      ArrowCandidate ac{u, w, d, 1000000L + static_cast<long>(c.back().index), c, ""};
      if (c.size() == 1 && c[0].value.isOne()) {
        std::size_t bi = c[0].index;
        if (isIdentifier(A.labels()[bi]) && !std::count(vnames.begin(), vnames.end(), A.labels()[bi]))
          ac.label = A.labels()[bi];
        if (!words.empty() && words[bi].length() == 1) ac.rank = words[bi].arrows()[0];
      }
      arrows.push_back(std::move(ac));
    }
  }
  std::stable_sort(arrows.begin(), arrows.end(), [](const ArrowCandidate& a, const ArrowCandidate& b) {
    return std::tie(a.degree, a.rank) < std::tie(b.degree, b.rank);
  });
  std::set<std::string> used(vnames.begin(), vnames.end());
  for (const auto& a : arrows)
    if (!a.label.empty()) used.insert(a.label);
  int counter = 0;
  std::vector<Arrow> qarrows;
  std::map<std::string, int> degs;
  for (auto& a : arrows) {
    if (a.label.empty() || std::count_if(arrows.begin(), arrows.end(), [&](const ArrowCandidate& b) {
                             return b.label == a.label;
                           }) > 1) {
      std::string name;
      do name = "r" + std::to_string(++counter);
      while (used.count(name));
      used.insert(name);
      a.label = name;
    }
    qarrows.push_back({a.label, a.src, a.tgt});
    degs[a.label] = a.degree;
  }
  auto Q = std::make_shared<Quiver>(vnames, qarrows);
  const Quiver& q = *Q;
  ArrowGrading grading(degs);
  MonomialOrder order = MonomialOrder::lengthLex(q);

  // Word-by-word kernel extraction, per (source, target) block.
  int LL = loewyLength(A);
  std::size_t N = static_cast<std::size_t>(std::max(LL, 1));
  struct Accepted {
    Path word;
    SparseVec image;
  };
  std::vector<PathElement> G;
  std::set<std::vector<ArrowId>> tips;
  std::map<std::pair<VertexId, VertexId>, SparseEchelon> ech;
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> tagWords;
  std::vector<Accepted> layer;
  for (VertexId u = 0; u < m; ++u) {
    Path e(q, u);
    auto& E = ech.try_emplace({u, u}, true).first->second;
    auto& tw = tagWords[{u, u}];
    E.insertTracked(A.idempotents()[u], sparse::unit(static_cast<std::uint32_t>(tw.size())));
    tw.push_back(e);
    layer.push_back({e, A.idempotents()[u]});
  }
  int maxRelLen = 0;
  for (std::size_t L = 1; L <= N && !layer.empty(); ++L) {
    std::vector<std::pair<Path, SparseVec>> cands;
    for (const auto& acc : layer)
      for (ArrowId a : q.outgoing(acc.word.target())) {
        std::vector<ArrowId> w = acc.word.arrows();
        w.push_back(a);
        bool bad = false;
        for (std::size_t s = 0; s < w.size() && !bad; ++s)
          if (tips.count(std::vector<ArrowId>(w.begin() + s, w.end()))) bad = true;
        if (bad) continue;
        cands.push_back({Path(q, w), A.multiply(acc.image, arrows[a].vec)});
      }
    std::sort(cands.begin(), cands.end(),
              [&](const auto& x, const auto& y) { return order.compare(x.first, y.first) < 0; });
    std::vector<Accepted> next;
    for (auto& [w, img] : cands) {
      std::pair<VertexId, VertexId> blk{w.source(), w.target()};
      auto& E = ech.try_emplace(blk, true).first->second;
      auto& tw = tagWords[blk];
      auto rel = E.insertTracked(img, sparse::unit(static_cast<std::uint32_t>(tw.size())));
      tw.push_back(w);
      if (rel) {
        PathElement r;
        for (const auto& e : *rel) r.add(tw[e.index], e.value);
        Scalar lead = r.coefficient(w);
        r *= lead.inverse();
        G.push_back(std::move(r));
        tips.insert(w.arrows());
        maxRelLen = std::max(maxRelLen, static_cast<int>(L));
      } else {
        next.push_back({w, img});
      }
    }
    layer = std::move(next);
  }
  if (!layer.empty()) throw StructuralError("internal: normal words survive beyond the Loewy length");

  GroebnerBasis gb = buchbergerTruncated(G, order, static_cast<int>(N) + 1);
  std::vector<PathElement> minimal = minimalSubset(gb, q, N, G);
  for (const auto& r : minimal)
    if (static_cast<int>(r.maxLength()) > relationDegreeBound)
      throw StructuralError("incomplete presentation: a minimal relation of degree " +
                            std::to_string(r.maxLength()) + " exceeds the bound " +
                            std::to_string(relationDegreeBound));
  GradedPresentation P(Q, minimal, grading);

  // Certify by comparing graded dimensions.
  std::vector<long long> want(A.highestDegree() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++want[A.degree(i)];
  NormalBasis check = finiteNormalBasis(P, static_cast<int>(N) + 2 + A.highestDegree());
  std::vector<long long> got(want.size(), 0);
  auto deg = P.arrowDegrees();
  for (const auto& w : check.words) {
    int d = 0;
    for (ArrowId a : w.arrows()) d += deg[a];
    if (d >= static_cast<int>(got.size())) got.resize(d + 1, 0);
    ++got[d];
  }
  got.resize(std::max(got.size(), want.size()), 0);
  want.resize(got.size(), 0);
  for (std::size_t d = 0; d < got.size(); ++d)
    if (got[d] != want[d])
      throw StructuralError("incomplete presentation: dimension mismatch in degree " + std::to_string(d) +
                            " (" + std::to_string(got[d]) + " vs " + std::to_string(want[d]) + ")");
  return P;
}

// ---------------------------------------------------------------------------

GradedPresentation tensorProduct(const GradedPresentation& A, const GradedPresentation& B) {
  const Quiver &QA = A.q(), &QB = B.q();
  std::vector<std::string> vnames;
  auto vid = [&](VertexId u, VertexId v) { return static_cast<VertexId>(u * QB.vertexCount() + v); };
  for (VertexId u = 0; u < QA.vertexCount(); ++u)
    for (VertexId v = 0; v < QB.vertexCount(); ++v)
      vnames.push_back(QB.vertexCount() == 1 ? QA.vertexName(u)
                       : QA.vertexCount() == 1 ? QB.vertexName(v)
                                               : QA.vertexName(u) + "_" + QB.vertexName(v));
  std::vector<Arrow> arrows;
  std::set<std::string> used;
  auto fresh = [&](std::string name) {
    while (used.count(name)) name += "_";
    used.insert(name);
    return name;
  };
  std::vector<std::vector<ArrowId>> av(QA.arrowCount(), std::vector<ArrowId>(QB.vertexCount()));
  std::vector<std::vector<ArrowId>> ub(QA.vertexCount(), std::vector<ArrowId>(QB.arrowCount()));
  std::map<std::string, int> deg;
  auto dA = A.arrowDegrees(), dB = B.arrowDegrees();
  for (ArrowId a = 0; a < QA.arrowCount(); ++a)
    for (VertexId v = 0; v < QB.vertexCount(); ++v) {
      std::string name = fresh(QB.vertexCount() == 1 ? QA.arrow(a).name : QA.arrow(a).name + "_" + QB.vertexName(v));
      av[a][v] = static_cast<ArrowId>(arrows.size());
      arrows.push_back({name, vid(QA.arrow(a).source, v), vid(QA.arrow(a).target, v)});
      deg[name] = dA[a];
    }
  for (VertexId u = 0; u < QA.vertexCount(); ++u)
    for (ArrowId b = 0; b < QB.arrowCount(); ++b) {
      std::string name = fresh(QA.vertexCount() == 1 ? QB.arrow(b).name : QA.vertexName(u) + "_" + QB.arrow(b).name);
      ub[u][b] = static_cast<ArrowId>(arrows.size());
      arrows.push_back({name, vid(u, QB.arrow(b).source), vid(u, QB.arrow(b).target)});
      deg[name] = dB[b];
    }
  auto Q = std::make_shared<Quiver>(vnames, arrows);
  const Quiver& q = *Q;
  std::vector<PathElement> rels;
  for (const auto& r : A.relations)
    for (VertexId v = 0; v < QB.vertexCount(); ++v) {
      PathElement x;
      for (const auto& [p, c] : r.terms()) {
        if (p.isLazy()) {
          x.add(Path(q, vid(p.source(), v)), c);
          continue;
        }
        std::vector<ArrowId> w;
        for (ArrowId a : p.arrows()) w.push_back(av[a][v]);
        x.add(Path(q, w), c);
      }
      rels.push_back(x);
    }
  for (const auto& r : B.relations)
    for (VertexId u = 0; u < QA.vertexCount(); ++u) {
      PathElement x;
      for (const auto& [p, c] : r.terms()) {
        if (p.isLazy()) {
          x.add(Path(q, vid(u, p.source())), c);
          continue;
        }
        std::vector<ArrowId> w;
        for (ArrowId b : p.arrows()) w.push_back(ub[u][b]);
        x.add(Path(q, w), c);
      }
      rels.push_back(x);
    }
  for (ArrowId a = 0; a < QA.arrowCount(); ++a)
    for (ArrowId b = 0; b < QB.arrowCount(); ++b) {
      VertexId u = QA.arrow(a).source, u2 = QA.arrow(a).target;
      VertexId v = QB.arrow(b).source, v2 = QB.arrow(b).target;
      PathElement sq(Path(q, std::vector<ArrowId>{av[a][v], ub[u2][b]}));
      sq -= PathElement(Path(q, std::vector<ArrowId>{ub[u][b], av[a][v2]}));
      rels.push_back(sq);
    }
  return GradedPresentation(Q, rels, ArrowGrading(deg));
}

FDAlgebra quasiVeronese(const FDAlgebra& L, int a) {
  if (a < 1) throw ParameterError("quasi-Veronese index must be >= 1");
  const std::size_t n = L.dim();
  const std::size_t N = n * static_cast<std::size_t>(a);
  auto id = [&](std::size_t x, int i) { return static_cast<std::uint32_t>(x * a + i); };
  std::vector<SparseVec> table(N * N);
  std::vector<std::string> labels(N);
  std::vector<int> grading(N);
  for (std::size_t x = 0; x < n; ++x)
    for (int i = 0; i < a; ++i) {
      labels[id(x, i)] = a == 1 ? L.labels()[x] : L.labels()[x] + "#" + std::to_string(i);
      grading[id(x, i)] = (i + L.degree(x)) / a;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (int i = 0; i < a; ++i) {
      int j = (i + L.degree(x)) % a;
      for (std::size_t y = 0; y < n; ++y) {
        SparseVec p;
        for (const auto& e : L.product(x, y)) p.push_back({id(e.index, i), e.value});
        table[static_cast<std::size_t>(id(x, i)) * N + id(y, j)] = sparse::normalize(std::move(p));
      }
    }
  std::vector<SparseVec> idem;
  for (const auto& e : L.idempotents())
    for (int i = 0; i < a; ++i) {
      SparseVec v;
      for (const auto& t : e) {
        if (L.degree(t.index) != 0) throw StructuralError("idempotents must lie in degree 0");
        v.push_back({id(t.index, i), t.value});
      }
      idem.push_back(sparse::normalize(std::move(v)));
    }
  FDAlgebra out(std::move(labels), std::move(table), std::move(idem), std::move(grading));
  std::vector<SparseVec> rad;
  bool homogeneous = true;
  for (const auto& r : radicalBasis(L)) {
    for (const auto& e : r)
      if (L.degree(e.index) != L.degree(r.front().index)) homogeneous = false;
    for (int i = 0; i < a; ++i) {
      SparseVec v;
      for (const auto& e : r) v.push_back({id(e.index, i), e.value});
      rad.push_back(sparse::normalize(std::move(v)));
    }
  }
  if (homogeneous) out.setRadical(std::move(rad));
  return out;
}

FDAlgebra quasiVeronese(const GradedPresentation& L, int a, int bound) {
  try {
    return quasiVeronese(algebraFromPresentation(L, bound), a);
  } catch (const InconclusiveError& e) {
    throw ParameterError(std::string("quasi-Veronese needs a finite-dimensional algebra: ") + e.what());
  }
}

GradedPresentation degreeZeroPresentation(const GradedPresentation& L) {
  L.requireHomogeneous();
  const Quiver& Q = L.q();
  auto deg = L.arrowDegrees();
  std::vector<Arrow> arrows;
  std::vector<ArrowId> newId(Q.arrowCount(), 0);
  for (ArrowId a = 0; a < Q.arrowCount(); ++a)
    if (deg[a] == 0) {
      newId[a] = static_cast<ArrowId>(arrows.size());
      arrows.push_back(Q.arrow(a));
    }
  auto Q0 = std::make_shared<Quiver>(Q.vertices(), arrows);
  std::vector<PathElement> rels;
  for (const auto& r : L.relations) {
    if (r.isZero() || *r.homogeneousDegree(L.grading) != 0) continue;
    PathElement x;
    for (const auto& [p, c] : r.terms()) {
      if (p.isLazy()) {
        x.add(Path(*Q0, p.source()), c);
        continue;
      }
      std::vector<ArrowId> w;
      for (ArrowId a : p.arrows()) w.push_back(newId[a]);
      x.add(Path(*Q0, w), c);
    }
    rels.push_back(x);
  }
  return GradedPresentation(Q0, rels);
}

GrowthReport normalWordGrowth(const GradedPresentation& p, int bound) {
  GrowthReport rep;
  const Quiver& q = p.q();
  bool homogeneous = std::all_of(p.relations.begin(), p.relations.end(), lengthHomogeneous);
  int maxRel = 0;
  for (const auto& r : p.relations) maxRel = std::max(maxRel, static_cast<int>(r.maxLength()));
  if (bound < maxRel) throw ParameterError("bound below the longest relation");
  GroebnerBasis gb = buchbergerTruncated(p.relations, MonomialOrder::lengthLex(q), bound);
  if (p.relations.empty()) gb = groebnerFor(GradedPresentation(p.quiver, {}), bound);
  bool exact = homogeneous || gb.complete();

  long long count = 0;
  bool survives = false;
  gb.forEachNormalWord(bound, [&](const Path& w, int len) {
    ++count;
    if (len == bound)
      for (ArrowId a : q.outgoing(w.target()))
        if (gb.extensionIsNormal(w.arrows(), a)) survives = true;
  });
  if (exact && !survives) {
    rep.kind = GrowthReport::Kind::Finite;
    rep.count = count;
    return rep;
  }

  // Ufnarovski graph on normal words of length k = (longest tip) - 1.
  std::size_t k = 0;
  for (const auto& t : gb.leadingTerms()) k = std::max(k, t.length());
  k = k ? k - 1 : 0;
  struct State {
    VertexId vertex;
    std::vector<ArrowId> word;
    bool operator<(const State& o) const { return std::tie(vertex, word) < std::tie(o.vertex, o.word); }
  };
  std::vector<State> states;
  if (k == 0) {
    for (VertexId v = 0; v < q.vertexCount(); ++v)
      if (gb.isNormalWord(Path(q, v))) states.push_back({v, {}});
  } else {
    for (const auto& w : gb.normalWords(static_cast<int>(k))) states.push_back({w.target(), w.arrows()});
  }
  std::map<State, std::size_t> sid;
  for (std::size_t i = 0; i < states.size(); ++i) sid[states[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, ArrowId>>> adj(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (ArrowId a : q.outgoing(states[i].vertex)) {
      if (!gb.extensionIsNormal(states[i].word, a)) continue;
      std::vector<ArrowId> w = states[i].word;
      w.push_back(a);
      State nxt{q.arrow(a).target, k ? std::vector<ArrowId>(w.end() - k, w.end()) : std::vector<ArrowId>{}};
      auto it = sid.find(nxt);
      if (it != sid.end()) adj[i].push_back({it->second, a});
    }
  std::vector<int> color(states.size(), 0);
  std::vector<std::pair<std::size_t, ArrowId>> stack;
  std::vector<ArrowId> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    color[v] = 1;
    for (const auto& [w, a] : adj[v]) {
      stack.push_back({v, a});
      if (color[w] == 1) {
        std::size_t start = 0;
        while (stack[start].first != w) ++start;
        for (std::size_t i = start; i < stack.size(); ++i) cycle.push_back(stack[i].second);
        return true;
      }
      if (color[w] == 0 && dfs(w)) return true;
      stack.pop_back();
    }
    color[v] = 2;
    return false;
  };
  bool cyclic = false;
  for (std::size_t v = 0; v < states.size() && !cyclic; ++v)
    if (color[v] == 0) cyclic = dfs(v);
  if (cyclic && gb.complete()) {
    rep.kind = GrowthReport::Kind::Infinite;
    rep.cycle = cycle;
    return rep;
  }
  rep.kind = GrowthReport::Kind::Undecided;
  rep.suggestedBound = 2 * bound;
  if (cyclic) rep.cycle = cycle;
  return rep;
}

FDAlgebra degreeZeroPart(const GradedPresentation& L, int bound) {
  GradedPresentation P0 = degreeZeroPresentation(L);
  GrowthReport g = normalWordGrowth(P0, bound);
  if (g.kind == GrowthReport::Kind::Infinite) {
    std::string w;
    for (ArrowId a : g.cycle) w += (w.empty() ? "" : "*") + P0.q().arrow(a).name;
    throw StructuralError("degree-0 part is infinite dimensional; normal words pump along the cycle " + w);
  }
  if (g.kind == GrowthReport::Kind::Undecided)
    throw InconclusiveError("degree-0 part not decided at bound " + std::to_string(bound), g.suggestedBound);
  return algebraFromPresentation(P0, bound);
}

RelationDegrees minimalRelationDegrees(const GradedPresentation& p, int bound) {
  RelationDegrees out;
  const Quiver& q = p.q();
  std::vector<PathElement> comps;
  for (const auto& r : p.relations)
    for (auto& c : r.uniformComponents()) comps.push_back(c);
  bool homogeneous = std::all_of(comps.begin(), comps.end(), lengthHomogeneous);
  int maxRel = 0;
  for (const auto& r : comps) maxRel = std::max(maxRel, static_cast<int>(r.maxLength()));
  std::vector<PathElement> minimal;
  if (homogeneous) {
    GroebnerBasis gb = buchbergerTruncated(comps, MonomialOrder::lengthLex(q), std::max(maxRel, 1));
    // Shorter relations first so that longer consequences are discarded.
    std::stable_sort(comps.begin(), comps.end(),
                     [](const PathElement& a, const PathElement& b) { return a.maxLength() < b.maxLength(); });
    minimal = minimalSubset(gb, q, static_cast<std::size_t>(maxRel), comps);
  } else {
    GroebnerBasis gb = buchbergerTruncated(comps, MonomialOrder::lengthLex(q), bound);
    if (!gb.complete())
      throw InconclusiveError("inhomogeneous relations whose Groebner basis does not close within the bound",
                              2 * bound);
    // N such that every path of length N lies in the ideal.
    std::size_t N = 0;
    bool found = false;
    for (int L = 1; L <= bound && !found; ++L) {
      bool allZero = true;
      forEachPath(q, static_cast<std::size_t>(L), [&](const Path& w) {
        if (static_cast<int>(w.length()) == L && !gb.reduceWord(w).empty()) allZero = false;
      });
      if (allZero) {
        N = static_cast<std::size_t>(std::max(L, maxRel));
        found = true;
      }
    }
    if (!found) throw InconclusiveError("paths do not vanish within the bound", 2 * bound);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const PathElement& a, const PathElement& b) { return a.maxLength() < b.maxLength(); });
    minimal = minimalSubset(gb, q, N, comps);
  }
  out.isQuadratic = homogeneous && !minimal.empty();
  for (const auto& r : minimal) {
    out.lengths.push_back(static_cast<int>(r.maxLength()));
    if (r.maxLength() != 2) out.isQuadratic = false;
  }
  if (minimal.empty()) out.isQuadratic = true;
  std::sort(out.lengths.begin(), out.lengths.end());
  out.relations = std::move(minimal);
  return out;
}

PathElement substituteArrows(const PathElement& x, const std::map<std::string, PathElement>& images,
                             const Quiver& target) {
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    PathElement term(Path(target, target.vertex(p.quiver()->vertexName(p.source()))), c);
    for (ArrowId a : p.arrows()) {
      auto it = images.find(p.quiver()->arrow(a).name);
      if (it == images.end()) throw StructuralError("no image for arrow '" + p.quiver()->arrow(a).name + "'");
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

bool sameIdeal(const GradedPresentation& a, const GradedPresentation& b, int bound) {
  if (!(a.q() == b.q())) throw StructuralError("ideal comparison needs identical quivers");
  GroebnerBasis ga = groebnerFor(a, bound), gbb = groebnerFor(b, bound);
  for (const auto& r : b.relations)
    if (!ga.inIdeal(a.adopt(r))) return false;
  for (const auto& r : a.relations)
    if (!gbb.inIdeal(b.adopt(r))) return false;
  return true;
}

}  // namespace qfg
