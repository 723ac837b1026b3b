#include "qfg/gb.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace qfg {

MonomialOrder MonomialOrder::lengthLex(const Quiver& q) {
  MonomialOrder o;
  o.kind_ = Kind::LengthLex;
  o.deg_.assign(q.arrowCount(), 1);
  o.rank_.resize(q.arrowCount());
  for (ArrowId a = 0; a < q.arrowCount(); ++a) o.rank_[a] = static_cast<int>(a);
  return o;
}

MonomialOrder MonomialOrder::graded(const Quiver& q, const ArrowGrading& g) {
  MonomialOrder o = lengthLex(q);
  o.kind_ = Kind::GradedLengthLex;
  o.deg_ = g.forQuiver(q);
  return o;
}

MonomialOrder MonomialOrder::forPresentation(const GradedPresentation& p) {
  auto deg = p.arrowDegrees();
  bool positive = std::any_of(deg.begin(), deg.end(), [](int d) { return d > 0; });
  if (positive && p.degreeZeroAcyclic()) return graded(p.q(), p.grading);
  return lengthLex(p.q());
}

MonomialOrder MonomialOrder::withPrecedence(const Quiver& q, const std::vector<std::string>& first) const {
  MonomialOrder o = *this;
  std::vector<bool> placed(q.arrowCount(), false);
  int r = 0;
  for (const auto& name : first) {
    ArrowId a = q.arrowId(name);
    if (placed[a]) throw ParameterError("arrow '" + name + "' listed twice in precedence");
    placed[a] = true;
    o.rank_[a] = r++;
  }
  for (ArrowId a = 0; a < q.arrowCount(); ++a)
    if (!placed[a]) o.rank_[a] = r++;
  return o;
}

int MonomialOrder::weight(const std::vector<ArrowId>& arrows) const {
  if (kind_ == Kind::LengthLex) return static_cast<int>(arrows.size());
  int w = 0;
  for (ArrowId a : arrows) w += deg_[a];
  return w;
}

int MonomialOrder::weight(const Path& p) const { return weight(p.arrows()); }

int MonomialOrder::compare(const Path& a, const Path& b) const {
  if (kind_ == Kind::GradedLengthLex) {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  const auto &x = a.arrows(), &y = b.arrows();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return rank_[x[i]] < rank_[y[i]] ? 1 : -1;
  if (a.source() != b.source()) return a.source() < b.source() ? 1 : -1;
  if (a.target() != b.target()) return a.target() < b.target() ? 1 : -1;
  return 0;
}

namespace {

struct Desc {
  const MonomialOrder* o;
  bool operator()(const Path& a, const Path& b) const { return o->compare(a, b) > 0; }
};
using WorkMap = std::map<Path, Scalar, Desc>;

void accumulate(WorkMap& m, const Path& p, const Scalar& c) {
  if (c.isZero()) return;
  auto [it, ins] = m.emplace(p, c);
  if (ins) return;
  it->second += c;
  if (it->second.isZero()) m.erase(it);
}

Path splice(const Path& w, std::size_t pos, std::size_t len, const Path& mid) {
  const auto& a = w.arrows();
  std::vector<ArrowId> out;
  out.reserve(a.size() - len + mid.length());
  out.insert(out.end(), a.begin(), a.begin() + pos);
  out.insert(out.end(), mid.arrows().begin(), mid.arrows().end());
  out.insert(out.end(), a.begin() + pos + len, a.end());
  if (out.empty()) return Path(*w.quiver(), mid.source());
  return Path(*w.quiver(), std::move(out));
}

Path concat(const Path& a, const Path& b) {
  auto p = composePaths(a, b);
  if (!p) throw StructuralError("internal: non-composable concatenation");
  return *p;
}

// L·g·R, which stays sorted because the order is multiplicative.
Poly sandwich(const Path& L, const Poly& g, const Path& R) {
  Poly out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back({concat(concat(L, t.path), R), t.coef});
  return out;
}

Poly subtract(const Poly& a, const Poly& b, const MonomialOrder& o) {
  Poly out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : o.compare(a[i].path, b[j].path);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].path, -b[j].coef});
      ++j;
    } else {
      Scalar v = a[i].coef - b[j].coef;
      if (!v.isZero()) out.push_back({a[i].path, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void makeMonic(Poly& p) {
  Scalar inv = p.front().coef.inverse();
  for (auto& t : p) t.coef *= inv;
}

}  // namespace

Poly toPoly(const PathElement& x, const MonomialOrder& order) {
  Poly p;
  for (const auto& [path, c] : x.terms()) p.push_back({path, c});
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.path, b.path); });
  return p;
}

PathElement fromPoly(const Poly& p) {
  PathElement x;
  for (const auto& t : p) x.add(t.path, t.coef);
  return x;
}

std::vector<PathElement> GroebnerBasis::elements() const {
  std::vector<PathElement> out;
  for (const auto& p : polys_) out.push_back(fromPoly(p));
  return out;
}

std::vector<Path> GroebnerBasis::leadingTerms() const {
  std::vector<Path> out;
  for (const auto& p : polys_) out.push_back(p.front().path);
  return out;
}

void GroebnerBasis::buildTrie() {
  trie_.assign(1, Node{});
  killedVertex_.assign(quiver_ ? quiver_->vertexCount() : 0, false);
  for (std::size_t e = 0; e < polys_.size(); ++e) {
    const Path& tip = polys_[e].front().path;
    if (tip.isLazy()) {
      killedVertex_[tip.source()] = true;
      continue;
    }
    std::uint32_t node = 0;
    const auto& a = tip.arrows();
    for (std::size_t i = a.size(); i-- > 0;) {
      auto& nx = trie_[node].next;
      auto it = std::find_if(nx.begin(), nx.end(), [&](const auto& pr) { return pr.first == a[i]; });
      if (it == nx.end()) {
        trie_.push_back(Node{});
        std::uint32_t child = static_cast<std::uint32_t>(trie_.size() - 1);
        trie_[node].next.push_back({a[i], child});
        node = child;
      } else {
        node = it->second;
      }
    }
    trie_[node].elem = static_cast<int>(e);
  }
}

int GroebnerBasis::tipEndingAt(const std::vector<ArrowId>& w, std::size_t end, std::size_t* len) const {
  std::uint32_t node = 0;
  for (std::size_t i = end; i-- > 0;) {
    const auto& nx = trie_[node].next;
    auto it = std::find_if(nx.begin(), nx.end(), [&](const auto& pr) { return pr.first == w[i]; });
    if (it == nx.end()) return -1;
    node = it->second;
    if (trie_[node].elem >= 0) {
      *len = end - i;
      return trie_[node].elem;
    }
  }
  return -1;
}

std::optional<std::pair<std::size_t, std::size_t>> GroebnerBasis::findTip(const Path& w, std::size_t* elem) const {
  if (trie_.empty()) return std::nullopt;
  bool anyKilled = std::find(killedVertex_.begin(), killedVertex_.end(), true) != killedVertex_.end();
  if (anyKilled) {
    auto killedAt = [&](VertexId v) -> bool { return killedVertex_[v]; };
    std::optional<VertexId> hit;
    if (killedAt(w.source())) hit = w.source();
    for (ArrowId a : w.arrows())
      if (!hit && killedAt(w.quiver()->arrow(a).target)) hit = w.quiver()->arrow(a).target;
    if (hit) {
      if (elem)
        for (std::size_t e = 0; e < polys_.size(); ++e)
          if (polys_[e].front().path.isLazy() && polys_[e].front().path.source() == *hit) *elem = e;
      return std::make_pair(std::size_t(0), std::size_t(0));
    }
  }
  const auto& a = w.arrows();
  for (std::size_t end = 1; end <= a.size(); ++end) {
    std::size_t len = 0;
    int e = tipEndingAt(a, end, &len);
    if (e >= 0) {
      if (elem) *elem = static_cast<std::size_t>(e);
      return std::make_pair(end - len, len);
    }
  }
  return std::nullopt;
}

bool GroebnerBasis::isNormalWord(const Path& w) const { return !findTip(w); }

bool GroebnerBasis::extensionIsNormal(const std::vector<ArrowId>& word, ArrowId a) const {
  if (killedVertex_.size() && killedVertex_[quiver_->arrow(a).target]) return false;
  std::vector<ArrowId> w = word;
  w.push_back(a);
  std::size_t len;
  return tipEndingAt(w, w.size(), &len) < 0;
}

Poly GroebnerBasis::reduce(Poly x) const {
  if (polys_.empty()) return x;
  WorkMap work(Desc{&order_});
  for (auto& t : x) accumulate(work, t.path, t.coef);
  Poly out;
  while (!work.empty()) {
    auto it = work.begin();
    Path m = it->first;
    Scalar c = it->second;
    work.erase(it);
    std::size_t e = 0;
    auto occ = findTip(m, &e);
    if (!occ) {
      out.push_back({std::move(m), std::move(c)});
      continue;
    }
    const Poly& g = polys_[e];
    if (g.front().path.isLazy()) continue;
    for (std::size_t k = 1; k < g.size(); ++k)
      accumulate(work, splice(m, occ->first, occ->second, g[k].path), -c * g[k].coef);
  }
  return out;
}

Poly GroebnerBasis::reduceWord(const Path& w) const { return reduce(Poly{{w, Scalar(1)}}); }

PathElement GroebnerBasis::normalForm(const PathElement& x) const {
  for (const auto& [p, c] : x.terms())
    if (order_.weight(p) > bound_)
      throw ParameterError("element of weight " + std::to_string(order_.weight(p)) +
                           " exceeds the Groebner basis bound " + std::to_string(bound_));
  return fromPoly(reduce(toPoly(x, order_)));
}

void GroebnerBasis::forEachNormalWord(int maxWeight, const std::function<void(const Path&, int)>& fn) const {
  if (maxWeight > bound_) throw ParameterError("normal words requested beyond the basis bound");
  const Quiver& q = *quiver_;
  std::vector<ArrowId> word;
  std::function<void(VertexId, int)> dfs = [&](VertexId v, int w) {
    for (ArrowId a : q.outgoing(v)) {
      int nw = w + order_.arrowWeight(a);
      if (nw > maxWeight) continue;
      VertexId t = q.arrow(a).target;
      if (!killedVertex_.empty() && killedVertex_[t]) continue;
      word.push_back(a);
      std::size_t len;
      if (trie_.empty() || tipEndingAt(word, word.size(), &len) < 0) {
        fn(Path(q, word), nw);
        dfs(t, nw);
      }
      word.pop_back();
    }
  };
  for (VertexId v = 0; v < q.vertexCount(); ++v) {
    if (!killedVertex_.empty() && killedVertex_[v]) continue;
    fn(Path(q, v), 0);
    dfs(v, 0);
  }
}

std::vector<Path> GroebnerBasis::normalWords(int weight) const {
  std::vector<Path> out;
  forEachNormalWord(weight, [&](const Path& p, int w) {
    if (w == weight) out.push_back(p);
  });
  return out;
}

namespace {

struct Overlap {
  int weight;
  std::uint64_t seq;
  std::size_t i, j, k;
  bool operator>(const Overlap& o) const { return std::tie(weight, seq) > std::tie(o.weight, o.seq); }
};

bool divides(const Path& tip, const Path& w) {
  if (tip.isLazy()) {
    if (w.source() == tip.source()) return true;
    for (ArrowId a : w.arrows())
      if (w.quiver()->arrow(a).target == tip.source()) return true;
    return false;
  }
  const auto &t = tip.arrows(), &a = w.arrows();
  return std::search(a.begin(), a.end(), t.begin(), t.end()) != a.end();
}

}  // namespace

GroebnerBasis buchbergerTruncated(const std::vector<PathElement>& relations, const MonomialOrder& order,
                                  int bound) {
  GroebnerBasis gb;
  gb.order_ = order;
  gb.bound_ = bound;
  for (const auto& r : relations)
    for (const auto& [p, c] : r.terms()) {
      if (!gb.quiver_) gb.quiver_ = p.quiver();
      if (!sameQuiver(gb.quiver_, p.quiver())) throw StructuralError("relations use different quivers");
    }
  if (!gb.quiver_) return gb;
  if (order.precedenceRank().size() != gb.quiver_->arrowCount())
    throw StructuralError("monomial order built for a different quiver");

  std::vector<Poly> polys;
  std::vector<bool> alive;
  std::priority_queue<Overlap, std::vector<Overlap>, std::greater<Overlap>> queue;
  std::uint64_t seq = 0;

  auto refresh = [&]() {
    gb.polys_.clear();
    std::vector<Poly> live;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (alive[i]) live.push_back(polys[i]);
    gb.polys_ = std::move(live);
    gb.buildTrie();
  };

  auto pushOverlaps = [&](std::size_t i, std::size_t j) {
    const Path &u = polys[i].front().path, &v = polys[j].front().path;
    if (u.isLazy() || v.isLazy()) return;
    const auto &ua = u.arrows(), &va = v.arrows();
    std::size_t maxK = std::min(ua.size(), va.size());
    for (std::size_t k = 1; k < maxK; ++k) {
      if (!std::equal(ua.end() - k, ua.end(), va.begin())) continue;
      std::vector<ArrowId> w = ua;
      w.insert(w.end(), va.begin() + k, va.end());
      int wt = order.weight(w);
      if (wt > bound) {
        gb.complete_ = false;
        continue;
      }
      queue.push({wt, seq++, i, j, k});
    }
  };

  std::vector<Poly> pending;
  auto addElement = [&](Poly p) {
    pending.push_back(std::move(p));
    while (!pending.empty()) {
      Poly cur = std::move(pending.back());
      pending.pop_back();
      refresh();
      cur = gb.reduce(std::move(cur));
      if (cur.empty()) continue;
      makeMonic(cur);
      const Path tip = cur.front().path;
      for (std::size_t j = 0; j < polys.size(); ++j)
        if (alive[j] && divides(tip, polys[j].front().path)) {
          alive[j] = false;
          pending.push_back(polys[j]);
        }
      polys.push_back(std::move(cur));
      alive.push_back(true);
      std::size_t n = polys.size() - 1;
      for (std::size_t j = 0; j <= n; ++j)
        if (alive[j]) {
          pushOverlaps(n, j);
          if (j != n) pushOverlaps(j, n);
        }
    }
    refresh();
  };

  for (const auto& r : relations)
    for (const auto& comp : r.uniformComponents()) {
      int w = 0;
      for (const auto& [p, c] : comp.terms()) w = std::max(w, order.weight(p));
      if (w > bound)
        throw ParameterError("relation '" + comp.str() + "' has weight " + std::to_string(w) +
                             " above the bound " + std::to_string(bound));
      addElement(toPoly(comp, order));
    }

  while (!queue.empty()) {
    Overlap ov = queue.top();
    queue.pop();
    if (!alive[ov.i] || !alive[ov.j]) continue;
    const Poly &gi = polys[ov.i], &gj = polys[ov.j];
    const Path &u = gi.front().path, &v = gj.front().path;
    Path right = v.subpath(ov.k, v.length() - ov.k);
    Path left = u.subpath(0, u.length() - ov.k);
    Path lazyR(*gb.quiver_, v.target()), lazyL(*gb.quiver_, u.source());
    Poly s = subtract(sandwich(lazyL, gi, right), sandwich(left, gj, lazyR), order);
    s = gb.reduce(std::move(s));
    if (!s.empty()) addElement(std::move(s));
  }

  // Reduced basis: tail-reduce, then sort by leading term.
  refresh();
  std::vector<Poly> reduced;
  for (const auto& p : gb.polys_) {
    Poly tail(p.begin() + 1, p.end());
    Poly r{p.front()};
    for (auto& t : gb.reduce(std::move(tail))) r.push_back(std::move(t));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return order.compare(a.front().path, b.front().path) < 0; });
  gb.polys_ = std::move(reduced);
  gb.buildTrie();
  return gb;
}

GroebnerBasis groebnerFor(const GradedPresentation& p, int bound) {
  auto order = MonomialOrder::forPresentation(p);
  GroebnerBasis gb = buchbergerTruncated(p.relations, order, bound);
  if (!gb.quiver_) {
    gb.quiver_ = p.quiver.get();
    gb.buildTrie();
  }
  return gb;
}

std::vector<long long> gradedDimensions(const GradedPresentation& p, int bound) {
  p.requireHomogeneous();
  if (!p.degreeZeroAcyclic())
    throw ParameterError("degree-0 arrows contain an oriented cycle; graded components are infinite");
  auto order = MonomialOrder::graded(p.q(), p.grading);
  std::vector<PathElement> rels;
  for (const auto& r : p.relations)
    if (*r.homogeneousDegree(p.grading) <= bound) rels.push_back(r);
  GroebnerBasis gb = buchbergerTruncated(rels, order, std::max(bound, 0));
  if (!gb.quiver_) {
    gb.quiver_ = p.quiver.get();
    gb.buildTrie();
  }
  std::vector<long long> dims(bound + 1, 0);
  gb.forEachNormalWord(bound, [&](const Path&, int w) { ++dims[w]; });
  return dims;
}

}  // namespace qfg
