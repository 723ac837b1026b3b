#include "qfg/potential.hpp"

#include <algorithm>
#include <map>

namespace qfg {

std::vector<ArrowId> canonicalRotation(const std::vector<ArrowId>& cycle) {
  std::vector<ArrowId> best = cycle, cur = cycle;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

Potential::Potential(QuiverPtr q, const std::vector<std::pair<Scalar, Path>>& terms) : quiver_(std::move(q)) {
  for (const auto& [c, p] : terms) {
    if (!sameQuiver(p.quiver(), quiver_.get())) throw StructuralError("potential term uses a different quiver");
    if (p.isLazy() || !p.isCycle()) throw StructuralError("potential term '" + p.str() + "' is not a cycle");
    if (c.isZero()) continue;
    terms_.push_back({c, canonicalRotation(p.arrows())});
  }
}

std::vector<PotentialTerm> Potential::merged() const {
  std::map<std::vector<ArrowId>, Scalar> acc;
  for (const auto& t : terms_) acc[t.cycle] += t.coef;
  std::vector<PotentialTerm> out;
  for (const auto& [cyc, c] : acc)
    if (!c.isZero()) out.push_back({c, cyc});
  return out;
}

std::string Potential::str() const {
  std::string s;
  for (const auto& t : terms_) {
    std::string w;
    for (ArrowId a : t.cycle) w += (w.empty() ? "" : "*") + quiver_->arrow(a).name;
    bool neg = t.coef.sign() < 0;
    Scalar mag = neg ? -t.coef : t.coef;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    s += (mag.isOne() ? "" : mag.str() + " ") + w;
  }
  return s.empty() ? "0" : s;
}

bool operator==(const Potential& a, const Potential& b) {
  if (!a.quiver_ || !b.quiver_) return a.quiver_ == b.quiver_;
  if (!(*a.quiver_ == *b.quiver_)) return false;
  auto ma = a.merged(), mb = b.merged();
  if (ma.size() != mb.size()) return false;
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (ma[i].cycle != mb[i].cycle || ma[i].coef != mb[i].coef) return false;
  return true;
}

PathElement cyclicDerivative(const Quiver& q, const std::vector<ArrowId>& cycle, ArrowId a) {
  PathElement out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] != a) continue;
    std::vector<ArrowId> rest(cycle.begin() + i + 1, cycle.end());
    rest.insert(rest.end(), cycle.begin(), cycle.begin() + i);
    out.add(rest.empty() ? Path(q, q.arrow(a).target) : Path(q, rest), Scalar(1));
  }
  return out;
}

PathElement cyclicDerivative(const Potential& W, ArrowId a) {
  PathElement out;
  for (const auto& t : W.terms()) out += cyclicDerivative(W.q(), t.cycle, a) * t.coef;
  return out;
}

PathElement cyclicDerivative(const Potential& W, const std::string& arrow) {
  return cyclicDerivative(W, W.q().arrowId(arrow));
}

GradedPresentation jacobianAlgebra(const Potential& W) {
  std::vector<PathElement> rels;
  for (ArrowId a = 0; a < W.q().arrowCount(); ++a) {
    PathElement d = cyclicDerivative(W, a);
    if (!d.isZero()) rels.push_back(std::move(d));
  }
  return GradedPresentation(W.quiver(), rels);
}

}  // namespace qfg
