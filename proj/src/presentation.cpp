#include "qfg/presentation.hpp"

#include <functional>

namespace qfg {

GradedPresentation::GradedPresentation(QuiverPtr q, std::vector<PathElement> rels, ArrowGrading g)
    : quiver(std::move(q)), relations(std::move(rels)), grading(std::move(g)) {
  grading.forQuiver(*quiver);  // totality
  for (const auto& r : relations)
    for (const auto& [p, c] : r.terms())
      if (!sameQuiver(p.quiver(), quiver.get()))
        throw StructuralError("relation '" + r.str() + "' uses a different quiver");
}

GradedPresentation::GradedPresentation(QuiverPtr q, std::vector<PathElement> rels)
    : GradedPresentation(q, std::move(rels), ArrowGrading::constant(*q, 0)) {}

void GradedPresentation::requireHomogeneous() const {
  for (const auto& r : relations)
    if (!r.homogeneousDegree(grading))
      throw StructuralError("relation '" + r.str() + "' is not homogeneous");
}

bool GradedPresentation::isAdmissible() const {
  for (const auto& r : relations) {
    if (r.isZero()) return false;
    for (const auto& [p, c] : r.terms())
      if (p.length() < 2) return false;
  }
  return true;
}

bool GradedPresentation::degreeZeroAcyclic() const {
  const Quiver& Q = *quiver;
  auto deg = arrowDegrees();
  std::vector<int> state(Q.vertexCount(), 0);
  std::function<bool(VertexId)> dfs = [&](VertexId v) {
    state[v] = 1;
    for (ArrowId a : Q.outgoing(v)) {
      if (deg[a] != 0) continue;
      VertexId w = Q.arrow(a).target;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (VertexId v = 0; v < Q.vertexCount(); ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

PathElement GradedPresentation::adopt(const PathElement& x) const {
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    if (!sameQuiver(p.quiver(), quiver.get())) throw StructuralError("element uses a different quiver");
    out.add(p.isLazy() ? Path(*quiver, p.source()) : Path(*quiver, p.arrows()), c);
  }
  return out;
}

Path pathOf(const Quiver& q, const std::vector<std::string>& arrowNames) {
  std::vector<ArrowId> ids;
  for (const auto& n : arrowNames) ids.push_back(q.arrowId(n));
  return Path(q, std::move(ids));
}

PathElement elementOf(const Quiver& q, const std::vector<std::pair<Scalar, std::vector<std::string>>>& terms) {
  PathElement x;
  for (const auto& [c, names] : terms) x.add(pathOf(q, names), c);
  return x;
}

}  // namespace qfg
