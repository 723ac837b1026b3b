#pragma once

#include <functional>
#include <random>

#include "qfg/presentation.hpp"

namespace gen {

using namespace qfg;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::shared_ptr<Quiver> randomQuiver(Rng& rng, int maxVertices, int maxArrows, bool allowLoops = true) {
  int nv = uniform(rng, 1, maxVertices), na = uniform(rng, 1, maxArrows);
  std::vector<std::string> vs;
  for (int i = 1; i <= nv; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> as;
  for (int i = 0; i < na; ++i) {
    VertexId s = uniform(rng, 0, nv - 1), t = uniform(rng, 0, nv - 1);
    if (!allowLoops && s == t && nv > 1) t = (s + 1) % nv;
    as.push_back({"a" + std::to_string(i + 1), s, t});
  }
  return std::make_shared<Quiver>(vs, as);
}

// Random walk; may stop early at a sink.
inline Path randomPath(Rng& rng, const Quiver& q, std::size_t maxLen) {
  VertexId v = uniform(rng, 0, static_cast<int>(q.vertexCount()) - 1);
  std::size_t len = uniform(rng, 0, static_cast<int>(maxLen));
  std::vector<ArrowId> w;
  while (w.size() < len && !q.outgoing(v).empty()) {
    const auto& out = q.outgoing(v);
    ArrowId a = out[uniform(rng, 0, static_cast<int>(out.size()) - 1)];
    w.push_back(a);
    v = q.arrow(a).target;
  }
  return w.empty() ? Path(q, v) : Path(q, w);
}

inline Scalar randomCoef(Rng& rng) {
  int c = 0;
  while (c == 0) c = uniform(rng, -5, 5);
  return Scalar(c);
}

inline PathElement randomElement(Rng& rng, const Quiver& q, int terms, std::size_t maxLen) {
  PathElement x;
  for (int i = 0; i < terms; ++i) x.add(randomPath(rng, q, maxLen), randomCoef(rng));
  return x;
}

}  // namespace gen

namespace gen {

// Arrows only go from lower to higher vertex, so kQ is finite dimensional.
inline std::shared_ptr<Quiver> randomAcyclicQuiver(Rng& rng, int maxVertices, int maxArrows) {
  int nv = uniform(rng, 1, maxVertices);
  std::vector<std::string> vs;
  for (int i = 1; i <= nv; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> as;
  if (nv > 1) {
    int na = uniform(rng, 0, maxArrows);
    for (int i = 0; i < na; ++i) {
      VertexId s = uniform(rng, 0, nv - 2);
      VertexId t = uniform(rng, static_cast<int>(s) + 1, nv - 1);
      as.push_back({"a" + std::to_string(i + 1), s, t});
    }
  }
  return std::make_shared<Quiver>(vs, as);
}

// Up to `count` relations, each a combination of paths of one length >= 2
// sharing endpoints.
inline std::vector<PathElement> randomAdmissibleRelations(Rng& rng, const Quiver& q, int count) {
  std::vector<Path> longPaths;
  std::function<void(const Path&)> walk = [&](const Path& w) {
    if (w.length() >= 2) longPaths.push_back(w);
    for (ArrowId a : q.outgoing(w.target())) walk(*composePaths(w, Path(q, std::vector<ArrowId>{a})));
  };
  for (VertexId v = 0; v < q.vertexCount(); ++v) walk(Path(q, v));
  std::vector<PathElement> rels;
  if (longPaths.empty()) return rels;
  for (int i = 0; i < count; ++i) {
    const Path& p = longPaths[uniform(rng, 0, static_cast<int>(longPaths.size()) - 1)];
    PathElement r(p, randomCoef(rng));
    for (const auto& w : longPaths)
      if (w != p && w.source() == p.source() && w.target() == p.target() && w.length() == p.length() &&
          uniform(rng, 0, 1))
        r.add(w, randomCoef(rng));
    rels.push_back(r);
  }
  return rels;
}

// Monomial or +-1 binomial relations homogeneous for path length, on any
// quiver (cycles allowed). Small coefficients keep normal forms small.
inline std::vector<PathElement> randomBinomialRelations(Rng& rng, const Quiver& q, int count, int maxLen) {
  std::vector<Path> paths;
  std::function<void(const Path&)> walk = [&](const Path& w) {
    if (w.length() >= 2) paths.push_back(w);
    if (static_cast<int>(w.length()) == maxLen) return;
    for (ArrowId a : q.outgoing(w.target())) walk(*composePaths(w, Path(q, std::vector<ArrowId>{a})));
  };
  for (VertexId v = 0; v < q.vertexCount(); ++v) walk(Path(q, v));
  std::vector<PathElement> rels;
  if (paths.empty()) return rels;
  for (int i = 0; i < count; ++i) {
    const Path& p = paths[uniform(rng, 0, static_cast<int>(paths.size()) - 1)];
    PathElement r(p, Scalar(1));
    std::vector<const Path*> partners;
    for (const auto& w : paths)
      if (w != p && w.source() == p.source() && w.target() == p.target() && w.length() == p.length())
        partners.push_back(&w);
    if (!partners.empty() && uniform(rng, 0, 2)) {
      const Path* w = partners[uniform(rng, 0, static_cast<int>(partners.size()) - 1)];
      r.add(*w, Scalar(uniform(rng, 0, 1) ? 1 : -1));
    }
    rels.push_back(r);
  }
  return rels;
}

}  // namespace gen
