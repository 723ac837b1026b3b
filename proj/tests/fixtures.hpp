#pragma once

#include <memory>

#include "qfg/present.hpp"
#include "qfg/presentation.hpp"

namespace fixtures {

using namespace qfg;

// 1 -a1-> 2 -a2-> 3 and 1 -b-> 3, with r1, r2: 3 -> 1 in degree 1.
inline GradedPresentation exampleTrivialExtension() {
  auto q = std::make_shared<Quiver>(Quiver::fromNames(
      {"1", "2", "3"},
      {{"a1", "1", "2"}, {"a2", "2", "3"}, {"b", "1", "3"}, {"r1", "3", "1"}, {"r2", "3", "1"}}));
  const Quiver& Q = *q;
  std::vector<PathElement> rels = {
      elementOf(Q, {{1, {"b", "r1"}}, {-1, {"a1", "a2", "r2"}}}),
      elementOf(Q, {{1, {"r1", "b"}}, {-1, {"r2", "a1", "a2"}}}),
      elementOf(Q, {{1, {"a2", "r1"}}}),
      elementOf(Q, {{1, {"r1", "a1"}}}),
      elementOf(Q, {{1, {"b", "r2"}}}),
      elementOf(Q, {{1, {"r2", "b"}}}),
  };
  return GradedPresentation(q, rels, ArrowGrading({{"a1", 0}, {"a2", 0}, {"b", 0}, {"r1", 1}, {"r2", 1}}));
}

// Doubled m-Kronecker quiver with the mesh relations; dual arrows in degree 1.
inline GradedPresentation kroneckerPreprojective(int m) {
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = 1; i <= m; ++i) arrows.push_back({"a" + std::to_string(i), "1", "2"});
  for (int i = m; i >= 1; --i) arrows.push_back({"s" + std::to_string(i), "2", "1"});
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1", "2"}, arrows));
  const Quiver& Q = *q;
  PathElement r1, r2;
  std::map<std::string, int> deg;
  for (int i = 1; i <= m; ++i) {
    std::string a = "a" + std::to_string(i), s = "s" + std::to_string(i);
    r1 += elementOf(Q, {{1, {a, s}}});
    r2 += elementOf(Q, {{1, {s, a}}});
    deg[a] = 0;
    deg[s] = 1;
  }
  return GradedPresentation(q, {r1, r2}, ArrowGrading(deg));
}

// The dimer quiver on the square with doubled arrows x_i, y_i: i -> i+1.
inline std::shared_ptr<Quiver> dimerQuiver() {
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = 1; i <= 4; ++i) {
    std::string s = std::to_string(i), t = std::to_string(i % 4 + 1);
    arrows.push_back({"x" + s, s, t});
    arrows.push_back({"y" + s, s, t});
  }
  return std::make_shared<Quiver>(Quiver::fromNames({"1", "2", "3", "4"}, arrows));
}

}  // namespace fixtures

namespace fixtures {

// Cyclic derivatives of x1x2x3x4 + y1y2y3y4 - x1y2x3y4 - y1x2y3x4.
inline std::vector<PathElement> dimerRelations(const Quiver& Q) {
  auto rel = [&](std::vector<std::string> p, std::vector<std::string> n) {
    return elementOf(Q, {{1, p}, {-1, n}});
  };
  return {
      rel({"x2", "x3", "x4"}, {"y2", "x3", "y4"}), rel({"x3", "x4", "x1"}, {"y3", "x4", "y1"}),
      rel({"x4", "x1", "x2"}, {"y4", "x1", "y2"}), rel({"x1", "x2", "x3"}, {"y1", "x2", "y3"}),
      rel({"y2", "y3", "y4"}, {"x2", "y3", "x4"}), rel({"y3", "y4", "y1"}, {"x3", "y4", "x1"}),
      rel({"y4", "y1", "y2"}, {"x4", "y1", "x2"}), rel({"y1", "y2", "y3"}, {"x1", "y2", "x3"}),
  };
}

inline GradedPresentation dimerJacobian() {
  auto q = dimerQuiver();
  std::map<std::string, int> deg;
  for (const auto& a : q->arrows()) deg[a.name] = a.name.back() == '4' ? 1 : 0;
  return GradedPresentation(q, dimerRelations(*q), ArrowGrading(deg));
}

}  // namespace fixtures

namespace fixtures {

inline GradedPresentation pathAlgebra(std::vector<std::string> vs,
                                      std::vector<std::tuple<std::string, std::string, std::string>> as) {
  return GradedPresentation(std::make_shared<Quiver>(Quiver::fromNames(std::move(vs), std::move(as))), {});
}

inline GradedPresentation kronecker(int m) {
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (int i = 1; i <= m; ++i) as.push_back({"a" + std::to_string(i), "1", "2"});
  return pathAlgebra({"1", "2"}, as);
}

inline GradedPresentation linearA(int n) {
  std::vector<std::string> vs;
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) as.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  return pathAlgebra(vs, as);
}

// Degree-0 part of the trivial extension example: type A2-tilde.
inline GradedPresentation exampleAlgebra() {
  return pathAlgebra({"1", "2", "3"}, {{"a1", "1", "2"}, {"a2", "2", "3"}, {"b", "1", "3"}});
}

inline GradedPresentation dimerDegreeZero() { return degreeZeroPresentation(dimerJacobian()); }

// Quiver and relations of the trivial extension of kQ/I.
inline GradedPresentation delta(const GradedPresentation& A) {
  return gabrielPresentation(trivialExtension(algebraFromPresentation(A)), 8);
}

}  // namespace fixtures
