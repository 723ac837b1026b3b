#include <doctest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "qfg/gb.hpp"
#include "qfg/linalg.hpp"

using namespace qfg;

namespace {

// Span of all translates p·r·q of degree <= D inside the path space.
struct DenseIdeal {
  std::vector<Path> paths;
  std::map<Path, std::uint32_t> index;
  SparseEchelon span;
  std::vector<long long> pathCount;
  std::vector<long long> idealDim;

  DenseIdeal(const GradedPresentation& p, int D) : pathCount(D + 1, 0), idealDim(D + 1, 0) {
    const Quiver& q = p.q();
    auto deg = p.arrowDegrees();
    std::vector<int> pdeg;
    for (VertexId v = 0; v < q.vertexCount(); ++v) {
      paths.push_back(Path(q, v));
      pdeg.push_back(0);
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (ArrowId a : q.outgoing(paths[i].target()))
        if (pdeg[i] + deg[a] <= D) {
          paths.push_back(*composePaths(paths[i], Path(q, std::vector<ArrowId>{a})));
          pdeg.push_back(pdeg[i] + deg[a]);
        }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      index.emplace(paths[i], static_cast<std::uint32_t>(i));
      ++pathCount[pdeg[i]];
    }
    for (const auto& r : p.relations)
      for (const auto& comp : r.uniformComponents()) {
        int dr = *comp.homogeneousDegree(p.grading);
        if (dr > D) continue;
        VertexId u = comp.terms().begin()->first.source(), v = comp.terms().begin()->first.target();
        for (std::size_t i = 0; i < paths.size(); ++i) {
          if (paths[i].target() != u || pdeg[i] + dr > D) continue;
          for (std::size_t j = 0; j < paths.size(); ++j) {
            if (paths[j].source() != v || pdeg[i] + dr + pdeg[j] > D) continue;
            std::vector<Entry> es;
            for (const auto& [w, c] : comp.terms())
              es.push_back({index.at(*composePaths(*composePaths(paths[i], w), paths[j])), c});
            SparseVec x = sparse::normalize(std::move(es));
            if (span.insert(x)) ++idealDim[pdeg[i] + dr + pdeg[j]];
          }
        }
      }
  }

  std::vector<long long> quotientDims() const {
    std::vector<long long> out;
    for (std::size_t d = 0; d < pathCount.size(); ++d) out.push_back(pathCount[d] - idealDim[d]);
    return out;
  }

  bool contains(const PathElement& x) const {
    std::vector<Entry> es;
    for (const auto& [w, c] : x.terms()) es.push_back({index.at(w), c});
    return span.inSpan(sparse::normalize(std::move(es)));
  }
};

// Random relation homogeneous for the grading, supported in one e_u kQ e_v.
PathElement randomHomogeneous(gen::Rng& rng, const GradedPresentation& p, std::uint32_t characteristic) {
  const Quiver& q = p.q();
  Path lead = gen::randomPath(rng, q, 3);
  while (lead.isLazy()) lead = gen::randomPath(rng, q, 3);
  int d = pathDegree(lead, p.grading);
  std::vector<Path> same;
  auto deg = p.arrowDegrees();
  std::function<void(const Path&, int)> walk = [&](const Path& w, int wd) {
    if (wd == d && w.target() == lead.target() && w != lead && !w.isLazy()) same.push_back(w);
    for (ArrowId a : q.outgoing(w.target()))
      if (wd + deg[a] <= d) walk(*composePaths(w, Path(q, std::vector<ArrowId>{a})), wd + deg[a]);
  };
  walk(Path(q, lead.source()), 0);
  auto coef = [&] { return characteristic ? gen::randomCoef(rng).inField(characteristic) : gen::randomCoef(rng); };
  PathElement r(lead, coef());
  int extra = same.empty() ? 0 : gen::uniform(rng, 0, 2);
  for (int i = 0; i < extra; ++i) r.add(same[gen::uniform(rng, 0, static_cast<int>(same.size()) - 1)], coef());
  return r;
}

}  // namespace

TEST_CASE("basic bases") {
  auto q = std::make_shared<Quiver>(
      Quiver::fromNames({"1", "2", "3"}, {{"a1", "1", "2"}, {"a2", "2", "3"}, {"b", "1", "3"}}));
  const Quiver& Q = *q;
  MonomialOrder ord = MonomialOrder::lengthLex(Q);
  CHECK(buchbergerTruncated({}, ord, 4).polys().empty());
  PathElement a1a2 = elementOf(Q, {{1, {"a1", "a2"}}});
  GroebnerBasis gb = buchbergerTruncated({a1a2}, ord, 4);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == a1a2);
  CHECK(gb.complete());
  CHECK(gb.normalForm(a1a2).isZero());
  CHECK(gb.normalForm(elementOf(Q, {{1, {"b"}}, {1, {"a1", "a2"}}})) == elementOf(Q, {{1, {"b"}}}));
  CHECK_THROWS_AS(buchbergerTruncated({a1a2}, ord, 1), ParameterError);

  auto line = std::make_shared<Quiver>(Quiver::fromNames({"1", "2"}, {{"a", "1", "2"}}));
  GradedPresentation P(line, {}, ArrowGrading({{"a", 1}}));
  CHECK(gradedDimensions(P, 3) == std::vector<long long>{2, 1, 0, 0});
}

TEST_CASE("normal forms refuse elements above the bound") {
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"x", "1", "1"}}));
  GroebnerBasis gb = buchbergerTruncated({elementOf(*q, {{1, {"x", "x"}}})}, MonomialOrder::lengthLex(*q), 3);
  CHECK(gb.normalForm(elementOf(*q, {{1, {"x", "x", "x"}}})).isZero());
  CHECK_THROWS_AS(gb.normalForm(elementOf(*q, {{1, {"x", "x", "x", "x"}}})), ParameterError);
}

TEST_CASE("trivial extension example") {
  GradedPresentation D = fixtures::exampleTrivialExtension();
  CHECK(gradedDimensions(D, 5) == std::vector<long long>{7, 7, 0, 0, 0, 0});
  GroebnerBasis gb = buchbergerTruncated(D.relations, MonomialOrder::lengthLex(D.q()), 6);
  long long total = 0;
  bool top = false;
  gb.forEachNormalWord(6, [&](const Path&, int w) {
    ++total;
    if (w >= 5) top = true;
  });
  CHECK(total == 14);
  CHECK_FALSE(top);
  CHECK(DenseIdeal(D, 3).quotientDims() == std::vector<long long>{7, 7, 0, 0});
}

TEST_CASE("preprojective algebra of the 3-Kronecker quiver grows") {
  GradedPresentation P = fixtures::kroneckerPreprojective(3);
  auto dims = gradedDimensions(P, 4);
  CHECK(dims[0] == 5);
  for (std::size_t d = 1; d < dims.size(); ++d) CHECK(dims[d] > dims[d - 1]);
  CHECK(dims == DenseIdeal(P, 4).quotientDims());
}

TEST_CASE("dimer Jacobian membership") {
  GradedPresentation J = fixtures::dimerJacobian();
  const Quiver& Q = J.q();
  PathElement x = elementOf(Q, {{1, {"x1", "x2", "x3"}}});
  PathElement y = elementOf(Q, {{1, {"y1", "x2", "y3"}}});
  GroebnerBasis gb = groebnerFor(J, 6);
  PathElement nx = gb.normalForm(x);
  CHECK((nx == x || nx == y));
  CHECK(gb.inIdeal(x - y));
  MonomialOrder flipped = MonomialOrder::graded(Q, J.grading).withPrecedence(Q, {"y1"});
  GroebnerBasis gb2 = buchbergerTruncated(J.relations, flipped, 6);
  CHECK(gb2.normalForm(x) != nx);
  CHECK(gb2.inIdeal(x - y));
}

TEST_CASE("inhomogeneous relations are rejected by gradedDimensions") {
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}));
  GradedPresentation P(q, {elementOf(*q, {{1, {"x"}}, {-1, {"y", "y"}}})}, ArrowGrading({{"x", 1}, {"y", 1}}));
  CHECK_THROWS_AS(gradedDimensions(P, 3), StructuralError);
}

TEST_CASE("oracle: graded dimensions agree with dense quotients") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    auto q = gen::randomQuiver(rng, 4, 5);
    std::map<std::string, int> deg;
    for (const auto& a : q->arrows()) deg[a.name] = trial % 2 ? gen::uniform(rng, 1, 2) : 1;
    GradedPresentation P(q, {}, ArrowGrading(deg));
    std::uint32_t ch = trial % 5 == 4 ? 7 : 0;
    int nrel = gen::uniform(rng, 0, 3);
    for (int i = 0; i < nrel; ++i) P.relations.push_back(randomHomogeneous(rng, P, ch));
    CHECK(gradedDimensions(P, 4) == DenseIdeal(P, 4).quotientDims());
  }
}

TEST_CASE("property: normal forms are idempotent and differ by ideal elements") {
  gen::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    auto q = gen::randomQuiver(rng, 3, 4);
    GradedPresentation P(q, {}, ArrowGrading::constant(*q, 1));
    int nrel = gen::uniform(rng, 1, 3);
    for (int i = 0; i < nrel; ++i) P.relations.push_back(randomHomogeneous(rng, P, 0));
    GroebnerBasis gb = groebnerFor(P, 4);
    GroebnerBasis again = groebnerFor(P, 4);
    CHECK(gb.elements() == again.elements());
    DenseIdeal I(P, 4);
    PathElement x = gen::randomElement(rng, *q, 4, 4);
    PathElement nx = gb.normalForm(x);
    CHECK(gb.normalForm(nx) == nx);
    CHECK(I.contains(x - nx));
    for (const auto& [w, c] : nx.terms()) CHECK(gb.isNormalWord(w));
  }
}
