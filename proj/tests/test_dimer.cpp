#include <doctest.h>

#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "fixtures.hpp"
#include "gen.hpp"
#include "qfg/dimer.hpp"
#include "qfg/gb.hpp"

using namespace qfg;

namespace {

Potential potentialOf(const QuiverPtr& q, const std::vector<std::pair<int, std::vector<std::string>>>& terms) {
  std::vector<std::pair<Scalar, Path>> ts;
  for (const auto& [c, names] : terms) ts.push_back({Scalar(c), pathOf(*q, names)});
  return Potential(q, ts);
}

Potential dimerW() {
  return potentialOf(fixtures::dimerQuiver(), {{1, {"x1", "x2", "x3", "x4"}},
                                               {1, {"y1", "y2", "y3", "y4"}},
                                               {-1, {"x1", "y2", "x3", "y4"}},
                                               {-1, {"y1", "x2", "y3", "x4"}}});
}

QuiverPtr twoCycle() { return std::make_shared<Quiver>(Quiver::fromNames({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}})); }

Potential conifold() {
  auto q = std::make_shared<Quiver>(
      Quiver::fromNames({"1", "2"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"b1", "2", "1"}, {"b2", "2", "1"}}));
  return potentialOf(q, {{1, {"a1", "b1", "a2", "b2"}}, {-1, {"a1", "b2", "a2", "b1"}}});
}

Potential c3() {
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}, {"z", "1", "1"}}));
  return potentialOf(q, {{1, {"x", "y", "z"}}, {-1, {"x", "z", "y"}}});
}

void checkCharges(const DimerQP& D, const RCharges& r) {
  REQUIRE(r.feasible);
  const Quiver& Q = D.q();
  for (const auto& c : r.charges) {
    CHECK(Scalar(0) < c);
    CHECK(c < Scalar(2));
  }
  for (std::size_t f = 0; f < D.faceCount(); ++f) {
    Scalar s;
    for (ArrowId a : D.face(f)) s += r.charges[a];
    CHECK(s == Scalar(2));
  }
  for (VertexId v = 0; v < Q.vertexCount(); ++v) {
    Scalar s;
    for (ArrowId a = 0; a < Q.arrowCount(); ++a)
      s += Scalar((Q.arrow(a).source == v) + (Q.arrow(a).target == v)) * (Scalar(1) - r.charges[a]);
    CHECK(s == Scalar(2));
  }
}

}  // namespace

TEST_CASE("cyclic derivatives") {
  auto q = twoCycle();
  Potential W = potentialOf(q, {{1, {"a", "b"}}});
  CHECK(cyclicDerivative(W, "a") == elementOf(*q, {{1, {"b"}}}));
  CHECK(cyclicDerivative(W, "b") == elementOf(*q, {{1, {"a"}}}));
  GradedPresentation J = jacobianAlgebra(W);
  CHECK(J.relations.size() == 2);
  CHECK(gradedDimensions(GradedPresentation(J.quiver, J.relations, ArrowGrading::constant(*q, 1)), 3) ==
        std::vector<long long>{2, 0, 0, 0});

  Potential D = dimerW();
  const Quiver& Q = D.q();
  CHECK(cyclicDerivative(D, "x4") == elementOf(Q, {{1, {"x1", "x2", "x3"}}, {-1, {"y1", "x2", "y3"}}}));
  CHECK(cyclicDerivative(D, "y4") == elementOf(Q, {{1, {"y1", "y2", "y3"}}, {-1, {"x1", "y2", "x3"}}}));
  GradedPresentation JD = jacobianAlgebra(D);
  CHECK(JD.relations.size() == 8);
  for (const auto& r : JD.relations) CHECK(r.maxLength() == 3);
  std::set<std::string> got, want;
  for (const auto& r : JD.relations) got.insert(r.str());
  for (const auto& r : fixtures::dimerRelations(Q)) want.insert(r.str());
  CHECK(got == want);

  auto tri = std::make_shared<Quiver>(
      Quiver::fromNames({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}));
  GradedPresentation JT = jacobianAlgebra(potentialOf(tri, {{1, {"a", "b", "c"}}}));
  CHECK(JT.relations.size() == 3);
  JT.grading = ArrowGrading::constant(*tri, 1);
  CHECK(gradedDimensions(JT, 4) == std::vector<long long>{3, 3, 0, 0, 0});
}

TEST_CASE("potential terms are stored up to rotation") {
  auto q = twoCycle();
  Potential a = potentialOf(q, {{1, {"a", "b"}}}), b = potentialOf(q, {{1, {"b", "a"}}});
  CHECK(a == b);
  CHECK(a.str() == "a*b");
  CHECK_THROWS_AS(potentialOf(q, {{1, {"a"}}}), StructuralError);
}

TEST_CASE("property: derivatives are rotation invariant and drop one arrow") {
  gen::Rng rng(5);
  int done = 0;
  while (done < 250) {
    auto q = gen::randomQuiver(rng, 3, 5);
    Path p = gen::randomPath(rng, *q, 6);
    if (p.isLazy() || !p.isCycle()) continue;
    ++done;
    std::vector<ArrowId> cyc = p.arrows();
    std::vector<ArrowId> rot = cyc;
    std::rotate(rot.begin(), rot.begin() + gen::uniform(rng, 0, static_cast<int>(cyc.size()) - 1), rot.end());
    Scalar c = gen::randomCoef(rng);
    Potential W(q, {{c, p}}), R(q, {{c, Path(*q, rot)}});
    CHECK(W == R);
    for (ArrowId a = 0; a < q->arrowCount(); ++a) {
      PathElement d = cyclicDerivative(W, a);
      CHECK(d == cyclicDerivative(R, a));
      for (const auto& [w, v] : d.terms()) CHECK(w.length() == cyc.size() - 1);
    }
  }
}

TEST_CASE("dimer validation") {
  CHECK_NOTHROW(DimerQP(dimerW()));
  auto q = twoCycle();
  CHECK_THROWS_AS(DimerQP(potentialOf(q, {{1, {"a", "b"}}})), StructuralError);
  CHECK_THROWS_AS(DimerQP(potentialOf(q, {{2, {"a", "b"}}, {-1, {"a", "b"}}})), StructuralError);
}

TEST_CASE("perfect matchings") {
  DimerQP D(dimerW());
  auto ms = perfectMatchings(D);
  const Quiver& Q = D.q();
  std::vector<ArrowId> x4y4 = {Q.arrowId("x4"), Q.arrowId("y4")};
  std::sort(x4y4.begin(), x4y4.end());
  CHECK(std::find(ms.begin(), ms.end(), PerfectMatching{x4y4}) != ms.end());
  std::size_t brute = 0;
  for (unsigned mask = 0; mask < (1u << Q.arrowCount()); ++mask) {
    std::vector<ArrowId> s;
    for (ArrowId a = 0; a < Q.arrowCount(); ++a)
      if (mask >> a & 1) s.push_back(a);
    brute += isPerfectMatching(D, s);
  }
  CHECK(ms.size() == brute);
  for (const auto& m : ms) {
    CHECK(isPerfectMatching(D, m.arrows));
    ArrowGrading g = matchingGrading(D, m);
    for (std::size_t f = 0; f < D.faceCount(); ++f) CHECK(pathDegree(Path(Q, D.face(f)), g) == 1);
    GradedPresentation J = jacobianAlgebra(D.potential());
    J.grading = g;
    CHECK_NOTHROW(J.requireHomogeneous());
    for (ArrowId a = 0; a < Q.arrowCount(); ++a)
      CHECK(cyclicDerivative(D.potential(), a).homogeneousDegree(g) == 1 - g.degree(Q.arrow(a).name));
  }
  CHECK_THROWS_AS(matchingGrading(D, PerfectMatching{{0}}), StructuralError);

  auto q = twoCycle();
  DimerQP deg(potentialOf(q, {{1, {"a", "b"}}, {-1, {"a", "b"}}}));
  auto dm = perfectMatchings(deg);
  REQUIRE(dm.size() == 2);
  CHECK(dm[0].names(*q) == std::vector<std::string>{"a"});
  CHECK(dm[1].names(*q) == std::vector<std::string>{"b"});
  ArrowGrading ga = matchingGrading(deg, dm[0]);
  CHECK(cyclicDerivative(*q, deg.face(0), q->arrowId("b")).homogeneousDegree(ga) == 1);
  CHECK(cyclicDerivative(*q, deg.face(0), q->arrowId("a")).homogeneousDegree(ga) == 0);
}

TEST_CASE("perfect matchings are equivariant under arrow renaming") {
  Potential W = dimerW();
  const Quiver& Q = W.q();
  // Reverse the declaration order.
  std::vector<Arrow> rev(Q.arrows().rbegin(), Q.arrows().rend());
  auto R = std::make_shared<Quiver>(Q.vertices(), rev);
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& t : W.terms()) {
    std::vector<ArrowId> c;
    for (ArrowId a : t.cycle) c.push_back(static_cast<ArrowId>(Q.arrowCount() - 1 - a));
    terms.push_back({t.coef, Path(*R, c)});
  }
  DimerQP D(W), DR(Potential(R, terms));
  std::set<std::set<std::string>> a, b;
  for (const auto& m : perfectMatchings(D)) {
    auto n = m.names(Q);
    a.insert({n.begin(), n.end()});
  }
  for (const auto& m : perfectMatchings(DR)) {
    auto n = m.names(*R);
    b.insert({n.begin(), n.end()});
  }
  CHECK(a == b);
}

TEST_CASE("degree-zero finiteness") {
  DimerQP D(dimerW());
  GradedPresentation J = jacobianAlgebra(D.potential());
  const Quiver& Q = D.q();
  J.grading = matchingGrading(D, PerfectMatching{{Q.arrowId("x4"), Q.arrowId("y4")}});
  DegreeZeroWitness w = degreeZeroFiniteDim(J);
  CHECK(w.finite);
  CHECK(w.dimension == 24);

  auto loop = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"l", "1", "1"}}));
  DegreeZeroWitness inf = degreeZeroFiniteDim(GradedPresentation(loop, {}, ArrowGrading({{"l", 0}})));
  CHECK_FALSE(inf.finite);
  CHECK(inf.cycle == std::vector<std::string>{"l"});

  GradedPresentation all1(J.quiver, J.relations, ArrowGrading::constant(Q, 1));
  DegreeZeroWitness one = degreeZeroFiniteDim(all1);
  CHECK(one.finite);
  CHECK(one.dimension == 4);
}

TEST_CASE("R-charge feasibility") {
  DimerQP D(dimerW());
  RCharges r = consistencyFeasible(D);
  checkCharges(D, r);
  auto q = twoCycle();
  CHECK_FALSE(consistencyFeasible(DimerQP(potentialOf(q, {{1, {"a", "b"}}, {-1, {"a", "b"}}}))).feasible);
  DimerQP C3(c3());
  RCharges rc = consistencyFeasible(C3);
  checkCharges(C3, rc);
  DimerQP K(conifold());
  checkCharges(K, consistencyFeasible(K));
}

TEST_CASE("strict Fourier-Motzkin") {
  // x < 1, -x < 0, y - x < 0, -y < 0: feasible.
  auto w = strictFeasible({{1, 0}, {-1, 0}, {-1, 1}, {0, -1}}, {1, 0, 0, 0}, 2);
  REQUIRE(w);
  CHECK((*w)[0] < Scalar(1));
  CHECK(Scalar(0) < (*w)[1]);
  CHECK((*w)[1] < (*w)[0]);
  // x < 0 and -x < 0: infeasible.
  CHECK_FALSE(strictFeasible({{1}, {-1}}, {0, 0}, 1));
  // x + y < 1, -x < 0, -y < 0, x - y < 0
  CHECK(strictFeasible({{1, 1}, {-1, 0}, {0, -1}, {1, -1}}, {1, 0, 0, 0}, 2));
}

namespace {

// Arrows 0..m-1 with white faces the cycles of one permutation and black
// faces those of another; endpoints are glued so every face is a cycle.
std::optional<DimerQP> randomDimer(gen::Rng& rng, int m) {
  std::vector<int> w(m), b(m);
  std::iota(w.begin(), w.end(), 0);
  std::iota(b.begin(), b.end(), 0);
  std::shuffle(w.begin(), w.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  std::vector<int> parent(2 * m);  // tail(a) = 2a, head(a) = 2a + 1
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < m; ++a) {
    parent[find(2 * a + 1)] = find(2 * w[a]);
    parent[find(2 * a + 1)] = find(2 * b[a]);
  }
  std::map<int, VertexId> vid;
  std::vector<std::string> vs;
  for (int x = 0; x < 2 * m; ++x)
    if (!vid.count(find(x))) {
      vid[find(x)] = static_cast<VertexId>(vs.size());
      vs.push_back(std::to_string(vs.size() + 1));
    }
  std::vector<Arrow> as;
  for (int a = 0; a < m; ++a) as.push_back({"a" + std::to_string(a + 1), vid[find(2 * a)], vid[find(2 * a + 1)]});
  auto q = std::make_shared<Quiver>(vs, as);
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto* perm : {&w, &b}) {
    std::vector<bool> seen(m);
    for (int s = 0; s < m; ++s) {
      if (seen[s]) continue;
      std::vector<ArrowId> cyc;
      for (int a = s; !seen[a]; a = (*perm)[a]) {
        seen[a] = true;
        cyc.push_back(static_cast<ArrowId>(a));
      }
      terms.push_back({Scalar(perm == &w ? 1 : -1), Path(*q, cyc)});
    }
  }
  try {
    return DimerQP(Potential(q, terms));
  } catch (const StructuralError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("property: derivatives are homogeneous under matching gradings") {
  gen::Rng rng(55);
  int done = 0, graded = 0;
  while (done < 200) {
    auto D = randomDimer(rng, gen::uniform(rng, 2, 8));
    if (!D) continue;
    ++done;
    auto ms = perfectMatchings(*D);
    for (std::size_t k = 0; k < std::min<std::size_t>(ms.size(), 3); ++k) {
      ++graded;
      ArrowGrading g = matchingGrading(*D, ms[k]);
      for (const auto& t : D->potential().terms()) CHECK(pathDegree(Path(D->q(), t.cycle), g) == 1);
      for (ArrowId a = 0; a < D->q().arrowCount(); ++a) {
        PathElement d = cyclicDerivative(D->potential(), a);
        for (const auto& [p, c] : d.terms())
          CHECK(pathDegree(p, g) == 1 - g.degree(D->q().arrow(a).name));
      }
    }
  }
  CHECK(graded > 100);
}
