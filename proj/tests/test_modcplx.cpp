#include <doctest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "qfg/modcplx.hpp"

using namespace qfg;

namespace {

using fixtures::dimerDegreeZero;
using fixtures::kronecker;
using fixtures::pathAlgebra;

std::vector<std::vector<VertexId>> summandVertices(const Resolution& P) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& F : P.F) {
    std::vector<VertexId> vs;
    for (auto [v, s] : F.summands()) vs.push_back(v);
    out.push_back(vs);
  }
  return out;
}

// Checks d^2 = 0, exactness at every computed term and minimality.
void checkResolution(const Resolution& P) {
  const GradedModule& M = P.M;
  const Ring& R = *M.ring();
  for (int i = 0; i < P.terms(); ++i) {
    const FreeModule& F = P.F[i];
    std::vector<SparseVec> images;
    for (std::uint32_t c = 0; c < F.dim(); ++c) images.push_back(P.apply(i, sparse::unit(c)));
    if (i == 0) CHECK(sparseRank(images) == M.dim());
    if (i > 0)
      for (const auto& y : images) CHECK(P.apply(i - 1, y).empty());
    std::size_t kernel = F.dim() - sparseRank(images);
    if (i + 1 < P.terms()) {
      std::vector<SparseVec> next;
      for (std::uint32_t c = 0; c < P.F[i + 1].dim(); ++c) next.push_back(P.apply(i + 1, sparse::unit(c)));
      CHECK(sparseRank(next) == kernel);
    } else if (P.complete) {
      CHECK(kernel == 0);
    }
    if (i > 0)
      for (const auto& img : P.d[i]) {
        std::map<std::size_t, Scalar> topPart;
        const FreeModule& T = P.F[i - 1];
        for (const auto& e : img) topPart[T.genOf(e.index)] += e.value * R.top[T.basisOf(e.index)][T.genVertex(T.genOf(e.index))];
        for (const auto& [g, s] : topPart) CHECK(s.isZero());
      }
  }
}

RingPtr randomRing(gen::Rng& rng) {
  auto q = gen::randomAcyclicQuiver(rng, 4, 5);
  GradedPresentation p(q, gen::randomAdmissibleRelations(rng, *q, gen::uniform(rng, 0, 2)));
  return makeRing(algebraFromPresentation(p));
}

GradedModule randomModule(gen::Rng& rng, const RingPtr& R) {
  VertexId v = gen::uniform(rng, 0, static_cast<int>(R->vertices()) - 1);
  switch (gen::uniform(rng, 0, 4)) {
    case 0: return projectiveModule(R, v);
    case 1: return injectiveModule(R, v);
    case 2: return simpleModule(R, v);
    case 3: return topModule(R);
    default: {
      // P_v modulo a random submodule generated by one radical element
      GradedModule P = projectiveModule(R, v);
      std::vector<SparseVec> sub;
      std::uint32_t start = gen::uniform(rng, 0, static_cast<int>(P.dim()) - 1);
      sub.push_back(sparse::unit(start));
      for (std::size_t k = 0; k < sub.size(); ++k)
        for (std::uint32_t b = 0; b < R->dim(); ++b) {
          SparseVec y = P.mul(sub[k], b);
          if (!y.empty() && sparseRank(sub) < sparseRank([&] { auto s = sub; s.push_back(y); return s; }())) sub.push_back(y);
        }
      std::vector<SparseVec> all;
      for (std::uint32_t i = 0; i < P.dim(); ++i) all.push_back(sparse::unit(i));
      return subquotientModule(P, all, sub);
    }
  }
}

}  // namespace

TEST_CASE("resolutions over kA3") {
  RingPtr R = makeRing(algebraFromPresentation(pathAlgebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}})));
  Resolution P3 = projectiveResolution(simpleModule(R, 2), 4);
  CHECK(P3.complete);
  CHECK(P3.projectiveDimension() == 0);
  CHECK(summandVertices(P3) == std::vector<std::vector<VertexId>>{{2}});
  Resolution P1 = projectiveResolution(simpleModule(R, 0), 4);
  CHECK(P1.projectiveDimension() == 1);
  CHECK(summandVertices(P1) == std::vector<std::vector<VertexId>>{{0}, {1}});
  checkResolution(P1);
  Resolution Pp = projectiveResolution(projectiveModule(R, 0), 4);
  CHECK(Pp.projectiveDimension() == 0);
  CHECK(globalDimension(R, 4) == 1);
}

TEST_CASE("modules satisfy the module axioms") {
  RingPtr R = makeRing(trivialExtension(algebraFromPresentation(kronecker(2))));
  for (VertexId v = 0; v < 2; ++v) {
    projectiveModule(R, v).validate();
    injectiveModule(R, v).validate();
    simpleModule(R, v).validate();
  }
  dualModule(R).validate();
  degreeZeroModule(R).validate();
  CHECK(degreeZeroModule(R).dim() == 4);
  CHECK(dualModule(R).dim() == 8);
}

TEST_CASE("Nakayama on projectives and the identity for k") {
  RingPtr R = makeRing(algebraFromPresentation(kronecker(2)));
  for (VertexId v = 0; v < 2; ++v) {
    auto H = nakayamaHomology(projectiveModule(R, v), Direction::Forward, 4);
    REQUIRE(H.H.size() == 1);
    CHECK(H.H[0].dimensionVector() == injectiveModule(R, v).dimensionVector());
  }
  RingPtr k = makeRing(algebraFromPresentation(pathAlgebra({"1"}, {})));
  auto Hk = nakayamaHomology(simpleModule(k, 0), Direction::Inverse, 2);
  REQUIRE(Hk.H.size() == 1);
  CHECK(Hk.H[0].dim() == 1);
}

TEST_CASE("n-representation-infinite test") {
  NRIResult k2 = nRepInfiniteTest(algebraFromPresentation(kronecker(2)), 1, 6);
  CHECK(k2.passes);
  CHECK(k2.coxeterAgrees);
  REQUIRE(k2.dims.size() == 7);
  for (std::size_t j = 0; j < k2.dims.size(); ++j) CHECK(k2.dims[j] == k2.coxeter[j]);
  CHECK(k2.dims[1][0] == std::vector<long long>{3, 4});
  CHECK(k2.dims[6][1] == std::vector<long long>{12, 13});

  NRIResult k = nRepInfiniteTest(algebraFromPresentation(pathAlgebra({"1"}, {})), 1, 6);
  CHECK_FALSE(k.passes);
  CHECK(k.failedAt == 1);
  CHECK(k.failedDegree == -1);
  NRIResult k3 = nRepInfiniteTest(algebraFromPresentation(pathAlgebra({"1"}, {})), 3, 6);
  CHECK(k3.failedAt == 1);

  NRIResult a2 = nRepInfiniteTest(algebraFromPresentation(pathAlgebra({"1", "2"}, {{"a", "1", "2"}})), 1, 6);
  CHECK_FALSE(a2.passes);
  CHECK(a2.failedAt >= 1);
  CHECK(a2.failedAt <= 2);

  // gldim 2 > 1
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}));
  NRIResult mono = nRepInfiniteTest(algebraFromPresentation(GradedPresentation(q, {elementOf(*q, {{1, {"a", "b"}}})})), 1, 3);
  CHECK(mono.failedAt == 0);
  CHECK_FALSE(mono.globalDimension);

  NRIResult dimer = nRepInfiniteTest(algebraFromPresentation(dimerDegreeZero()), 2, 4);
  CHECK(dimer.passes);
  CHECK(dimer.globalDimension == 2);
  CHECK(dimer.coxeterAgrees);
}

TEST_CASE("preprojective algebras: homological and presented models agree") {
  GradedPresentation K2 = kronecker(2);
  FDAlgebra A = algebraFromPresentation(K2);
  auto P = preprojective(A, 1, 4);
  CHECK(P->dimensions() == gradedDimensions(preprojectivePresentation(K2, 1), 4));
  CHECK(P->dimensions() == gradedDimensions(fixtures::kroneckerPreprojective(2), 4));
  CHECK(P->associative());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) CHECK(P->product(0, i, 0, j) == A.product(i, j));

  auto P3 = preprojective(algebraFromPresentation(kronecker(3)), 1, 2);
  CHECK(P3->dim(0) == 5);
  CHECK(P3->dimensions() == gradedDimensions(fixtures::kroneckerPreprojective(3), 2));

  GradedPresentation ex = fixtures::exampleAlgebra();
  CHECK(preprojective(algebraFromPresentation(ex), 1, 4)->dimensions() ==
        gradedDimensions(preprojectivePresentation(ex, 1), 4));

  GradedPresentation B = dimerDegreeZero();
  auto PD = preprojective(algebraFromPresentation(B), 2, 3);
  CHECK(PD->dimensions() == gradedDimensions(preprojectivePresentation(B, 2), 3));
  CHECK(PD->dimensions() == gradedDimensions(fixtures::dimerJacobian(), 3));

  CHECK_THROWS_AS(preprojective(algebraFromPresentation(pathAlgebra({"1", "2"}, {{"a", "1", "2"}})), 1, 3), StructuralError);
}

TEST_CASE("property: resolutions are complexes, exact and minimal") {
  gen::Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    RingPtr R = randomRing(rng);
    GradedModule M = randomModule(rng, R);
    M.validate();
    Resolution P = projectiveResolution(M, 4);
    checkResolution(P);
    CHECK(resolutionComplex(P).realize().isComplex());
  }
}

TEST_CASE("property: Nakayama sends projectives to injectives and inverts") {
  gen::Rng rng(405);
  int roundTrips = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    RingPtr R = randomRing(rng);
    VertexId v = gen::uniform(rng, 0, static_cast<int>(R->vertices()) - 1);
    FreeModule F(R);
    F.add(v, 0);
    SummandComplex X{SummandComplex::Kind::Projective, R, 0, {F}, {}};
    BoundedComplex nu = nakayama(X, Direction::Forward).realize();
    CHECK(nu.terms[0].dimensionVector() == injectiveModule(R, v).dimensionVector());
    CHECK(nakayama(nakayama(X, Direction::Forward), Direction::Inverse).realize().terms[0].dimensionVector() ==
          F.asModule().dimensionVector());

    GradedModule M = randomModule(rng, R);
    int window = static_cast<int>(R->vertices()) + 1;
    auto inv = nakayamaHomology(M, Direction::Inverse, window);
    int nonzero = 0, at = 0;
    for (std::size_t i = 0; i < inv.H.size(); ++i)
      if (inv.H[i].dim() > 0) {
        ++nonzero;
        at = static_cast<int>(i);
      }
    if (nonzero == 1) {
      auto fwd = nakayamaHomology(inv.H[at], Direction::Forward, window);
      for (std::size_t k = 0; k < fwd.H.size(); ++k) {
        int deg = fwd.lowest + static_cast<int>(k);
        if (deg == -at) {
          CHECK(fwd.H[k].dimensionVector() == M.dimensionVector());
        } else {
          CHECK(fwd.H[k].dim() == 0);
        }
      }
      ++roundTrips;
    }
  }
  CHECK(roundTrips > 50);
}
