#include <doctest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "qfg/centerfg.hpp"

using namespace qfg;

namespace {

PresentedAlgebra truncatedPi(int m, int window) {
  return PresentedAlgebra(fixtures::kroneckerPreprojective(m), window, window + 1);
}

// Both lists span the same subspace.
bool sameSpan(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  std::vector<SparseVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = sparseRank(both);
  return r == sparseRank(a) && r == sparseRank(b);
}

}  // namespace

TEST_CASE("center of k[x]/(x^2)") {
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"x", "1", "1"}}));
  GradedPresentation p(q, {elementOf(*q, {{1, {"x", "x"}}})}, ArrowGrading({{"x", 1}}));
  PresentedAlgebra G(p, 1, 2);
  for (auto flavor : {CenterFlavor::Plain, CenterFlavor::Graded}) {
    auto C = centerTruncation(G, 1, flavor);
    CHECK(C.dimensions() == std::vector<long long>{1, 1});
    CHECK(formatElement(G, 1, C.basis[1][0]).find('x') != std::string::npos);
    CHECK(verifyCentral(G, C));
  }
  // x^2 = 0, so x is in the graded center even though it is odd
  CHECK_THROWS_AS(centerTruncation(G, 2, CenterFlavor::Plain), ParameterError);
}

TEST_CASE("graded sign is visible on an exterior algebra") {
  auto q = std::make_shared<Quiver>(Quiver::fromNames({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}));
  GradedPresentation p(q,
                       {elementOf(*q, {{1, {"x", "x"}}}), elementOf(*q, {{1, {"y", "y"}}}),
                        elementOf(*q, {{1, {"x", "y"}}, {1, {"y", "x"}}})},
                       ArrowGrading({{"x", 1}, {"y", 1}}));
  PresentedAlgebra G(p, 2, 3);
  auto graded = centerTruncation(G, 2, CenterFlavor::Graded);
  auto plain = centerTruncation(G, 2, CenterFlavor::Plain);
  CHECK(graded.dimensions() == std::vector<long long>{1, 2, 1});
  CHECK(plain.dimensions() == std::vector<long long>{1, 0, 1});
  CHECK(sameSpan(graded.basis[2], plain.basis[2]));
}

TEST_CASE("centers of preprojective algebras of Kronecker quivers") {
  auto K2 = truncatedPi(2, 4);
  auto C2 = centerTruncation(K2, 4, CenterFlavor::Plain);
  CHECK(C2.basis[2].size() > 0);
  CHECK(C2.dimensions() == std::vector<long long>{1, 3, 5, 7, 9});
  CHECK(verifyCentral(K2, C2));

  auto K3 = truncatedPi(3, 4);
  auto C3 = centerTruncation(K3, 4, CenterFlavor::Plain);
  CHECK(C3.zeroInPositiveDegrees());
  CHECK(C3.dimensions()[0] == 1);
  auto V = veroneseOfCenter(C3, 2);
  CHECK(V.zeroInPositiveDegrees());
  CHECK(V.step == 2);
  CHECK(V.basis.size() == 3);
  auto W = moduleFinitenessWitness(K3, V, 2, 4);
  CHECK(W.outcome == FinitenessWitness::Outcome::Refuted);
  CHECK(K3.dim(4) > 0);
}

TEST_CASE("Veronese of a center") {
  auto K2 = truncatedPi(2, 4);
  auto C = centerTruncation(K2, 4, CenterFlavor::Plain);
  auto same = veroneseOfCenter(C, 1);
  CHECK(same.dimensions() == C.dimensions());
  auto V = veroneseOfCenter(C, 2);
  CHECK(V.dimensions() == std::vector<long long>{1, 5, 9});
  CHECK(V.degree(2) == 4);
  CHECK_THROWS_AS(veroneseOfCenter(C, 0), ParameterError);
}

TEST_CASE("finiteness witnesses") {
  auto K2 = truncatedPi(2, 6);
  auto C = centerTruncation(K2, 6, CenterFlavor::Plain);
  auto W = moduleFinitenessWitness(K2, C, 2, 6);
  REQUIRE(W.outcome == FinitenessWitness::Outcome::Witness);
  CHECK(verifyWitness(K2, C, W));
  // the 2-Veronese needs generators one degree higher
  auto V = veroneseOfCenter(C, 2);
  auto WV = moduleFinitenessWitness(K2, V, 3, 6);
  REQUIRE(WV.outcome == FinitenessWitness::Outcome::Witness);
  CHECK(verifyWitness(K2, V, WV));
  CHECK(moduleFinitenessWitness(K2, V, 1, 6).outcome == FinitenessWitness::Outcome::Inconclusive);

  // finite dimensional: everything is a generator
  auto ex = PresentedAlgebra(fixtures::exampleTrivialExtension(), 2, 3);
  auto Cex = centerTruncation(ex, 2, CenterFlavor::Plain);
  auto Wex = moduleFinitenessWitness(ex, Cex, 1, 2);
  CHECK(Wex.outcome == FinitenessWitness::Outcome::Witness);
  CHECK(verifyWitness(ex, Cex, Wex));
  CHECK_THROWS_AS(moduleFinitenessWitness(ex, Cex, 3, 2), ParameterError);
}

TEST_CASE("fg verdicts") {
  auto k2 = fgVerdict(fixtures::delta(fixtures::kronecker(2)), 1, FgBounds{});
  CHECK(k2.outcome == FgVerdict::Outcome::HoldsAtBound);
  CHECK(k2.dualDimensions == std::vector<long long>{4, 12, 20, 28, 36});
  CHECK(k2.symmetry.highestDegree == 1);

  auto ex = fgVerdict(fixtures::exampleTrivialExtension(), 1, FgBounds{});
  CHECK(ex.outcome == FgVerdict::Outcome::HoldsAtBound);

  FgBounds small;
  small.ext = 4;
  small.dual = 2;
  small.center = 4;
  small.gen = 2;
  auto k3 = fgVerdict(fixtures::delta(fixtures::kronecker(3)), 1, small);
  CHECK(k3.outcome == FgVerdict::Outcome::RefutedAtBound);
  CHECK(k3.centerDimensions == std::vector<long long>{1, 0, 0, 0, 0});

  FgBounds dimer;
  dimer.ext = 9;
  dimer.center = 4;
  auto d = fgVerdict(fixtures::delta(fixtures::dimerDegreeZero()), 2, dimer);
  CHECK(d.outcome == FgVerdict::Outcome::HoldsAtBound);
  CHECK(d.dualDimensions == std::vector<long long>{24, 152, 408, 792});

  auto a2 = fgVerdict(fixtures::delta(fixtures::linearA(2)), 1, FgBounds{});
  CHECK(a2.outcome == FgVerdict::Outcome::Inconclusive);
  CHECK_FALSE(a2.nri.passes);

  try {
    fgVerdict(fixtures::kronecker(2), 1, FgBounds{});
    FAIL("expected a structural error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).rfind("symmetry", 0) == 0);
  }
}

TEST_CASE("property: graded and plain centers agree in even degrees") {
  gen::Rng rng(612);
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    auto q = gen::randomQuiver(rng, 3, 4);
    GradedPresentation p(q, gen::randomBinomialRelations(rng, *q, gen::uniform(rng, 0, 3), 3),
                         ArrowGrading::constant(*q, 1));
    PresentedAlgebra G(p, 4, 5);
    auto graded = centerTruncation(G, 4, CenterFlavor::Graded);
    auto plain = centerTruncation(G, 4, CenterFlavor::Plain);
    CHECK(verifyCentral(G, graded));
    CHECK(verifyCentral(G, plain));
    for (int d = 0; d <= 4; d += 2) CHECK(sameSpan(graded.basis[d], plain.basis[d]));
    auto vg = veroneseOfCenter(graded, 2), vp = veroneseOfCenter(plain, 2);
    CHECK(vg.dimensions() == vp.dimensions());
  }
}

TEST_CASE("property: witnesses are sound") {
  gen::Rng rng(613);
  int witnesses = 0, refuted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    auto q = gen::randomQuiver(rng, 3, 4);
    GradedPresentation p(q, gen::randomBinomialRelations(rng, *q, gen::uniform(rng, 0, 4), 3),
                         ArrowGrading::constant(*q, 1));
    PresentedAlgebra G(p, 5, 6);
    auto C = centerTruncation(G, 5, CenterFlavor::Plain);
    auto W = moduleFinitenessWitness(G, C, gen::uniform(rng, 1, 3), 5);
    if (W.outcome == FinitenessWitness::Outcome::Witness) {
      ++witnesses;
      CHECK(verifyWitness(G, C, W));
    } else if (W.outcome == FinitenessWitness::Outcome::Refuted) {
      ++refuted;
      CHECK(C.zeroInPositiveDegrees());
      CHECK(G.dim(5) > 0);
      CHECK_FALSE(verifyWitness(G, C, W));
    } else {
      CHECK(W.spanned < W.needed);
    }
  }
  CHECK(witnesses > 0);
  CHECK(refuted > 0);
}
