#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "qfg/centerfg.hpp"
#include "qfg/cli.hpp"
#include "qfg/dimer.hpp"
#include "qfg/gb.hpp"
#include "qfg/io.hpp"
#include "qfg/koszul.hpp"
#include "qfg/potential.hpp"

using namespace qfg;
using nlohmann::json;

namespace {

// Records per-test-case outcomes of an in-process doctest run.
struct Outcome {
  bool passed = true;
  int asserts = 0;
};
std::map<std::string, Outcome> g_outcomes;

struct RecordingReporter : doctest::IReporter {
  explicit RecordingReporter(const doctest::ContextOptions&) {}
  std::string current;
  void report_query(const doctest::QueryData&) override {}
  void test_run_start() override {}
  void test_run_end(const doctest::TestRunStats&) override {}
  void test_case_start(const doctest::TestCaseData& d) override {
    current = d.m_name;
    g_outcomes[current];
  }
  void test_case_reenter(const doctest::TestCaseData&) override {}
  void test_case_end(const doctest::CurrentTestCaseStats& s) override {
    auto& o = g_outcomes[current];
    o.asserts += s.numAssertsCurrentTest;
    o.passed = o.passed && s.testCaseSuccess && s.numAssertsFailedCurrentTest == 0;
  }
  void test_case_exception(const doctest::TestCaseException&) override { g_outcomes[current].passed = false; }
  void subcase_start(const doctest::SubcaseSignature&) override {}
  void subcase_end() override {}
  void log_assert(const doctest::AssertData& a) override {
    if (a.m_failed) std::fprintf(stderr, "  failed: %s:%d %s\n", a.m_file, a.m_line, a.m_expr);
  }
  void log_message(const doctest::MessageData&) override {}
  void test_case_skipped(const doctest::TestCaseData&) override {}
};
REGISTER_REPORTER("recording", 1, RecordingReporter);

int runCases(const std::string& filter) {
  doctest::Context ctx;
  ctx.setOption("reporters", "recording");
  ctx.setOption("test-case", filter.c_str());
  ctx.setOption("no-breaks", true);
  return ctx.run();
}

struct Criterion {
  std::string name;
  double limitSeconds;  // 0: no limit
  std::function<std::string()> body;  // empty string on success
};

// Collects failed expectations of one criterion.
struct Expect {
  std::ostringstream why;
  void operator()(bool ok, const std::string& what) {
    if (!ok) why << what << "; ";
  }
  std::string str() const { return why.str(); }
};

json runJson(std::vector<std::string> args, int& code) {
  args.push_back("--json");
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str().empty() ? json() : json::parse(out.str());
}

std::vector<long long> dualDims(const GradedPresentation& delta, int n, int ext, int window) {
  FDAlgebra L = algebraFromPresentation(delta);
  auto tbl = gradedExtTable(degreeZeroModule(makeRing(L)), ext);
  return koszulDual(tbl, n + 1, window)->dimensions();
}

BigradedExtTable extOf(const GradedPresentation& delta, int ext) {
  return gradedExtTable(degreeZeroModule(makeRing(algebraFromPresentation(delta))), ext);
}

bool supportedOnLine(const BigradedExtTable& t, int slope, int iMax) {
  for (const auto& [ij, d] : t.dims)
    if (d != 0 && ij.first <= iMax && ij.first != slope * ij.second) return false;
  return true;
}

// Cartan matrix C[u][v] = number of paths u -> v of an acyclic quiver
// (rows are dimension vectors of projectives), by dynamic programming.
std::vector<std::vector<long long>> pathCounts(const Quiver& q) {
  std::size_t n = q.vertexCount();
  std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<long long> frontier(n, 0);
    frontier[u] = 1;
    C[u][u] = 1;
    for (std::size_t len = 1; len <= n; ++len) {
      std::vector<long long> next(n, 0);
      for (const auto& a : q.arrows()) next[a.target] += frontier[a.source];
      for (std::size_t v = 0; v < n; ++v) C[u][v] += next[v];
      frontier = next;
    }
  }
  return C;
}

// x -> -C^T C^{-1} x on dimension vectors; C is unitriangular up to a
// vertex order, so C^{-1} x is solved by repeated substitution.
std::vector<long long> coxeterInverseStep(const std::vector<std::vector<long long>>& C, std::vector<long long> x) {
  std::size_t n = C.size();
  // solve y with C y = x (column action): sum_v C[u][v] y[v] = x[u]
  std::vector<long long> y(n, 0);
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round)
    for (std::size_t u = 0; u < n; ++u) {
      if (done[u]) continue;
      bool ready = true;
      long long s = x[u];
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && C[u][v] != 0) {
          if (!done[v]) ready = false;
          else s -= C[u][v] * y[v];
        }
      if (ready) {
        y[u] = s;
        done[u] = true;
      }
    }
  std::vector<long long> z(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) z[u] -= C[v][u] * y[v];
  return z;
}

std::string example52() {
  Expect e;
  int code = 0;
  json t = runJson({"trivext", "data/example-A2tilde-path.alg"}, code);
  e(code == 0, "trivext exit " + std::to_string(code));
  if (code != 0) return e.str();
  e(t["result"]["dimension"] == 14, "dimension " + t["result"]["dimension"].dump());
  GradedPresentation P = presentationOf(parseDocument(t["result"]["document"].get<std::string>()));
  GradedPresentation ref = fixtures::exampleTrivialExtension();
  e(P.q() == ref.q(), "extracted quiver differs");
  if (P.q() == ref.q()) e(sameIdeal(P, ref, 8), "ideals differ");
  e(P.grading.degrees() == ref.grading.degrees(), "arrow degrees differ");
  e(P.grading.degree("r1") == 1 && P.grading.degree("r2") == 1, "new arrows not in degree 1");
  json pr = runJson({"present", "data/example-A2tilde.alg"}, code);
  e(code == 0 && pr["result"]["dimension"] == 14, "present on the six relations");
  return e.str();
}

std::string dimerExample() {
  Expect e;
  Potential W = potentialOf(readDocument("data/conifold4.qp"));
  const Quiver& Q = W.q();
  e(cyclicDerivative(W, "x4") == elementOf(Q, {{1, {"x1", "x2", "x3"}}, {-1, {"y1", "x2", "y3"}}}), "d/dx4");
  e(cyclicDerivative(W, "y4") == elementOf(Q, {{1, {"y1", "y2", "y3"}}, {-1, {"x1", "y2", "x3"}}}), "d/dy4");
  int code = 0;
  json m = runJson({"dimer", "matchings", "data/conifold4.qp"}, code);
  bool found = false;
  for (const auto& s : m["result"]["matchings"]) found |= s == json({"x4", "y4"});
  e(code == 0 && found, "{x4, y4} not listed");

  DimerQP D(W);
  PerfectMatching pm;
  pm.arrows = {Q.arrowId("x4"), Q.arrowId("y4")};
  std::sort(pm.arrows.begin(), pm.arrows.end());
  GradedPresentation J0 = jacobianAlgebra(W);
  GradedPresentation Gamma(J0.quiver, J0.relations, matchingGrading(D, pm));
  FDAlgebra A = degreeZeroPart(Gamma);
  GradedPresentation G = gabrielPresentation(A, 6);
  auto q = std::make_shared<Quiver>(Quiver::fromNames(
      {"1", "2", "3", "4"},
      {{"x1", "1", "2"}, {"y1", "1", "2"}, {"x2", "2", "3"}, {"y2", "2", "3"}, {"x3", "3", "4"}, {"y3", "3", "4"}}));
  GradedPresentation ref(q, {elementOf(*q, {{1, {"x1", "x2", "x3"}}, {-1, {"y1", "x2", "y3"}}}),
                             elementOf(*q, {{1, {"y1", "y2", "y3"}}, {-1, {"x1", "y2", "x3"}}})});
  e(G.q() == ref.q(), "degree-0 quiver is not the doubled A4 quiver");
  if (G.q() == ref.q()) e(sameIdeal(G, ref, 6), "degree-0 ideal differs");
  e(!minimalRelationDegrees(Gamma).isQuadratic, "Gamma flagged quadratic");
  e(!minimalRelationDegrees(fixtures::delta(G)).isQuadratic, "Delta A flagged quadratic");
  return e.str();
}

std::string tame() {
  Expect e;
  auto v = fgVerdict(fixtures::delta(fixtures::kronecker(2)), 1, FgBounds{});
  e(v.outcome == FgVerdict::Outcome::HoldsAtBound, std::string("verdict ") + outcomeName(v.outcome));
  e(v.witness && v.witness->outcome == FinitenessWitness::Outcome::Witness, "no witness");
  e(v.witnessVerified, "witness not verified");
  return e.str();
}

std::string wild() {
  Expect e;
  FgBounds b;
  auto v = fgVerdict(fixtures::delta(fixtures::kronecker(3)), 1, b);
  e(v.outcome == FgVerdict::Outcome::RefutedAtBound, std::string("verdict ") + outcomeName(v.outcome));
  e(v.centerDimensions.size() == 7, "center truncated below degree 6");
  for (std::size_t d = 1; d < v.centerDimensions.size(); ++d)
    e(v.centerDimensions[d] == 0, "center nonzero in degree " + std::to_string(d));
  e(v.modelDimensions.size() == 7 && v.modelDimensions[6] > 0, "Pi_2(kK3)_6 vanishes");
  return e.str();
}

std::string dualOracle() {
  Expect e;
  struct Case {
    std::string name;
    GradedPresentation A;
    int n, ext;
  };
  std::vector<Case> cases = {{"kK2", fixtures::kronecker(2), 1, 8},
                             {"example", fixtures::exampleAlgebra(), 1, 8},
                             {"dimer", fixtures::dimerDegreeZero(), 2, 12}};
  for (const auto& c : cases) {
    auto dual = dualDims(fixtures::delta(c.A), c.n, c.ext, 4);
    auto pre = preprojective(algebraFromPresentation(c.A), c.n, 4)->dimensions();
    e(dual.size() == 5 && dual == pre, c.name + ": dual and preprojective dimensions differ");
  }
  return e.str();
}

std::string orthogonality() {
  Expect e;
  auto k2 = extOf(fixtures::delta(fixtures::kronecker(2)), 6);
  e(supportedOnLine(k2, 2, 6) && orthogonalityCheck(k2, 2).orthogonal, "kK2 off i = 2j");
  auto dimer = extOf(fixtures::delta(fixtures::dimerDegreeZero()), 6);
  e(supportedOnLine(dimer, 3, 6) && orthogonalityCheck(dimer, 3).orthogonal, "dimer off i = 3j");
  auto a2 = extOf(fixtures::delta(fixtures::linearA(2)), 6);
  e(!orthogonalityCheck(a2, 2).orthogonal && !supportedOnLine(a2, 2, 6), "A2 shows no violation");
  return e.str();
}

std::string gbOracle() {
  Expect e;
  runCases("oracle: graded dimensions agree with dense quotients");
  auto it = g_outcomes.find("oracle: graded dimensions agree with dense quotients");
  e(it != g_outcomes.end(), "oracle suite missing");
  if (it != g_outcomes.end()) {
    e(it->second.passed, "disagreement");
    e(it->second.asserts >= 50, "fewer than 50 presentations");
  }
  return e.str();
}

std::string properties() {
  Expect e;
  const std::vector<std::string> suites = {
      "property: composition is associative and degrees add",
      "property: normal forms are idempotent and differ by ideal elements",
      "property: derivatives are rotation invariant and drop one arrow",
      "property: derivatives are homogeneous under matching gradings",
      "property: resolutions are complexes, exact and minimal",
      "property: Nakayama sends projectives to injectives and inverts",
      "property: graded and plain centers agree in even degrees",
      "property: witnesses are sound",
  };
  runCases("property:*");
  for (const auto& s : suites) {
    auto it = g_outcomes.find(s);
    if (it == g_outcomes.end()) {
      e(false, "missing " + s);
      continue;
    }
    e(it->second.passed, "failed " + s);
    e(it->second.asserts >= 200, "fewer than 200 checks in " + s);
  }
  for (const auto& [name, o] : g_outcomes)
    if (name.rfind("property:", 0) == 0) e(o.passed, "failed " + name);
  return e.str();
}

std::string coxeter() {
  Expect e;
  GradedPresentation K2 = fixtures::kronecker(2);
  auto r = nRepInfiniteTest(algebraFromPresentation(K2), 1, 6);
  e(r.passes, "kK2 fails: " + r.reason);
  auto C = pathCounts(K2.q());
  std::vector<std::vector<long long>> xs = C;  // dim P_v
  e(r.dims.size() == 7, "horizon not reached");
  for (std::size_t j = 0; j < r.dims.size(); ++j) {
    for (std::size_t v = 0; v < xs.size(); ++v)
      e(r.dims[j][v] == xs[v], "iterate " + std::to_string(j) + " differs at vertex " + std::to_string(v));
    for (auto& x : xs) x = coxeterInverseStep(C, x);
  }
  auto k = nRepInfiniteTest(algebraFromPresentation(fixtures::linearA(1)), 1, 6);
  e(!k.passes && k.failedAt == 1, "k does not fail at j = 1");
  auto a2 = nRepInfiniteTest(algebraFromPresentation(fixtures::linearA(2)), 1, 6);
  e(!a2.passes, "kA2 passes");
  return e.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 example trivial extension and its six relations", 5, example52},
      {"2 dimer derivatives, matching and degree-0 presentation", 10, dimerExample},
      {"3a tame: fgcheck(Delta kK2) holds with a verified witness", 60, tame},
      {"3b wild: fgcheck(Delta kK3) refuted, center zero in 1..6", 60, wild},
      {"4 dual equals preprojective in degrees 0..4", 120, dualOracle},
      {"5 orthogonality of Ext tables", 60, orthogonality},
      {"6 Groebner dimensions against dense quotients", 0, gbOracle},
      {"7 property suites", 0, properties},
      {"8 n-representation infinite test against Coxeter iterates", 10, coxeter},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& ex) {
      why = std::string("threw: ") + ex.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && c.limitSeconds > 0 && s > c.limitSeconds)
      why = "took longer than " + std::to_string(c.limitSeconds) + " s";
    bool ok = why.empty();
    failed += !ok;
    std::printf("%s  %-62s %8.2fs%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), s, ok ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
