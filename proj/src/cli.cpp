#include "qfg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "qfg/centerfg.hpp"
#include "qfg/dimer.hpp"
#include "qfg/error.hpp"
#include "qfg/io.hpp"
#include "qfg/koszul.hpp"
#include "qfg/present.hpp"

namespace qfg::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string command, sub, file;
  int n = 1;
  FgBounds bounds;
  int relationBound = 8;
  std::optional<std::uint32_t> characteristic;
  bool asJson = false;
  std::vector<std::string> seedOrder;
  std::vector<std::string> matching;
};

// Raised with the stage that failed; the wrapped error keeps its kind.
struct StageFailure {
  std::string stage;
  int code;
  std::string message;
};

template <class F>
auto staged(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw StageFailure{name, InputError, e.what()};
  } catch (const StructuralError& e) {
    throw StageFailure{name, InputError, e.what()};
  } catch (const ParameterError& e) {
    throw StageFailure{name, InputError, e.what()};
  } catch (const InconclusiveError& e) {
    std::string msg = e.what();
    if (e.suggestedBound() >= 0) msg += " (try a bound of " + std::to_string(e.suggestedBound()) + ")";
    throw StageFailure{name, Inconclusive, msg};
  }
}

json dims(const std::vector<long long>& v) { return json(v); }

json quiverJson(const GradedPresentation& p) {
  json arrows = json::array();
  std::vector<int> deg = p.arrowDegrees();
  for (ArrowId a = 0; a < p.q().arrowCount(); ++a) {
    const Arrow& ar = p.q().arrow(a);
    arrows.push_back({{"name", ar.name},
                      {"source", p.q().vertexName(ar.source)},
                      {"target", p.q().vertexName(ar.target)},
                      {"degree", deg[a]}});
  }
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(r.str());
  return {{"vertices", p.q().vertices()}, {"arrows", arrows}, {"relations", rels}};
}

std::vector<long long> dimsByDegree(const FDAlgebra& A) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    std::size_t d = static_cast<std::size_t>(A.degree(i));
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

class Session {
 public:
  explicit Session(Options o) : o_(std::move(o)) {}

  json run() {
    auto t0 = std::chrono::steady_clock::now();
    doc_ = staged("parse", [&] { return readDocument(o_.file); });
    if (o_.characteristic) doc_.characteristic = *o_.characteristic;
    if (!o_.seedOrder.empty()) staged("parse", [&] { doc_.seedOrder(o_.seedOrder); });
    if (doc_.characteristic != 0)
      warn("computing over F_" + std::to_string(doc_.characteristic) +
           ": verdicts in positive characteristic may differ from those over an algebraically closed field of "
           "characteristic 0");

    json report;
    report["command"] = o_.sub.empty() ? o_.command : o_.command + " " + o_.sub;
    report["input"] = {{"file", o_.file}, {"kind", kindName(doc_.kind)}, {"vertices", doc_.vertices.size()},
                       {"arrows", doc_.arrows.size()}};
    report["bounds"] = {{"n", o_.n},
                        {"ext", o_.bounds.ext},
                        {"dual", o_.bounds.dual},
                        {"center", o_.bounds.center},
                        {"gen", o_.bounds.gen},
                        {"horizon", o_.bounds.horizon},
                        {"relations", o_.relationBound},
                        {"char", doc_.characteristic}};
    static const std::map<std::string, std::function<void(Session&)>> handlers = {
        {"present", &Session::present},   {"trivext", &Session::trivext}, {"jacobian", &Session::jacobian},
        {"dimer", &Session::dimer},       {"exttable", &Session::exttable}, {"dual", &Session::dual},
        {"preproj", &Session::preproj},   {"nri", &Session::nri},         {"center", &Session::center},
        {"fgcheck", &Session::fgcheck},
    };
    handlers.at(o_.command)(*this);
    evidence_["seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (verdict_) report["verdict"] = *verdict_;
    else report["result"] = result_;
    report["evidence"] = evidence_;
    report["warnings"] = warnings_;
    report["version"] = kVersion;
    return report;
  }

  int exitCode() const { return code_; }

 private:
  void warn(std::string w) {
    if (std::find(warnings_.begin(), warnings_.end(), w) == warnings_.end()) warnings_.push_back(std::move(w));
  }

  bool isPotential() const { return doc_.kind != InputDocument::Kind::QuiverAlgebra; }

  Potential potential() {
    if (!isPotential()) throw StageFailure{"input", InputError, "this command needs a [potential] section"};
    return staged("parse", [&] { return potentialOf(doc_); });
  }

  // The algebra the file describes, graded by the declared arrow degrees.
  GradedPresentation presentation() {
    if (!isPotential()) return staged("parse", [&] { return presentationOf(doc_); });
    Potential W = potential();
    if (doc_.kind == InputDocument::Kind::Dimer) staged("dimer", [&] { return DimerQP(W); });
    GradedPresentation J = jacobianAlgebra(W);
    std::map<std::string, int> deg;
    for (const auto& a : doc_.arrows) deg[a.name] = a.degree;
    return GradedPresentation(J.quiver, J.relations, ArrowGrading(deg));
  }

  static bool concentratedInDegreeZero(const GradedPresentation& p) {
    auto d = p.arrowDegrees();
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  }

  // Λ_0 of the input; a dimer without declared degrees uses its first
  // perfect matching.
  GradedPresentation degreeZero() {
    GradedPresentation p = presentation();
    if (concentratedInDegreeZero(p)) {
      if (!isPotential()) return p;
      DimerQP D = staged("dimer", [&] { return DimerQP(potential()); });
      auto ms = perfectMatchings(D);
      if (ms.empty()) throw StageFailure{"dimer", InputError, "no perfect matching to grade by"};
      auto names = ms.front().names(D.q());
      std::string list;
      for (const auto& s : names) list += (list.empty() ? "" : ",") + s;
      warn("no arrow degrees given: grading by the perfect matching {" + list + "}");
      p = GradedPresentation(p.quiver, p.relations, matchingGrading(D, ms.front()));
    }
    if (isPotential()) {
      auto w = staged("degree-zero", [&] { return degreeZeroFiniteDim(p, 12); });
      if (!w.finite) throw StageFailure{"degree-zero", InputError, "degree-0 part is infinite dimensional"};
    }
    return staged("degree-zero", [&] { return degreeZeroPresentation(p); });
  }

  void present() {
    GradedPresentation p = presentation();
    FDAlgebra A = staged("algebra", [&] { return algebraFromPresentation(p); });
    GradedPresentation g = staged("present", [&] { return gabrielPresentation(A, o_.relationBound); });
    auto rd = staged("present", [&] { return minimalRelationDegrees(g, o_.relationBound); });
    result_ = {{"dimension", A.dim()}, {"gradedDimensions", dims(dimsByDegree(A))}, {"presentation", quiverJson(g)}};
    evidence_ = {{"relationLengths", rd.lengths}, {"quadratic", rd.isQuadratic}};
  }

  void trivext() {
    GradedPresentation p = presentation();
    FDAlgebra A = staged("algebra", [&] { return algebraFromPresentation(p); });
    if (!concentratedInDegreeZero(p))
      warn("input arrows carry degrees: the trivial extension puts all of A in degree 0");
    FDAlgebra D = staged("trivext", [&] { return trivialExtension(A); });
    auto sym = staged("symmetry", [&] { return gradedSymmetricCheck(D); });
    GradedPresentation g = staged("present", [&] { return gabrielPresentation(D, o_.relationBound); });
    auto rd = staged("present", [&] { return minimalRelationDegrees(g, o_.relationBound); });
    result_ = {{"dimension", D.dim()},
               {"gradedDimensions", dims(dimsByDegree(D))},
               {"presentation", quiverJson(g)},
               {"document", printDocument(g)}};
    evidence_ = {{"baseDimension", A.dim()},
                 {"symmetric", sym.symmetric},
                 {"highestDegree", sym.highestDegree},
                 {"relationLengths", rd.lengths},
                 {"quadratic", rd.isQuadratic}};
  }

  void jacobian() {
    Potential W = potential();
    json ders = json::array();
    for (ArrowId a = 0; a < W.q().arrowCount(); ++a)
      ders.push_back({{"arrow", W.q().arrow(a).name}, {"derivative", cyclicDerivative(W, a).str()}});
    GradedPresentation p = presentation();
    result_ = {{"derivatives", ders}, {"presentation", quiverJson(p)}};
    auto g = staged("growth", [&] { return normalWordGrowth(p, o_.relationBound); });
    evidence_["growth"] = g.kind == GrowthReport::Kind::Finite     ? "finite"
                          : g.kind == GrowthReport::Kind::Infinite ? "infinite"
                                                                   : "undecided";
    if (!concentratedInDegreeZero(p)) {
      auto w = staged("degree-zero", [&] { return degreeZeroFiniteDim(p, 12); });
      evidence_["degreeZeroFinite"] = w.finite;
      if (w.finite) evidence_["degreeZeroDimension"] = w.dimension;
      else evidence_["pumpingCycle"] = w.cycle;
    }
  }

  void dimer() {
    DimerQP D = staged("dimer", [&] { return DimerQP(potential()); });
    if (o_.sub == "matchings") {
      auto ms = staged("matchings", [&] { return perfectMatchings(D); });
      json list = json::array();
      for (const auto& m : ms) list.push_back(m.names(D.q()));
      result_ = {{"matchings", list}};
      evidence_ = {{"faces", D.faceCount()}, {"count", ms.size()}};
    } else if (o_.sub == "grading") {
      PerfectMatching m;
      if (o_.matching.empty()) {
        auto ms = staged("matchings", [&] { return perfectMatchings(D); });
        if (ms.empty()) throw StageFailure{"matchings", InputError, "no perfect matching"};
        m = ms.front();
      } else {
        for (const auto& name : o_.matching)
          m.arrows.push_back(staged("grading", [&] { return D.q().arrowId(name); }));
        std::sort(m.arrows.begin(), m.arrows.end());
      }
      ArrowGrading g = staged("grading", [&] { return matchingGrading(D, m); });
      GradedPresentation J = jacobianAlgebra(D.potential());
      GradedPresentation p(J.quiver, J.relations, g);
      auto w = staged("degree-zero", [&] { return degreeZeroFiniteDim(p, 12); });
      result_ = {{"matching", m.names(D.q())}, {"degrees", g.degrees()}};
      evidence_ = {{"degreeZeroFinite", w.finite}, {"bound", w.bound}};
      if (w.finite) {
        GradedPresentation B = staged("degree-zero", [&] { return degreeZeroPresentation(p); });
        auto rd = staged("present", [&] { return minimalRelationDegrees(B, o_.relationBound); });
        evidence_["degreeZeroDimension"] = w.dimension;
        result_["degreeZero"] = quiverJson(B);
        evidence_["degreeZeroRelationLengths"] = rd.lengths;
      } else {
        evidence_["pumpingCycle"] = w.cycle;
      }
    } else {
      auto r = staged("consistency", [&] { return consistencyFeasible(D); });
      result_ = {{"feasible", r.feasible}};
      if (r.feasible) {
        json ch = json::object();
        for (ArrowId a = 0; a < D.q().arrowCount(); ++a) ch[D.q().arrow(a).name] = r.charges[a].str();
        result_["charges"] = ch;
      }
      warn("consistency is tested as feasibility of the R-charge system; other notions of consistency are not "
           "checked");
    }
  }

  BigradedExtTable extTable(const GradedPresentation& p) {
    FDAlgebra L = staged("algebra", [&] { return algebraFromPresentation(p); });
    RingPtr R = staged("ring", [&] { return makeRing(L); });
    return staged("ext", [&] { return gradedExtTable(degreeZeroModule(R), o_.bounds.ext); });
  }

  void exttable() {
    GradedPresentation p = presentation();
    BigradedExtTable t = extTable(p);
    json cells = json::array();
    for (const auto& [ij, d] : t.dims)
      if (d) cells.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", d}});
    auto ov = orthogonalityCheck(t, o_.n + 1);
    verdict_ = ov.orthogonal ? "orthogonal-to-bound" : "violation";
    result_ = {{"cells", cells}};
    evidence_ = {{"orthogonalityFor", o_.n + 1}, {"iBound", t.iBound}};
    if (!ov.orthogonal) evidence_["violation"] = {{"i", ov.i}, {"j", ov.j}, {"dim", ov.dim}};
    verdictOnly();
  }

  void dual() {
    GradedPresentation p = presentation();
    BigradedExtTable t = extTable(p);
    int window = std::min(o_.bounds.dual, o_.bounds.ext / (o_.n + 1));
    if (window < o_.bounds.dual)
      warn("dual window capped at " + std::to_string(window) + " by the Ext bound");
    auto D = staged("dual", [&] { return koszulDual(t, o_.n + 1, window); });
    result_ = {{"dimensions", dims(D->dimensions())}, {"window", window}};
    evidence_ = {{"koszulIndex", o_.n + 1}};
  }

  void preproj() {
    GradedPresentation B = degreeZero();
    FDAlgebra A = staged("algebra", [&] { return algebraFromPresentation(B); });
    int bound = o_.bounds.dual;
    auto nri = staged("n-representation-infinite", [&] { return nRepInfiniteTest(A, o_.n, bound); });
    if (!nri.passes) throw StageFailure{"n-representation-infinite", InputError, nri.reason};
    auto T = staged("preprojective", [&] { return preprojective(A, o_.n, bound); });
    result_ = {{"dimensions", dims(T->dimensions())}};
    if (o_.n <= 2) {
      PresentedAlgebra P = staged("presented", [&] {
        return PresentedAlgebra(preprojectivePresentation(B, o_.n), bound, bound);
      });
      evidence_["presentedDimensions"] = dims(P.dimensions());
      evidence_["agree"] = P.dimensions() == T->dimensions();
      result_["presentation"] = quiverJson(preprojectivePresentation(B, o_.n));
    }
  }

  void nri() {
    GradedPresentation B = degreeZero();
    FDAlgebra A = staged("algebra", [&] { return algebraFromPresentation(B); });
    auto r = staged("n-representation-infinite", [&] { return nRepInfiniteTest(A, o_.n, o_.bounds.horizon); });
    verdict_ = r.passes ? "passes-to-horizon" : "fails-at-j";
    evidence_ = {{"horizon", r.horizon}, {"coxeterAgrees", r.coxeterAgrees}, {"dimensionVectors", r.dims}};
    if (r.globalDimension) evidence_["globalDimension"] = *r.globalDimension;
    if (!r.passes) {
      evidence_["failedAt"] = r.failedAt;
      evidence_["failedDegree"] = r.failedDegree;
      evidence_["reason"] = r.reason;
    }
    verdictOnly();
  }

  void center() {
    GradedPresentation B = degreeZero();
    FDAlgebra A = staged("algebra", [&] { return algebraFromPresentation(B); });
    int D = o_.bounds.center;
    std::unique_ptr<GradedAlgebra> G;
    if (o_.n <= 2) {
      G = staged("preprojective", [&] {
        return std::make_unique<PresentedAlgebra>(preprojectivePresentation(B, o_.n), D, D + 1);
      });
    } else {
      auto T = staged("preprojective", [&] { return preprojective(A, o_.n, D); });
      G = std::make_unique<TableAlgebra>(*T);
      D -= 1;
      warn("no presented model for n > 2: center computed to degree " + std::to_string(D));
    }
    auto C = staged("center", [&] { return centerTruncation(*G, D, CenterFlavor::Graded, o_.n + 1); });
    auto V = veroneseOfCenter(C, 2);
    json els = json::array();
    for (std::size_t k = 0; k < C.basis.size(); ++k) {
      json row = json::array();
      for (const auto& z : C.basis[k]) row.push_back(formatElement(*G, C.degree(static_cast<int>(k)), z));
      els.push_back(row);
    }
    result_ = {{"dimensions", dims(C.dimensions())}, {"veroneseDimensions", dims(V.dimensions())}, {"elements", els}};
    evidence_ = {{"algebraDimensions", dims(G->dimensions())}, {"centralVerified", verifyCentral(*G, C)}};
  }

  void fgcheck() {
    GradedPresentation L = presentation();
    if (isPotential() || concentratedInDegreeZero(L)) {
      GradedPresentation B = degreeZero();
      warn("input is not a finite dimensional graded symmetric algebra: checking the trivial extension of its "
           "degree-0 part");
      L = staged("trivext", [&] {
        return gabrielPresentation(trivialExtension(algebraFromPresentation(B)), o_.relationBound);
      });
    }
    FgVerdict v;
    try {
      v = fgVerdict(L, o_.n, o_.bounds);
    } catch (const StructuralError& e) {
      throw StageFailure{stageOf(e.what()), InputError, e.what()};
    } catch (const ParameterError& e) {
      throw StageFailure{stageOf(e.what()), InputError, e.what()};
    } catch (const InconclusiveError& e) {
      throw StageFailure{stageOf(e.what()), Inconclusive, e.what()};
    }
    verdict_ = outcomeName(v.outcome);
    if (v.outcome == FgVerdict::Outcome::Inconclusive) code_ = Inconclusive;
    for (const auto& w : v.warnings) warn(w);
    warn("arithmetic is over Q; the criterion is stated over an algebraically closed field");
    evidence_["reason"] = v.reason;
    evidence_["symmetry"] = {{"symmetric", v.symmetry.symmetric},
                             {"highestDegree", v.symmetry.highestDegree},
                             {"caveat", v.symmetry.caveat},
                             {"quasiVeronese", v.quasiVeronese}};
    json nri = {{"passes", v.nri.passes}, {"horizon", v.nri.horizon}};
    if (v.nri.globalDimension) nri["globalDimension"] = *v.nri.globalDimension;
    if (!v.nri.passes) nri["failedAt"] = v.nri.failedAt;
    evidence_["nri"] = nri;
    if (v.orthogonality) {
      json o = {{"orthogonal", v.orthogonality->orthogonal}, {"index", v.n + 1}};
      if (!v.orthogonality->orthogonal) o["violation"] = {v.orthogonality->i, v.orthogonality->j};
      evidence_["orthogonality"] = o;
    }
    evidence_["dualWindow"] = v.dualWindow;
    evidence_["dualDimensions"] = dims(v.dualDimensions);
    evidence_["preprojectiveDimensions"] = dims(v.preprojectiveDimensions);
    evidence_["modelDimensions"] = dims(v.modelDimensions);
    evidence_["centerDimensions"] = dims(v.centerDimensions);
    evidence_["veroneseDimensions"] = dims(v.veroneseDimensions);
    evidence_["centerElements"] = v.centerElements;
    if (v.witness) {
      const auto& w = *v.witness;
      evidence_["witness"] = {{"outcome", outcomeName(w.outcome)},
                              {"genDegBound", w.genDegBound},
                              {"checkDegBound", w.checkDegBound},
                              {"generators", v.generatorLabels},
                              {"verified", v.witnessVerified},
                              {"failedDegree", w.failedDegree},
                              {"spanned", w.spanned},
                              {"needed", w.needed}};
    }
    verdictOnly();
  }

  static std::string stageOf(const std::string& msg) {
    auto c = msg.find(':');
    return c == std::string::npos ? "fgcheck" : msg.substr(0, c);
  }

  // Commands with a verdict carry no separate result object.
  void verdictOnly() {
    if (!result_.is_null())
      for (auto& [k, v] : result_.items()) evidence_[k] = v;
    result_ = json();
  }

  Options o_;
  InputDocument doc_;
  std::optional<std::string> verdict_;
  json result_, evidence_ = json::object();
  std::vector<std::string> warnings_;
  int code_ = Computed;
};

void flattenInto(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flattenInto(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flattenInto(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.push_back({path, j.dump()});
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  flattenInto(j, "", out);
  return out;
}

std::string renderText(const json& report) {
  auto rows = flatten(report);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream s;
  for (const auto& [k, v] : rows) s << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return s.str();
}

std::vector<std::pair<std::string, std::string>> parseText(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto sp = line.find(' ');
    auto v = line.find_first_not_of(' ', sp);
    rows.push_back({line.substr(0, sp), line.substr(v)});
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded algebras of quivers, Koszul duals and the finite generation criterion", "qfg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string seed, matching;
  int charValue = -1;
  app.add_option("--n", o.n, "n for n-representation infinite degree-0 parts")->check(CLI::PositiveNumber);
  app.add_option("--ext-bound", o.bounds.ext, "cohomological bound of Ext tables")->check(CLI::NonNegativeNumber);
  app.add_option("--dual-bound", o.bounds.dual, "degree bound of duals and preprojective algebras")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--center-bound", o.bounds.center, "degree bound of center truncations")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--gen-bound", o.bounds.gen, "generator degree bound of finiteness witnesses")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--horizon", o.bounds.horizon, "number of inverse Nakayama iterates")->check(CLI::PositiveNumber);
  app.add_option("--relation-bound", o.relationBound, "length bound for extracted relations")
      ->check(CLI::PositiveNumber);
  app.add_option("--char", charValue, "field characteristic, 0 or a prime")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", o.asJson, "emit one JSON object");
  app.add_option("--seed-order", seed, "comma separated arrows placed first in the monomial order");

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"present", "trivext", "jacobian", "exttable", "dual", "preproj", "nri", "center",
                           "fgcheck"}) {
    subs[name] = app.add_subcommand(name);
    subs[name]->add_option("file", o.file, "input document")->required();
  }
  subs["present"]->description("Gabriel quiver and minimal relations of a finite dimensional algebra");
  subs["trivext"]->description("trivial extension and its presentation");
  subs["jacobian"]->description("cyclic derivatives and Jacobian presentation of a potential");
  subs["exttable"]->description("bigraded Ext table of the degree-0 part and orthogonality");
  subs["dual"]->description("Koszul dual with respect to the degree-0 part");
  subs["preproj"]->description("higher preprojective algebra of the degree-0 part");
  subs["nri"]->description("n-representation infiniteness of the degree-0 part");
  subs["center"]->description("graded center of the preprojective algebra of the degree-0 part");
  subs["fgcheck"]->description("finite generation criterion at the given bounds");
  auto* dimer = app.add_subcommand("dimer", "perfect matchings, gradings and consistency of a dimer potential");
  dimer->require_subcommand(1);
  for (const char* name : {"matchings", "grading", "consistency"}) {
    auto* s = dimer->add_subcommand(name);
    s->add_option("file", o.file, "input document")->required();
  }
  dimer->get_subcommand("grading")->add_option("--matching", matching, "comma separated matched arrows");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Computed;
  } catch (const CLI::ParseError& e) {
    err << "error [arguments]: " << e.what() << '\n';
    return InputError;
  }
  for (auto* s : app.get_subcommands()) {
    o.command = s->get_name();
    for (auto* t : s->get_subcommands()) o.sub = t->get_name();
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> v;
    std::string cur;
    for (char c : s + ",") {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) v.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    return v;
  };
  o.seedOrder = split(seed);
  o.matching = split(matching);
  if (charValue >= 0) o.characteristic = static_cast<std::uint32_t>(charValue);

  try {
    Session s(o);
    json report = s.run();
    out << (o.asJson ? report.dump(2) + "\n" : renderText(report));
    if (s.exitCode() == Inconclusive) err << "inconclusive [" << o.command << "]: " << report["evidence"].value("reason", "") << '\n';
    return s.exitCode();
  } catch (const StageFailure& f) {
    err << (f.code == Inconclusive ? "inconclusive" : "error") << " [" << f.stage << "]: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "error [" << o.command << "]: " << e.what() << '\n';
    return InputError;
  }
}

}  // namespace qfg::cli
