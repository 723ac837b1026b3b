#include "qfg/dimer.hpp"

#include <algorithm>
#include <map>

#include "qfg/linalg.hpp"
#include "qfg/present.hpp"

namespace qfg {

DimerQP::DimerQP(Potential W) : W_(std::move(W)) {
  const Quiver& Q = W_.q();
  std::vector<int> white(Q.arrowCount(), 0), black(Q.arrowCount(), 0);
  for (const auto& t : W_.terms()) {
    bool pos = t.coef == Scalar(1);
    if (!pos && t.coef != Scalar(-1)) throw StructuralError("dimer potential coefficients must be +1 or -1");
    for (ArrowId a : t.cycle) ++(pos ? white : black)[a];
  }
  for (ArrowId a = 0; a < Q.arrowCount(); ++a)
    if (white[a] != 1 || black[a] != 1)
      throw StructuralError("arrow '" + Q.arrow(a).name + "' occurs in " + std::to_string(white[a]) +
                            " positive and " + std::to_string(black[a]) + " negative terms (need exactly one each)");
}

std::vector<std::string> PerfectMatching::names(const Quiver& q) const {
  std::vector<std::string> out;
  for (ArrowId a : arrows) out.push_back(q.arrow(a).name);
  return out;
}

bool isPerfectMatching(const DimerQP& D, const std::vector<ArrowId>& arrows) {
  std::vector<bool> in(D.q().arrowCount(), false);
  for (ArrowId a : arrows) in.at(a) = true;
  for (std::size_t f = 0; f < D.faceCount(); ++f) {
    int hits = 0;
    for (ArrowId a : D.face(f)) hits += in[a];
    if (hits != 1) return false;
  }
  return true;
}

std::vector<PerfectMatching> perfectMatchings(const DimerQP& D) {
  const std::size_t F = D.faceCount(), n = D.q().arrowCount();
  // mult[a][f] = occurrences of arrow a on face f
  std::vector<std::map<std::size_t, int>> mult(n);
  for (std::size_t f = 0; f < F; ++f)
    for (ArrowId a : D.face(f)) ++mult[a][f];
  std::vector<int> cover(F, 0);
  std::vector<ArrowId> chosen;
  std::vector<PerfectMatching> out;
  auto fits = [&](ArrowId a) {
    for (const auto& [f, m] : mult[a])
      if (cover[f] + m > 1) return false;
    return true;
  };
  std::function<void()> search = [&] {
    std::size_t best = F;
    std::size_t bestOptions = n + 1;
    for (std::size_t f = 0; f < F; ++f) {
      if (cover[f]) continue;
      std::size_t opts = 0;
      for (ArrowId a : D.face(f)) opts += fits(a);
      if (opts < bestOptions) {
        best = f;
        bestOptions = opts;
      }
    }
    if (best == F) {
      PerfectMatching m{chosen};
      std::sort(m.arrows.begin(), m.arrows.end());
      out.push_back(std::move(m));
      return;
    }
    std::vector<ArrowId> options(D.face(best));
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (ArrowId a : options) {
      if (!fits(a)) continue;
      for (const auto& [f, m] : mult[a]) cover[f] += m;
      chosen.push_back(a);
      search();
      chosen.pop_back();
      for (const auto& [f, m] : mult[a]) cover[f] -= m;
    }
  };
  search();
  std::sort(out.begin(), out.end(), [](const PerfectMatching& a, const PerfectMatching& b) { return a.arrows < b.arrows; });
  return out;
}

ArrowGrading matchingGrading(const DimerQP& D, const PerfectMatching& m) {
  if (!isPerfectMatching(D, m.arrows)) throw StructuralError("arrow set is not a perfect matching");
  ArrowGrading g = ArrowGrading::constant(D.q(), 0);
  for (ArrowId a : m.arrows) g.set(D.q().arrow(a).name, 1);
  return g;
}

DegreeZeroWitness degreeZeroFiniteDim(const GradedPresentation& J, int bound) {
  GradedPresentation P0 = degreeZeroPresentation(J);
  int maxRel = 0;
  for (const auto& r : P0.relations) maxRel = std::max(maxRel, static_cast<int>(r.maxLength()));
  GrowthReport g = normalWordGrowth(P0, std::max(bound, maxRel));
  DegreeZeroWitness w;
  w.bound = std::max(bound, maxRel);
  switch (g.kind) {
    case GrowthReport::Kind::Finite:
      w.finite = true;
      w.dimension = g.count;
      return w;
    case GrowthReport::Kind::Infinite:
      for (ArrowId a : g.cycle) w.cycle.push_back(P0.q().arrow(a).name);
      return w;
    default:
      throw InconclusiveError("degree-0 growth not settled at bound " + std::to_string(w.bound), g.suggestedBound);
  }
}

std::optional<std::vector<Scalar>> strictFeasible(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b,
                                                  std::size_t vars) {
  using Row = std::pair<std::vector<Scalar>, Scalar>;
  auto dedup = [&](std::vector<Row> rows) {
    std::map<std::vector<Scalar>, Scalar> best;
    std::vector<Row> trivial;
    for (auto& [c, d] : rows) {
      auto it = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.isZero(); });
      if (it == c.end()) {
        trivial.push_back({c, d});
        continue;
      }
      Scalar s = it->sign() > 0 ? *it : -*it;
      for (auto& x : c) x /= s;
      d /= s;
      auto [pos, ins] = best.emplace(c, d);
      if (!ins && d < pos->second) pos->second = d;
    }
    for (auto& [c, d] : best) trivial.push_back({c, d});
    return trivial;
  };
  std::vector<Row> sys;
  for (std::size_t i = 0; i < A.size(); ++i) {
    A[i].resize(vars);
    sys.push_back({A[i], b[i]});
  }
  sys = dedup(std::move(sys));
  std::vector<std::vector<Row>> stages(vars);
  for (std::size_t k = vars; k-- > 0;) {
    stages[k] = sys;
    std::vector<Row> upper, lower, next;
    for (auto& r : sys) {
      int s = r.first[k].sign();
      (s > 0 ? upper : s < 0 ? lower : next).push_back(r);
    }
    for (const auto& [cu, du] : upper)
      for (const auto& [cl, dl] : lower) {
        Scalar su = cu[k], sl = -cl[k];
        std::vector<Scalar> c(vars);
        for (std::size_t j = 0; j < vars; ++j) c[j] = cu[j] / su + cl[j] / sl;
        c[k] = Scalar(0);
        next.push_back({c, du / su + dl / sl});
      }
    sys = dedup(std::move(next));
  }
  for (const auto& [c, d] : sys)
    if (d.sign() <= 0) return std::nullopt;
  std::vector<Scalar> x(vars);
  for (std::size_t k = 0; k < vars; ++k) {
    std::optional<Scalar> lo, hi;
    for (const auto& [c, d] : stages[k]) {
      if (c[k].isZero()) continue;
      Scalar rest = d;
      for (std::size_t j = 0; j < k; ++j) rest -= c[j] * x[j];
      Scalar v = rest / c[k];
      if (c[k].sign() > 0) {
        if (!hi || v < *hi) hi = v;
      } else if (!lo || *lo < v) {
        lo = v;
      }
    }
    if (lo && hi) x[k] = (*lo + *hi) / Scalar(2);
    else if (lo) x[k] = *lo + Scalar(1);
    else if (hi) x[k] = *hi - Scalar(1);
  }
  return x;
}

RCharges consistencyFeasible(const DimerQP& D) {
  const Quiver& Q = D.q();
  const std::size_t m = Q.arrowCount();
  std::vector<std::vector<Scalar>> eqs;
  std::vector<Scalar> rhs;
  for (std::size_t f = 0; f < D.faceCount(); ++f) {
    std::vector<Scalar> row(m);
    for (ArrowId a : D.face(f)) row[a] += Scalar(1);
    eqs.push_back(row);
    rhs.push_back(Scalar(2));
  }
  for (VertexId v = 0; v < Q.vertexCount(); ++v) {
    std::vector<Scalar> row(m);
    long incidences = 0;
    for (ArrowId a = 0; a < m; ++a) {
      int k = (Q.arrow(a).source == v) + (Q.arrow(a).target == v);
      if (!k) continue;
      row[a] -= Scalar(k);
      incidences += k;
    }
    eqs.push_back(row);
    rhs.push_back(Scalar(2 - incidences));
  }
  Matrix M(eqs.size(), m + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) M(i, j) = eqs[i][j];
    M(i, m) = rhs[i];
  }
  std::vector<std::size_t> piv = rrefInPlace(M);
  RCharges out;
  if (std::find(piv.begin(), piv.end(), m) != piv.end()) return out;
  std::vector<bool> isPivot(m, false);
  for (auto p : piv) isPivot[p] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t j = 0; j < m; ++j)
    if (!isPivot[j]) freeCols.push_back(j);
  // R = x0 + N t
  const std::size_t f = freeCols.size();
  std::vector<Scalar> x0(m);
  std::vector<std::vector<Scalar>> N(m, std::vector<Scalar>(f));
  for (std::size_t k = 0; k < f; ++k) N[freeCols[k]][k] = Scalar(1);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::size_t p = piv[r];
    x0[p] = M(r, m);
    for (std::size_t k = 0; k < f; ++k) N[p][k] = -M(r, freeCols[k]);
  }
  std::vector<std::vector<Scalar>> A;
  std::vector<Scalar> b;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<Scalar> neg(f);
    for (std::size_t k = 0; k < f; ++k) neg[k] = -N[a][k];
    A.push_back(neg);
    b.push_back(x0[a]);
    A.push_back(N[a]);
    b.push_back(Scalar(2) - x0[a]);
  }
  auto t = strictFeasible(A, b, f);
  if (!t) return out;
  out.feasible = true;
  for (std::size_t a = 0; a < m; ++a) {
    Scalar r = x0[a];
    for (std::size_t k = 0; k < f; ++k) r += N[a][k] * (*t)[k];
    out.charges.push_back(r);
  }
  return out;
}

}  // namespace qfg
