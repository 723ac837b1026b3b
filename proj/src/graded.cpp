#include "qfg/graded.hpp"

#include <numeric>

#include "qfg/error.hpp"

namespace qfg {

std::vector<long long> GradedAlgebra::dimensions() const {
  std::vector<long long> out;
  for (int d = 0; d <= window(); ++d) out.push_back(static_cast<long long>(dim(d)));
  return out;
}

SparseVec GradedAlgebra::multiply(int d, const SparseVec& x, int e, const SparseVec& y) const {
  SparseVec out;
  for (const auto& a : x)
    for (const auto& b : y) sparse::axpy(out, a.value * b.value, product(d, a.index, e, b.index));
  return out;
}

std::string formatElement(const GradedAlgebra& G, int d, const SparseVec& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& e : x) {
    std::string c = e.value.str();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != "1") out += c + "*";
    out += G.label(d, e.index);
  }
  return out;
}

TableAlgebra::TableAlgebra(std::vector<std::vector<std::string>> labels,
                           std::vector<std::vector<std::vector<SparseVec>>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  int W = window();
  if (static_cast<int>(table_.size()) != W + 1) throw StructuralError("product table has the wrong number of degrees");
  for (int d = 0; d <= W; ++d) {
    if (static_cast<int>(table_[d].size()) < W - d + 1) throw StructuralError("product table too short");
    for (int e = 0; d + e <= W; ++e)
      if (table_[d][e].size() != dim(d) * dim(e)) throw StructuralError("product table block has the wrong size");
  }
}

SparseVec TableAlgebra::product(int d, std::size_t i, int e, std::size_t k) const {
  if (d + e > window()) throw ParameterError("product beyond the known window");
  return table_[d][e][i * dim(e) + k];
}

std::vector<std::pair<int, SparseVec>> TableAlgebra::generators() const {
  std::vector<std::pair<int, SparseVec>> out;
  for (std::size_t i = 0; i < dim(0); ++i) out.push_back({0, sparse::unit(static_cast<std::uint32_t>(i))});
  for (int d = 1; d <= window(); ++d) {
    SparseEchelon dec;
    for (int e = 1; e < d; ++e)
      for (const auto& v : table_[e][d - e]) dec.insert(v);
    for (std::size_t i = 0; i < dim(d); ++i)
      if (!dec.isPivot(static_cast<std::uint32_t>(i))) out.push_back({d, sparse::unit(static_cast<std::uint32_t>(i))});
  }
  return out;
}

bool TableAlgebra::associative() const {
  int W = window();
  for (int d = 0; d <= W; ++d)
    for (int e = 0; d + e <= W; ++e)
      for (int f = 0; d + e + f <= W; ++f) {
        bool ok = true;
        long long n = static_cast<long long>(dim(d));
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
        for (long long i = 0; i < n; ++i)
          for (std::size_t k = 0; k < dim(e) && ok; ++k)
            for (std::size_t l = 0; l < dim(f) && ok; ++l) {
              SparseVec left = multiply(d + e, product(d, i, e, k), f, sparse::unit(static_cast<std::uint32_t>(l)));
              SparseVec right = multiply(d, sparse::unit(static_cast<std::uint32_t>(i)), e + f, product(e, k, f, l));
              if (left != right) ok = false;
            }
        if (!ok) return false;
      }
  return true;
}

std::vector<std::vector<int>> homogeneityLattice(const GradedPresentation& p) {
  const Quiver& q = p.q();
  std::size_t n = q.arrowCount();
  std::vector<std::vector<Scalar>> rows;
  auto counts = [&](const Path& w) {
    std::vector<Scalar> c(n, Scalar(0));
    for (ArrowId a : w.arrows()) c[a] += Scalar(1);
    return c;
  };
  for (const auto& r : p.relations)
    for (const auto& comp : r.uniformComponents()) {
      auto it = comp.terms().begin();
      auto first = counts(it->first);
      for (++it; it != comp.terms().end(); ++it) {
        auto c = counts(it->first);
        for (std::size_t a = 0; a < n; ++a) c[a] -= first[a];
        rows.push_back(c);
      }
    }
  Matrix M(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t a = 0; a < n; ++a) M(i, a) = rows[i][a];
  std::vector<std::vector<Scalar>> ker;
  if (rows.empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Scalar> e(n, Scalar(0));
      e[a] = Scalar(1);
      ker.push_back(e);
    }
  } else {
    ker = kernelBasis(M);
  }
  std::vector<std::vector<int>> out(n);
  for (const auto& v : ker) {
    mpz_class l = 1;
    for (const auto& x : v) l = lcm(l, x.toMpq().get_den());
    for (std::size_t a = 0; a < n; ++a) {
      mpq_class s = v[a].toMpq() * l;
      out[a].push_back(static_cast<int>(s.get_num().get_si()));
    }
  }
  return out;
}

PresentedAlgebra::PresentedAlgebra(GradedPresentation p, int window, int productWindow)
    : p_(std::move(p)), window_(window) {
  if (productWindow < window) throw ParameterError("product window below the basis window");
  p_.requireHomogeneous();
  MonomialOrder ord = MonomialOrder::forPresentation(p_);
  if (ord.kind() != MonomialOrder::Kind::GradedLengthLex)
    throw ParameterError("presented algebra needs positive degrees with acyclic degree-0 arrows");
  GradedPresentation low = p_;
  low.relations.clear();
  for (const auto& r : p_.relations)
    if (*r.homogeneousDegree(p_.grading) <= productWindow) low.relations.push_back(r);
  gb_ = groebnerFor(low, productWindow);
  words_.assign(window + 1, {});
  index_.assign(productWindow + 1, {});
  nextIndex_.assign(productWindow + 1, 0);
  gb_.forEachNormalWord(window, [&](const Path& w, int d) {
    index_[d].emplace(w, static_cast<std::uint32_t>(words_[d].size()));
    words_[d].push_back(w);
  });
  for (int d = 0; d <= window; ++d) nextIndex_[d] = static_cast<std::uint32_t>(words_[d].size());
  weights_ = homogeneityLattice(p_);
}

std::uint32_t PresentedAlgebra::indexOf(int d, const Path& w) const {
  auto& m = index_.at(d);
  auto it = m.find(w);
  if (it != m.end()) return it->second;
  if (d <= window_) throw StructuralError("word " + w.str() + " missing from the normal basis");
  std::uint32_t i = nextIndex_[d]++;
  m.emplace(w, i);
  return i;
}

SparseVec PresentedAlgebra::coordinates(int d, const PathElement& x) const {
  std::vector<Entry> es;
  PathElement nf = gb_.normalForm(x);
  for (const auto& [w, c] : nf.terms()) es.push_back({indexOf(d, w), c});
  return sparse::normalize(std::move(es));
}

SparseVec PresentedAlgebra::product(int d, std::size_t i, int e, std::size_t k) const {
  if (d + e > gb_.bound()) throw ParameterError("product beyond the Groebner bound");
  auto w = composePaths(words_.at(d).at(i), words_.at(e).at(k));
  if (!w) return {};
  std::vector<Entry> es;
  for (const auto& t : gb_.reduceWord(*w)) es.push_back({indexOf(d + e, t.path), t.coef});
  return sparse::normalize(std::move(es));
}

std::vector<std::pair<int, SparseVec>> PresentedAlgebra::generators() const {
  std::vector<std::pair<int, SparseVec>> out;
  const Quiver& q = p_.q();
  for (VertexId v = 0; v < q.vertexCount(); ++v) {
    SparseVec x = coordinates(0, PathElement(Path(q, v)));
    if (!x.empty()) out.push_back({0, x});
  }
  auto deg = p_.arrowDegrees();
  for (ArrowId a = 0; a < q.arrowCount(); ++a) {
    if (deg[a] > window_) continue;
    SparseVec x = coordinates(deg[a], PathElement(Path(q, std::vector<ArrowId>{a})));
    if (!x.empty()) out.push_back({deg[a], x});
  }
  return out;
}

std::vector<int> PresentedAlgebra::fineDegree(int d, std::size_t i) const {
  const Path& w = words_.at(d).at(i);
  std::size_t k = weights_.empty() ? 0 : weights_[0].size();
  std::vector<int> out(k, 0);
  for (ArrowId a : w.arrows())
    for (std::size_t j = 0; j < k; ++j) out[j] += weights_[a][j];
  return out;
}

}  // namespace qfg
