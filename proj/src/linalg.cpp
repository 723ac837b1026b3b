#include "qfg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfg {
namespace sparse {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.isZero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      ++j;
    } else {
      Scalar v = y[i].value + a * x[j].value;
      if (!v.isZero()) out.push_back({y[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  if (a.isZero()) return {};
  SparseVec out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.index, e.value * a});
  return out;
}

SparseVec sum(const SparseVec& x, const SparseVec& y) {
  SparseVec r = x;
  axpy(r, Scalar(1), y);
  return r;
}

SparseVec difference(const SparseVec& x, const SparseVec& y) {
  SparseVec r = x;
  axpy(r, Scalar(-1), y);
  return r;
}

Scalar coefficient(const SparseVec& x, std::uint32_t index) {
  auto it = std::lower_bound(x.begin(), x.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.index < i; });
  if (it != x.end() && it->index == index) return it->value;
  return Scalar();
}

SparseVec unit(std::uint32_t index, const Scalar& value) {
  if (value.isZero()) return {};
  return SparseVec{{index, value}};
}

SparseVec fromDense(const std::vector<Scalar>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].isZero()) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  return out;
}

std::vector<Scalar> toDense(const SparseVec& x, std::size_t dim) {
  std::vector<Scalar> out(dim);
  for (const auto& e : x) {
    if (e.index >= dim) throw std::out_of_range("sparse index beyond dimension");
    out[e.index] = e.value;
  }
  return out;
}

SparseVec normalize(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
      if (out.back().value.isZero()) out.pop_back();
    } else if (!e.value.isZero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace sparse

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  std::vector<Scalar> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).isZero() && !x[c].isZero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  Matrix m(a.rows_, b.cols_);
#pragma omp parallel for schedule(dynamic)
  for (long long r = 0; r < static_cast<long long>(a.rows_); ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.isZero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).isZero()) m(r, c) += x * b(k, c);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace {

template <bool Parallel>
std::vector<std::size_t> rrefImpl(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).isZero()) ++p;
    if (p == rows) continue;
    m.swapRows(p, r);
    Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!m(r, k).isZero()) m(r, k) *= inv;
    const long long n = static_cast<long long>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == r || m(i, c).isZero()) continue;
        Scalar f = m(i, c);
        for (std::size_t k = c; k < cols; ++k)
          if (!m(r, k).isZero()) m(i, k) -= f * m(r, k);
      }
    } else {
      for (long long i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == r || m(i, c).isZero()) continue;
        Scalar f = m(i, c);
        for (std::size_t k = c; k < cols; ++k)
          if (!m(r, k).isZero()) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rrefInPlace(Matrix& m) { return rrefImpl<true>(m); }
std::vector<std::size_t> rrefInPlaceSerial(Matrix& m) { return rrefImpl<false>(m); }

std::size_t rank(Matrix m) { return rrefInPlace(m).size(); }

std::vector<std::vector<Scalar>> kernelBasis(const Matrix& m) {
  Matrix r = m;
  auto pivots = rrefInPlace(r);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : pivots) isPivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rrefInPlace(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  auto pivots = rrefInPlace(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).isZero()) ++p;
    if (p == n) return Scalar().inField(m(0, 0).characteristic());
    if (p != c) {
      m.swapRows(p, c);
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).isZero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).isZero()) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t positionBelow(const SparseVec& v, std::uint32_t index) {
  return static_cast<std::size_t>(
      std::lower_bound(v.begin(), v.end(), index,
                       [](const Entry& e, std::uint32_t i) { return e.index < i; }) -
      v.begin());
}

}  // namespace

SparseVec SparseEchelon::reduce(SparseVec v) const {
  std::size_t pos = v.size();
  while (pos > 0) {
    --pos;
    auto it = pivotRow_.find(v[pos].index);
    if (it == pivotRow_.end()) continue;
    std::uint32_t idx = v[pos].index;
    Scalar c = v[pos].value;
    sparse::axpy(v, -c, rows_[it->second]);
    pos = positionBelow(v, idx);
  }
  return v;
}

void SparseEchelon::reduceTracked(SparseVec& v, SparseVec& combination) const {
  std::size_t pos = v.size();
  while (pos > 0) {
    --pos;
    auto it = pivotRow_.find(v[pos].index);
    if (it == pivotRow_.end()) continue;
    std::uint32_t idx = v[pos].index;
    Scalar c = v[pos].value;
    sparse::axpy(v, -c, rows_[it->second]);
    if (track_) sparse::axpy(combination, -c, combos_[it->second]);
    pos = positionBelow(v, idx);
  }
}

bool SparseEchelon::insert(SparseVec v) {
  SparseVec none;
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = v.back().value.inverse();
  for (auto& e : v) e.value *= inv;
  pivotRow_.emplace(v.back().index, rows_.size());
  rows_.push_back(std::move(v));
  if (track_) combos_.emplace_back();
  return true;
}

std::optional<SparseVec> SparseEchelon::insertTracked(SparseVec v, SparseVec tag) {
  if (!track_) throw std::logic_error("insertTracked on an untracked echelon");
  reduceTracked(v, tag);
  if (v.empty()) return tag;
  Scalar inv = v.back().value.inverse();
  for (auto& e : v) e.value *= inv;
  for (auto& e : tag) e.value *= inv;
  pivotRow_.emplace(v.back().index, rows_.size());
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(tag));
  return std::nullopt;
}

std::vector<std::uint32_t> SparseEchelon::pivots() const {
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.back().index);
  return out;
}

std::vector<SparseVec> reduceAll(const SparseEchelon& ech, std::vector<SparseVec> vs) {
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(vs.size()); ++i) vs[i] = ech.reduce(std::move(vs[i]));
  return vs;
}

std::vector<SparseVec> reduceAllSerial(const SparseEchelon& ech, std::vector<SparseVec> vs) {
  for (auto& v : vs) v = ech.reduce(std::move(v));
  return vs;
}

std::vector<SparseVec> sparseKernel(const std::vector<SparseVec>& columns) {
  SparseEchelon ech(true);
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    auto rel = ech.insertTracked(columns[i], sparse::unit(static_cast<std::uint32_t>(i)));
    if (rel) kernel.push_back(std::move(*rel));
  }
  return kernel;
}

std::size_t sparseRank(const std::vector<SparseVec>& vectors) {
  SparseEchelon ech;
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

}  // namespace qfg
