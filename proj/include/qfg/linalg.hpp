#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qfg/scalar.hpp"

namespace qfg {

struct Entry {
  std::uint32_t index;
  Scalar value;
  bool operator==(const Entry&) const = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVec = std::vector<Entry>;

namespace sparse {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Scalar& a);
SparseVec sum(const SparseVec& x, const SparseVec& y);
SparseVec difference(const SparseVec& x, const SparseVec& y);
Scalar coefficient(const SparseVec& x, std::uint32_t index);
SparseVec unit(std::uint32_t index, const Scalar& value = Scalar(1));
SparseVec fromDense(const std::vector<Scalar>& dense);
std::vector<Scalar> toDense(const SparseVec& x, std::size_t dim);
/// Builds a sorted, merged, zero-free vector from arbitrary (index, value) pairs.
SparseVec normalize(std::vector<Entry> entries);

}  // namespace sparse

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  void swapRows(std::size_t a, std::size_t b);
  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns. Row elimination
/// for each pivot is distributed across OpenMP threads.
std::vector<std::size_t> rrefInPlace(Matrix& m);
/// Single-threaded reference implementation of rrefInPlace.
std::vector<std::size_t> rrefInPlaceSerial(Matrix& m);

std::size_t rank(Matrix m);
/// Basis of { x : m x = 0 }.
std::vector<std::vector<Scalar>> kernelBasis(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/// Incrementally built echelon basis of a subspace of sparse vectors.
///
/// The pivot of each stored row is its largest index, so reduction never
/// introduces indices above the one being eliminated. After reduce() the
/// result contains no pivot index: non-pivot coordinates form a canonical
/// complement, which makes reduce() a normal form modulo the span.
class SparseEchelon {
 public:
  explicit SparseEchelon(bool trackCombinations = false) : track_(trackCombinations) {}

  SparseVec reduce(SparseVec v) const;
  /// Reduces v and the accompanying combination in lockstep.
  void reduceTracked(SparseVec& v, SparseVec& combination) const;

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(SparseVec v);
  /// Tracked insert. When v is dependent, returns the combination of
  /// previously inserted tags (plus `tag`) that vanishes.
  std::optional<SparseVec> insertTracked(SparseVec v, SparseVec tag);

  std::size_t rank() const { return rows_.size(); }
  bool isPivot(std::uint32_t index) const { return pivotRow_.count(index) != 0; }
  bool inSpan(const SparseVec& v) const { return reduce(v).empty(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  std::vector<std::uint32_t> pivots() const;

 private:
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::unordered_map<std::uint32_t, std::size_t> pivotRow_;
};

/// Reduces every vector against a fixed echelon; OpenMP over the batch.
std::vector<SparseVec> reduceAll(const SparseEchelon& ech, std::vector<SparseVec> vs);
std::vector<SparseVec> reduceAllSerial(const SparseEchelon& ech, std::vector<SparseVec> vs);

/// Basis of linear relations among the given vectors: all x with
/// sum_i x_i columns[i] = 0.
std::vector<SparseVec> sparseKernel(const std::vector<SparseVec>& columns);
/// Rank of the span of the given vectors.
std::size_t sparseRank(const std::vector<SparseVec>& vectors);

}  // namespace qfg
