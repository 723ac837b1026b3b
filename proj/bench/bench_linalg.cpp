// Wall-clock comparison of the OpenMP kernels with their serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "qfg/linalg.hpp"

using namespace qfg;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Matrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

SparseVec randomSparse(std::mt19937_64& rng, std::uint32_t dim, int nnz) {
  std::uniform_int_distribution<std::uint32_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Entry> es;
  for (int k = 0; k < nnz; ++k) es.push_back({idx(rng), Scalar(d(rng))});
  return sparse::normalize(std::move(es));
}

}  // namespace

int main() {
  std::mt19937_64 rng(0xbe7c);
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-24s %10s %10s %8s\n", "kernel", "serial", "openmp", "agree");
  for (std::size_t n : {16, 32, 48}) {
    Matrix a = randomMatrix(rng, n, n + 10), b = a;
    std::vector<std::size_t> pa, pb;
    double ts = seconds([&] { pa = rrefInPlaceSerial(a); });
    double tp = seconds([&] { pb = rrefInPlace(b); });
    char name[32];
    std::snprintf(name, sizeof name, "rref %zux%zu", n, n + 10);
    std::printf("%-24s %10.4f %10.4f %8s\n", name, ts, tp, pa == pb && a == b ? "yes" : "NO");
    std::fflush(stdout);
  }
  for (std::uint32_t dim : {500u, 2000u}) {
    SparseEchelon ech;
    // banded rows with pivots at even indices keep coefficients small
    for (std::uint32_t i = 4; i < dim; i += 2)
      ech.insert(sparse::normalize({{i, Scalar(1)}, {i - 1, Scalar(1)}, {i - 3, Scalar(-1)}}));
    std::vector<SparseVec> batch;
    for (int i = 0; i < 20000; ++i) batch.push_back(randomSparse(rng, dim, 16));
    std::vector<SparseVec> rs, rp;
    double ts = seconds([&] { rs = reduceAllSerial(ech, batch); });
    double tp = seconds([&] { rp = reduceAll(ech, batch); });
    char name[32];
    std::snprintf(name, sizeof name, "reduceAll dim %u", dim);
    std::printf("%-24s %10.4f %10.4f %8s\n", name, ts, tp, rs == rp ? "yes" : "NO");
    std::fflush(stdout);
  }
}
