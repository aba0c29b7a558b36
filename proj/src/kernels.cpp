#include "adj/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adj::kernels {

namespace {

// Below this size the fork/join cost dominates.
constexpr std::size_t kParallelThreshold = 4 * kBlock;

std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm_squared(std::span<const cplx> a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return acc;
}

void rank2_update(std::span<cplx> x, cplx scale, cplx cu, std::span<const cplx> u,
                  cplx cv, std::span<const cplx> v) {
  assert(x.size() == u.size() && x.size() == v.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = scale * (x[i] + cu * u[i] + cv * v[i]);
  }
}

}  // namespace serial

namespace parallel {

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const auto nblocks = static_cast<std::int64_t>(block_count(n));
  std::vector<cplx> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double re = 0.0;
    double im = 0.0;
#pragma omp simd reduction(+ : re, im)
    for (std::size_t i = lo; i < hi; ++i) {
      // conj(a) * b
      re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
      im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    partial[static_cast<std::size_t>(blk)] = {re, im};
  }
  cplx acc{0.0, 0.0};
  for (const auto& p : partial) acc += p;
  return acc;
}

double norm_squared(std::span<const cplx> a) {
  const std::size_t n = a.size();
  const auto nblocks = static_cast<std::int64_t>(block_count(n));
  std::vector<double> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = lo; i < hi; ++i) {
      acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    partial[static_cast<std::size_t>(blk)] = acc;
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

void rank2_update(std::span<cplx> x, cplx scale, cplx cu, std::span<const cplx> u,
                  cplx cv, std::span<const cplx> v) {
  assert(x.size() == u.size() && x.size() == v.size());
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) if (x.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    x[i] = scale * (x[i] + cu * u[i] + cv * v[i]);
  }
}

}  // namespace parallel

}  // namespace adj::kernels
