#pragma once

#include <complex>
#include <span>

namespace adj {

using cplx = std::complex<double>;

// O(N) vector kernels used by the full-space engine and the matrix-free
// Hamiltonian action. `serial` is the straightforward reference; `parallel`
// is the OpenMP version the library actually runs. Parallel reductions sum
// fixed-size blocks and then combine the block partials in order, so their
// result does not depend on the thread count.
namespace kernels {

inline constexpr std::size_t kBlock = 1024;

namespace serial {

// sum_i conj(a_i) * b_i
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);
// x_i <- scale * (x_i + cu * u_i + cv * v_i)
void rank2_update(std::span<cplx> x, cplx scale, cplx cu, std::span<const cplx> u,
                  cplx cv, std::span<const cplx> v);

}  // namespace serial

namespace parallel {

cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);
void rank2_update(std::span<cplx> x, cplx scale, cplx cu, std::span<const cplx> u,
                  cplx cv, std::span<const cplx> v);

}  // namespace parallel

// Threads the OpenMP runtime will use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace adj
