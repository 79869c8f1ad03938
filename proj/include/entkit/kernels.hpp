// Low-level complex-double array kernels with runtime SIMD dispatch.
//
// Every kernel has a scalar reference implementation and an AVX2+FMA variant.
// The dispatched entry points (entkit::kernels::*) select the fastest backend
// supported by the CPU at first use; ENTKIT_SIMD=scalar|avx2 overrides the
// choice.  Both backends stay callable directly so tests can compare them.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace entkit::kernels {

using cplx = std::complex<double>;

namespace scalar {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scal(cplx alpha, cplx* x, std::size_t n);
double nrm2sq(const cplx* x, std::size_t n);
// Plane rotation of two vectors: x' = c*x + s*y, y' = -conj(s)*x + c*y.
void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n);
}  // namespace scalar

namespace avx2 {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scal(cplx alpha, cplx* x, std::size_t n);
double nrm2sq(const cplx* x, std::size_t n);
void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n);
}  // namespace avx2

// Dispatched entry points.
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scal(cplx alpha, cplx* x, std::size_t n);
double nrm2sq(const cplx* x, std::size_t n);
void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n);

// Name of the backend the dispatcher settled on ("avx2" or "scalar").
std::string_view active_backend();
bool avx2_available();

}  // namespace entkit::kernels
