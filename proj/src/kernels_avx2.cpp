// AVX2+FMA kernels.  Two interleaved complex doubles per 256-bit register.
// This translation unit is compiled with -mavx2 -mfma; callers must check
// avx2_available() before entering.

#include <immintrin.h>

#include "entkit/kernels.hpp"

namespace entkit::kernels::avx2 {

namespace {

// (re, im) pairs: duplicate imaginary parts and swap within each pair.
inline __m256d imag_dup(__m256d v) { return _mm256_permute_pd(v, 0xF); }
inline __m256d real_dup(__m256d v) { return _mm256_movedup_pd(v); }
inline __m256d pair_swap(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// alpha * v for broadcast alpha = (ar, ai): even lanes ar*vr - ai*vi,
// odd lanes ar*vi + ai*vr.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, pair_swap(v)));
}

}  // namespace

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    // conj(a)*b: even ar*br + ai*bi, odd ar*bi - ai*br.
    __m256d t = _mm256_mul_pd(imag_dup(va), pair_swap(vb));
    acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(real_dup(va), vb, t));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, sum);
  cplx r{out[0], out[1]};
  if (i < n) r += scalar::dotc(a + i, b + i, n - i);
  return r;
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, cmul_bcast(ar, ai, vx)));
  }
  if (i < n) scalar::axpy(alpha, x + i, y + i, n - i);
}

void scal(cplx alpha, cplx* x, std::size_t n) {
  double* px = reinterpret_cast<double*>(x);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(px + 2 * i, cmul_bcast(ar, ai, vx));
  }
  if (i < n) scalar::scal(alpha, x + i, n - i);
}

double nrm2sq(const cplx* x, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, sum);
  double r = out[0] + out[1];
  if (i < n) r += scalar::nrm2sq(x + i, n - i);
  return r;
}

void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n) {
  double* px = reinterpret_cast<double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  const __m256d msr = _mm256_set1_pd(-s.real());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    __m256d sy = cmul_bcast(sr, si, vy);              // s*y
    __m256d csx = cmul_bcast(msr, si, vx);            // -conj(s)*x
    _mm256_storeu_pd(px + 2 * i, _mm256_fmadd_pd(vc, vx, sy));
    _mm256_storeu_pd(py + 2 * i, _mm256_fmadd_pd(vc, vy, csx));
  }
  if (i < n) scalar::rot(x + i, y + i, c, s, n - i);
}

}  // namespace entkit::kernels::avx2
