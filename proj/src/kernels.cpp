#include "entkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace entkit::kernels {

namespace {

struct Backend {
  cplx (*dotc)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scal)(cplx, cplx*, std::size_t);
  double (*nrm2sq)(const cplx*, std::size_t);
  void (*rot)(cplx*, cplx*, double, cplx, std::size_t);
  const char* name;
};

constexpr Backend kScalar{scalar::dotc, scalar::axpy, scalar::scal,
                          scalar::nrm2sq, scalar::rot, "scalar"};
constexpr Backend kAvx2{avx2::dotc, avx2::axpy, avx2::scal, avx2::nrm2sq,
                        avx2::rot, "avx2"};

const Backend& select_backend() {
  static const Backend& chosen = []() -> const Backend& {
    const char* forced = std::getenv("ENTKIT_SIMD");
    if (forced != nullptr) {
      if (std::strcmp(forced, "scalar") == 0) return kScalar;
      if (std::strcmp(forced, "avx2") == 0 && avx2_available()) return kAvx2;
    }
    return avx2_available() ? kAvx2 : kScalar;
  }();
  return chosen;
}

}  // namespace

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

std::string_view active_backend() { return select_backend().name; }

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  return select_backend().dotc(a, b, n);
}
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  select_backend().axpy(alpha, x, y, n);
}
void scal(cplx alpha, cplx* x, std::size_t n) {
  select_backend().scal(alpha, x, n);
}
double nrm2sq(const cplx* x, std::size_t n) {
  return select_backend().nrm2sq(x, n);
}
void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n) {
  select_backend().rot(x, y, c, s, n);
}

}  // namespace entkit::kernels
