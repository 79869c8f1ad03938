#include <cmath>
#include <random>

#include "doctest.h"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"

using entkit::ComplexMatrix;
using entkit::cplx;
namespace la = entkit::la;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  auto rng = entkit::make_rng(seed);
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = entkit::gaussian_cplx(rng).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z = entkit::gaussian_cplx(rng);
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

ComplexMatrix random_general(std::size_t m, std::size_t n, std::uint64_t seed) {
  auto rng = entkit::make_rng(seed);
  ComplexMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entkit::gaussian_cplx(rng);
  return a;
}

double eigh_reconstruction_error(const ComplexMatrix& a) {
  const auto e = la::eigh(a);
  const std::size_t n = a.rows();
  ComplexMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += e.values[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
  r -= a;
  return r.max_abs();
}

}  // namespace

TEST_CASE("eigh on known spectra") {
  ComplexMatrix id = ComplexMatrix::identity(2);
  auto e = la::eigh(id);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(1.0));

  ComplexMatrix sz(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  e = la::eigh(sz);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(-1.0));

  ComplexMatrix sy(2, 2);
  sy(0, 1) = cplx{0.0, -1.0};
  sy(1, 0) = cplx{0.0, 1.0};
  e = la::eigh(sy);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(-1.0));
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
  for (std::size_t n : {2, 3, 4, 9, 16, 33}) {
    const auto a = random_hermitian(n, 100 + n);
    CHECK(eigh_reconstruction_error(a) < 1e-11 * static_cast<double>(n));
  }
}

TEST_CASE("eigh eigenvectors are orthonormal") {
  const auto a = random_hermitian(12, 7);
  const auto e = la::eigh(a);
  for (std::size_t p = 0; p < 12; ++p) {
    for (std::size_t q = 0; q < 12; ++q) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < 12; ++i)
        dot += std::conj(e.vectors(i, p)) * e.vectors(i, q);
      CHECK(std::abs(dot - (p == q ? cplx{1.0} : cplx{0.0})) < 1e-12);
    }
  }
  // Values sorted non-increasing.
  for (std::size_t k = 1; k < e.values.size(); ++k) CHECK(e.values[k - 1] >= e.values[k]);
}

TEST_CASE("svd reconstructs and orders") {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{5, 5}, {8, 3}, {3, 8}, {16, 9}}) {
    const auto a = random_general(m, n, 17 * m + n);
    const auto s = la::svd(a);
    CHECK(s.values.size() == std::min(m, n));
    for (std::size_t k = 1; k < s.values.size(); ++k) CHECK(s.values[k - 1] >= s.values[k]);
    // A = U S V^dagger
    ComplexMatrix r(m, n);
    for (std::size_t k = 0; k < s.values.size(); ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
          r(i, j) += s.values[k] * s.u(i, k) * std::conj(s.v(j, k));
    r -= a;
    CHECK(r.max_abs() < 1e-11 * static_cast<double>(std::max(m, n)));
  }
}

TEST_CASE("svd values match eigenvalues of A^dagger A") {
  const auto a = random_general(6, 4, 99);
  const auto s = la::svd(a);
  const auto gram = la::eigh(a.adjoint() * a);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(s.values[k] * s.values[k] == doctest::Approx(gram.values[k]).epsilon(1e-10));
  }
}

TEST_CASE("trace norm of Hermitian equals sum of absolute eigenvalues") {
  const auto a = random_hermitian(7, 3);
  const auto e = la::eigh(a);
  double expect = 0.0;
  for (double v : e.values) expect += std::abs(v);
  CHECK(la::trace_norm(a) == doctest::Approx(expect).epsilon(1e-11));
}

TEST_CASE("sqrtm_psd squares back") {
  auto rng = entkit::make_rng(4);
  const auto g = random_general(5, 5, 21);
  ComplexMatrix a = g * g.adjoint();  // PSD
  const auto r = la::sqrtm_psd(a);
  ComplexMatrix back = r * r;
  back -= a;
  CHECK(back.max_abs() < 1e-10);
}

TEST_CASE("rank cutoff is scale invariant") {
  CHECK(la::rank_from_values({1.0, 0.5, 1e-9}) == 2);
  CHECK(la::rank_from_values({1e6, 0.5e6, 1e-3}) == 2);
  CHECK(la::rank_from_values({}) == 0);
}
