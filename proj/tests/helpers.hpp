// Hand-built reference states shared by the unit suites.  Built locally so
// tests do not lean on the catalog they are meant to check.

#pragma once

#include <cmath>
#include <vector>

#include "entkit/state.hpp"

namespace testing_states {

using entkit::cplx;
using entkit::DimensionList;
using entkit::PureState;
using entkit::DensityMatrix;

inline PureState singlet() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({0.0, s, -s, 0.0}, DimensionList({2, 2}));
}

inline PureState psi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({0.0, s, s, 0.0}, DimensionList({2, 2}));
}

inline PureState phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({s, 0.0, 0.0, s}, DimensionList({2, 2}));
}

inline PureState ghz() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> a(8);
  a[0] = s;
  a[7] = s;
  return PureState(std::move(a), DimensionList({2, 2, 2}));
}

inline PureState w_state() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<cplx> a(8);
  a[1] = s;
  a[2] = s;
  a[4] = s;
  return PureState(std::move(a), DimensionList({2, 2, 2}));
}

// 3x3 bound-entangled family with parameter 0 < a < 1; PPT yet entangled,
// detectable by the range criterion.
inline DensityMatrix horodecki_a(double a) {
  entkit::ComplexMatrix m(9, 9);
  const double n = 1.0 / (8.0 * a + 1.0);
  const double h = (1.0 + a) / 2.0;
  const double g = std::sqrt(1.0 - a * a) / 2.0;
  for (int i = 0; i < 9; ++i) m(i, i) = a;
  m(6, 6) = h;
  m(8, 8) = h;
  m(0, 4) = a; m(4, 0) = a;
  m(0, 8) = a; m(8, 0) = a;
  m(4, 8) = a; m(8, 4) = a;
  m(6, 8) = g; m(8, 6) = g;
  m *= cplx{n, 0.0};
  return DensityMatrix(std::move(m), DimensionList({3, 3}));
}

// Normalized projector onto the complement of the five "tiles" product
// vectors; PPT entangled with no product vector in its range.
inline std::vector<PureState> tiles_vectors() {
  const double s = 1.0 / std::sqrt(2.0);
  const double t = 1.0 / 3.0;
  auto mk = [](std::vector<cplx> v) {
    return PureState(std::move(v), DimensionList({3, 3}));
  };
  std::vector<PureState> out;
  out.push_back(mk({s, -s, 0, 0, 0, 0, 0, 0, 0}));       // |0>(|0>-|1>)
  out.push_back(mk({0, 0, s, 0, 0, -s, 0, 0, 0}));       // (|0>-|1>)|2>
  out.push_back(mk({0, 0, 0, 0, 0, 0, 0, s, -s}));       // |2>(|1>-|2>)
  out.push_back(mk({0, 0, 0, s, 0, 0, -s, 0, 0}));       // (|1>-|2>)|0>
  out.push_back(mk({t, t, t, t, t, t, t, t, t}));        // uniform
  return out;
}

inline DensityMatrix upb_tiles() {
  entkit::ComplexMatrix m = entkit::ComplexMatrix::identity(9);
  for (const auto& psi : tiles_vectors()) {
    const auto& v = psi.amplitudes();
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) m(i, j) -= v[i] * std::conj(v[j]);
  }
  m *= cplx{0.25, 0.0};
  return DensityMatrix(std::move(m), DimensionList({3, 3}));
}

inline DensityMatrix werner(double p) {
  const DensityMatrix s = DensityMatrix::pure(singlet());
  entkit::ComplexMatrix m = entkit::ComplexMatrix::identity(4);
  m *= cplx{(1.0 - p) / 4.0, 0.0};
  entkit::ComplexMatrix sm = s.matrix();
  sm *= cplx{p, 0.0};
  m += sm;
  return DensityMatrix(std::move(m), DimensionList({2, 2}));
}

}  // namespace testing_states
