#include <cmath>

#include "doctest.h"
#include "entkit/linalg.hpp"
#include "entkit/measures.hpp"
#include "entkit/random.hpp"
#include "entkit/schmidt.hpp"
#include "helpers.hpp"

using namespace entkit;
namespace ts = testing_states;

namespace {
const BipartiteSplit kBi = BipartiteSplit::bipartite();
}

TEST_CASE("entropy of entanglement reference values") {
  CHECK(entropy_of_entanglement(ts::singlet(), kBi).value == doctest::Approx(1.0).epsilon(1e-12));
  auto rng = make_rng(3);
  const PureState prod = random_product_pure(DimensionList({3, 2}), rng);
  CHECK(entropy_of_entanglement(prod, kBi).value == doctest::Approx(0.0).epsilon(1e-9));
  // sqrt(0.9)|00> + sqrt(0.1)|11> -> h(0.9), computed from the definition.
  const PureState skew({std::sqrt(0.9), 0.0, 0.0, std::sqrt(0.1)}, DimensionList({2, 2}));
  CHECK(entropy_of_entanglement(skew, kBi).value ==
        doctest::Approx(binary_entropy(0.9)).epsilon(1e-12));
}

TEST_CASE("pure concurrence closed form") {
  CHECK(concurrence_pure(ts::singlet()).value == doctest::Approx(1.0).epsilon(1e-12));
  const PureState prod = tensor(PureState::basis(0, DimensionList({2})),
                                PureState::basis(0, DimensionList({2})));
  CHECK(concurrence_pure(prod).value == doctest::Approx(0.0).epsilon(1e-12));
  const PureState skew({std::sqrt(0.9), 0.0, 0.0, std::sqrt(0.1)}, DimensionList({2, 2}));
  CHECK(concurrence_pure(skew).value == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("mixed concurrence: Werner closed form and pure-state reduction") {
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const double expect = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(concurrence_mixed(ts::werner(p)).value == doctest::Approx(expect).epsilon(1e-9));
  }
  auto rng = make_rng(5);
  for (int it = 0; it < 50; ++it) {
    const PureState psi = haar_pure(DimensionList({2, 2}), rng);
    CHECK(concurrence_mixed(DensityMatrix::pure(psi)).value ==
          doctest::Approx(concurrence_pure(psi).value).epsilon(1e-9));
  }
  // Separable-by-construction states carry zero concurrence.
  for (int it = 0; it < 50; ++it) {
    const DensityMatrix sep = random_separable(DimensionList({2, 2}), 1 + it % 4, rng);
    CHECK(concurrence_mixed(sep).value < 1e-8);
  }
}

TEST_CASE("eof closed form") {
  CHECK(eof_two_qubit(DensityMatrix::pure(ts::singlet())).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eof_two_qubit(ts::werner(0.2)).value == doctest::Approx(0.0).epsilon(1e-12));
  // Werner p = 1/2: C = 1/4, EoF = h((1 + sqrt(15)/4)/2).
  const double expect = binary_entropy((1.0 + std::sqrt(15.0) / 4.0) / 2.0);
  CHECK(eof_two_qubit(ts::werner(0.5)).value == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("negativity and log-negativity") {
  CHECK(negativity(DensityMatrix::pure(ts::singlet()), kBi).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(log_negativity(DensityMatrix::pure(ts::singlet()), kBi).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (double p : {0.1, 0.4, 0.7, 1.0}) {
    const double expect = std::max(0.0, (3.0 * p - 1.0) / 4.0);
    CHECK(negativity(ts::werner(p), kBi).value == doctest::Approx(expect).epsilon(1e-10));
  }
  // PPT states have zero negativity.
  CHECK(negativity(ts::horodecki_a(0.5), kBi).value < 1e-10);
  CHECK(log_negativity(ts::horodecki_a(0.5), kBi).value < 1e-10);
}

TEST_CASE("log-negativity additivity on tensor powers") {
  auto rng = make_rng(7);
  const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 2, rng);
  const double single = log_negativity(rho, kBi).value;
  // rho (x) rho, regrouped so both copies of A sit on side A.
  const DensityMatrix doubled = permute_parties(tensor(rho, rho), {0, 2, 1, 3});
  const BipartiteSplit split({0, 1}, 4);
  CHECK(log_negativity(doubled, split).value == doctest::Approx(2.0 * single).epsilon(1e-8));
}

TEST_CASE("negativity is convex (spot check)") {
  auto rng = make_rng(11);
  for (int it = 0; it < 40; ++it) {
    const DensityMatrix r1 = random_mixture(DimensionList({2, 2}), 2, rng);
    const DensityMatrix r2 = random_mixture(DimensionList({2, 2}), 3, rng);
    const double t = uniform(rng);
    ComplexMatrix mix = r1.matrix();
    mix *= cplx{t, 0.0};
    ComplexMatrix m2 = r2.matrix();
    m2 *= cplx{1.0 - t, 0.0};
    mix += m2;
    const DensityMatrix rho = DensityMatrix::trusted(mix, r1.dims());
    const double lhs = negativity(rho, kBi).value;
    const double rhs = t * negativity(r1, kBi).value + (1.0 - t) * negativity(r2, kBi).value;
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("log-negativity equals log2(2N+1) by construction") {
  auto rng = make_rng(13);
  for (int it = 0; it < 20; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 3}), 2, rng);
    const double n = negativity(rho, kBi).value;
    CHECK(log_negativity(rho, kBi).value == std::log2(2.0 * n + 1.0));
  }
}

TEST_CASE("local-unitary invariance of the closed-form measures") {
  auto rng = make_rng(17);
  for (int it = 0; it < 15; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 2, rng);
    const ComplexMatrix u = ComplexMatrix::kron(haar_unitary(2, rng), haar_unitary(2, rng));
    const DensityMatrix rotated =
        DensityMatrix::trusted(u * rho.matrix() * u.adjoint(), rho.dims());
    CHECK(concurrence_mixed(rotated).value ==
          doctest::Approx(concurrence_mixed(rho).value).epsilon(1e-8));
    CHECK(eof_two_qubit(rotated).value ==
          doctest::Approx(eof_two_qubit(rho).value).epsilon(1e-8));
    CHECK(negativity(rotated, kBi).value ==
          doctest::Approx(negativity(rho, kBi).value).epsilon(1e-8));
  }
}

TEST_CASE("convex roof: pure states and separable states") {
  // Pure input: unique decomposition, roof equals the entropy of entanglement.
  auto rng = make_rng(19);
  const PureState psi = haar_pure(DimensionList({2, 2}), rng);
  const double roof =
      eof_convex_roof_upper(DensityMatrix::pure(psi), kBi, {.restarts = 4, .sweeps = 50}, 2).value;
  CHECK(roof == doctest::Approx(entropy_of_entanglement(psi, kBi).value).epsilon(1e-8));

  for (int it = 0; it < 5; ++it) {
    const DensityMatrix sep = random_separable(DimensionList({2, 2}), 2 + it, rng);
    const double v = eof_convex_roof_upper(sep, kBi, {}, 100 + it).value;
    CHECK(v < 1e-4);
  }
}

TEST_CASE("convex roof tracks the Wootters closed form") {
  auto rng = make_rng(23);
  // Werner p = 0.8 plus random two-qubit mixtures.
  const double exact_w = eof_two_qubit(ts::werner(0.8)).value;
  const double roof_w = eof_convex_roof_upper(ts::werner(0.8), kBi, {}, 31).value;
  CHECK(roof_w == doctest::Approx(exact_w).epsilon(1e-4));
  CHECK(roof_w >= exact_w - 1e-6);

  int checked = 0;
  for (int it = 0; it < 12; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 1 + it % 4, rng);
    const double exact = eof_two_qubit(rho).value;
    const double roof = eof_convex_roof_upper(rho, kBi, {}, 500 + it).value;
    CHECK(roof >= exact - 1e-6);  // the numeric roof cannot beat the exact roof
    CHECK(roof - exact < 1e-4);
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("relative entropy function basics") {
  const DensityMatrix rho = DensityMatrix::pure(ts::singlet());
  CHECK(relative_entropy(rho, rho.matrix()) == doctest::Approx(0.0).epsilon(1e-10));
  // Support mismatch gives +infinity.
  const DensityMatrix other = DensityMatrix::pure(ts::phi_plus());
  CHECK(std::isinf(relative_entropy(rho, other.matrix())));
  // S(rho || I/4) = 2 for any pure two-qubit state.
  CHECK(relative_entropy(rho, DensityMatrix::maximally_mixed(DimensionList({2, 2})).matrix()) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("REE upper bound: separable floor and pure-state values") {
  auto rng = make_rng(29);
  for (int it = 0; it < 3; ++it) {
    const DensityMatrix sep = random_separable(DimensionList({2, 2}), 2 + it, rng);
    CHECK(relative_entropy_of_entanglement_upper(sep, kBi, {}, 41 + it).value < 1e-4);
  }
  //

  // Pure states: REE equals the entropy of entanglement.
  CHECK(relative_entropy_of_entanglement_upper(DensityMatrix::pure(ts::singlet()), kBi, {}, 43)
            .value == doctest::Approx(1.0).epsilon(1e-3));
  const PureState skew({std::sqrt(0.85), 0.0, 0.0, std::sqrt(0.15)}, DimensionList({2, 2}));
  CHECK(relative_entropy_of_entanglement_upper(DensityMatrix::pure(skew), kBi, {}, 47).value ==
        doctest::Approx(binary_entropy(0.85)).epsilon(2e-3));
}

TEST_CASE("REE never exceeds EoF beyond tolerance") {
  auto rng = make_rng(31);
  for (int it = 0; it < 6; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 2 + it % 3, rng);
    const double eof = eof_two_qubit(rho).value;
    const double ree = relative_entropy_of_entanglement_upper(rho, kBi, {}, 53 + it).value;
    CHECK(ree <= eof + 1e-4);
  }
}

TEST_CASE("upper-bound measures are locally unitary invariant at solver precision") {
  auto rng = make_rng(37);
  for (int it = 0; it < 3; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 2 + it, rng);
    const ComplexMatrix u = ComplexMatrix::kron(haar_unitary(2, rng), haar_unitary(2, rng));
    const DensityMatrix rotated =
        DensityMatrix::trusted(u * rho.matrix() * u.adjoint(), rho.dims());
    // The roof's gradient stage converges to machine precision.
    CHECK(eof_convex_roof_upper(rotated, kBi, {}, 60 + it).value ==
          doctest::Approx(eof_convex_roof_upper(rho, kBi, {}, 61 + it).value).epsilon(1e-6));
    // The REE bound carries the optimizer's ~1e-5 convergence floor.
    CHECK(std::abs(relative_entropy_of_entanglement_upper(rotated, kBi, {}, 62 + it).value -
                   relative_entropy_of_entanglement_upper(rho, kBi, {}, 63 + it).value) < 1e-3);
  }
}

TEST_CASE("measures reject unsupported sizes") {
  const DensityMatrix big = DensityMatrix::maximally_mixed(DimensionList({5, 5}));
  CHECK_THROWS_AS(eof_convex_roof_upper(big, kBi, {.restarts = 1, .sweeps = 1}, 1),
                  std::domain_error);
  const DensityMatrix four = DensityMatrix::maximally_mixed(DimensionList({4, 4}));
  CHECK_THROWS_AS(relative_entropy_of_entanglement_upper(four, kBi, {.iterations = 1}, 1),
                  std::domain_error);
  CHECK_THROWS_AS(concurrence_mixed(DensityMatrix::maximally_mixed(DimensionList({3, 3}))),
                  std::invalid_argument);
}
