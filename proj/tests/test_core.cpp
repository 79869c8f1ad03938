#include <cmath>

#include "doctest.h"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"
#include "entkit/schmidt.hpp"
#include "entkit/tensor.hpp"
#include "helpers.hpp"

using namespace entkit;
namespace ts = testing_states;

TEST_CASE("tensor of basis vectors") {
  const PureState zero = PureState::basis(0, DimensionList({2}));
  const PureState one = PureState::basis(1, DimensionList({2}));
  const PureState prod = tensor(zero, one);
  CHECK(prod.dims() == DimensionList({2, 2}));
  CHECK(prod.amplitudes()[1] == cplx{1.0, 0.0});
  CHECK(std::abs(prod.amplitudes()[0]) == 0.0);
  CHECK(std::abs(prod.amplitudes()[2]) == 0.0);
  CHECK(std::abs(prod.amplitudes()[3]) == 0.0);
}

TEST_CASE("tensor of maximally mixed qubits") {
  const DensityMatrix half = DensityMatrix::maximally_mixed(DimensionList({2}));
  const DensityMatrix quarter = tensor(half, half);
  CHECK(quarter.dims() == DimensionList({2, 2}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(quarter.matrix()(i, j) == (i == j ? cplx{0.25, 0.0} : cplx{0.0, 0.0}));
}

TEST_CASE("tensor reproduces the first tiles vector") {
  // |0> (x) (|0> - |1>)/sqrt(2) on a pair of qutrits.
  const double s = 1.0 / std::sqrt(2.0);
  const PureState zero3 = PureState::basis(0, DimensionList({3}));
  const PureState diff({s, -s, 0.0}, DimensionList({3}));
  const PureState prod = tensor(zero3, diff);
  CHECK(prod.dims() == DimensionList({3, 3}));
  CHECK(prod.amplitudes()[0] == cplx{s, 0.0});
  CHECK(prod.amplitudes()[1] == cplx{-s, 0.0});
  for (std::size_t k = 2; k < 9; ++k) CHECK(std::abs(prod.amplitudes()[k]) == 0.0);
}

TEST_CASE("partial trace of the singlet is maximally mixed") {
  const DensityMatrix rho = DensityMatrix::pure(ts::singlet());
  const DensityMatrix a = partial_trace(rho, {0});
  CHECK(a.dim() == 2);
  CHECK(a.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(a.matrix()(0, 1)) < 1e-14);
}

TEST_CASE("partial trace of a product state returns the factor") {
  auto rng = make_rng(42);
  const DensityMatrix ra = random_mixture(DimensionList({3}), 2, rng);
  const DensityMatrix rb = random_mixture(DimensionList({2}), 2, rng);
  const DensityMatrix prod = tensor(ra, rb);
  const DensityMatrix back = partial_trace(prod, {0});
  ComplexMatrix diff = back.matrix();
  diff -= ra.matrix();
  CHECK(diff.max_abs() < 1e-13);
  // Trace is preserved.
  CHECK(std::abs(back.matrix().trace() - cplx{1.0, 0.0}) < 1e-13);
}

TEST_CASE("partial trace of GHZ over C") {
  const DensityMatrix rho = DensityMatrix::pure(ts::ghz());
  const DensityMatrix ab = partial_trace(rho, {0, 1});
  // (|00><00| + |11><11|)/2
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx expect = (i == j && (i == 0 || i == 3)) ? cplx{0.5, 0.0} : cplx{0.0, 0.0};
      CHECK(std::abs(ab.matrix()(i, j) - expect) < 1e-14);
    }
  }
}

TEST_CASE("partial trace rejects bad indices") {
  const DensityMatrix rho = DensityMatrix::pure(ts::singlet());
  CHECK_THROWS_AS(partial_trace(rho, {5}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
}

TEST_CASE("partial transpose of the singlet has eigenvalues (1/2,1/2,1/2,-1/2)") {
  const DensityMatrix rho = DensityMatrix::pure(ts::singlet());
  const ComplexMatrix pt = partial_transpose(rho, 0);
  CHECK(std::abs(pt.trace() - rho.matrix().trace()) < 1e-14);
  const auto vals = spectrum(pt);
  CHECK(vals[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(vals[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(vals[3] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial transpose of a product state stays PSD") {
  auto rng = make_rng(7);
  const DensityMatrix ra = random_mixture(DimensionList({2}), 2, rng);
  const DensityMatrix rb = random_mixture(DimensionList({3}), 3, rng);
  const DensityMatrix prod = tensor(ra, rb);
  const auto vals = spectrum(partial_transpose(prod, 0));
  CHECK(vals.back() > -1e-12);
}

TEST_CASE("partial transpose of |Phi+><Phi+| matches the explicit matrix") {
  const DensityMatrix q = DensityMatrix::pure(ts::phi_plus());
  const ComplexMatrix pt = partial_transpose(q, 0);
  ComplexMatrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  expect(1, 2) = 0.5;
  expect(2, 1) = 0.5;
  ComplexMatrix diff = pt;
  diff -= expect;
  CHECK(diff.max_abs() < 1e-15);
}

TEST_CASE("partial transpose is an exact involution and trace preserving") {
  auto rng = make_rng(11);
  for (int it = 0; it < 20; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 3}), 4, rng);
    const ComplexMatrix pt = partial_transpose(rho, 1);
    CHECK(std::abs(pt.trace() - cplx{1.0, 0.0}) < 1e-12);
    const DensityMatrix wrapped = DensityMatrix::trusted(pt, rho.dims());
    const ComplexMatrix back = partial_transpose(wrapped, 1);
    for (std::size_t i = 0; i < rho.dim(); ++i)
      for (std::size_t j = 0; j < rho.dim(); ++j)
        CHECK(back(i, j) == rho.matrix()(i, j));  // entry permutation, exact
  }
}

TEST_CASE("PT spectrum is invariant under local unitaries") {
  auto rng = make_rng(23);
  for (int it = 0; it < 10; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 2}), 3, rng);
    const ComplexMatrix ua = haar_unitary(2, rng);
    const ComplexMatrix ub = haar_unitary(2, rng);
    const ComplexMatrix u = ComplexMatrix::kron(ua, ub);
    const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    const DensityMatrix rho2 = DensityMatrix::trusted(rotated, rho.dims());
    const auto s1 = spectrum(partial_transpose(rho, 0));
    const auto s2 = spectrum(partial_transpose(rho2, 0));
    for (std::size_t k = 0; k < s1.size(); ++k)
      CHECK(s1[k] == doctest::Approx(s2[k]).epsilon(1e-8));
  }
}

TEST_CASE("schmidt of a product state has a single coefficient") {
  const PureState prod = tensor(PureState::basis(0, DimensionList({2})),
                                PureState::basis(0, DimensionList({2})));
  const auto dec = schmidt(prod, BipartiteSplit::bipartite());
  CHECK(dec.rank == 1);
  CHECK(dec.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt of the singlet") {
  const auto dec = schmidt(ts::singlet(), BipartiteSplit::bipartite());
  CHECK(dec.rank == 2);
  CHECK(dec.coefficients[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dec.coefficients[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  // Squared coefficients equal the spectrum of rho_A.
  const DensityMatrix a = partial_trace(DensityMatrix::pure(ts::singlet()), {0});
  const auto sa = la::eigh(a.matrix()).values;
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(dec.coefficients[k] * dec.coefficients[k] == doctest::Approx(sa[k]).epsilon(1e-12));
}

TEST_CASE("schmidt of GHZ across A:BC") {
  const auto dec = schmidt(ts::ghz(), BipartiteSplit::party_vs_rest(0, 3));
  CHECK(dec.rank == 2);
  CHECK(dec.coefficients[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dec.coefficients[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("schmidt reconstruction and normalization") {
  auto rng = make_rng(31);
  for (int it = 0; it < 20; ++it) {
    const PureState psi = haar_pure(DimensionList({3, 4}), rng);
    const auto dec = schmidt(psi, BipartiteSplit::bipartite());
    double sumsq = 0.0;
    for (double a : dec.coefficients) sumsq += a * a;
    CHECK(sumsq == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dec.rank <= 3);
    const auto rec = dec.reconstruct();
    // Up to global phase; SVD-based construction already fixes the phase,
    // so direct comparison is valid here.
    double err = 0.0;
    for (std::size_t i = 0; i < rec.size(); ++i)
      err = std::max(err, std::abs(rec[i] - psi.amplitudes()[i]));
    CHECK(err < tol::recon);
  }
}

TEST_CASE("schmidt marginal entropies agree (random pure states)") {
  auto rng = make_rng(37);
  for (int it = 0; it < 25; ++it) {
    const PureState psi = haar_pure(DimensionList({2, 2, 3}), rng);
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const BipartiteSplit split({1}, 3);
    const DensityMatrix ra = partial_trace(rho, split.party_a());
    const DensityMatrix rb = partial_trace(rho, split.party_b());
    CHECK(von_neumann_entropy(ra) == doctest::Approx(von_neumann_entropy(rb)).epsilon(1e-8));
  }
}

TEST_CASE("entropy basics") {
  const DensityMatrix pure = DensityMatrix::pure(ts::singlet());
  CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-10));
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(DimensionList({2}));
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));
  const DensityMatrix w1a = partial_trace(ts::werner(1.0), {0});
  CHECK(von_neumann_entropy(w1a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectrum examples and validation") {
  CHECK(spectrum(ComplexMatrix::identity(2)) == std::vector<double>{1.0, 1.0});
  const auto s = spectrum(DensityMatrix::pure(ts::singlet()).matrix());
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(s[k]) < 1e-12);
  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(spectrum(bad), std::invalid_argument);
}

TEST_CASE("realign: product states give unit sum, singlet gives two") {
  auto rng = make_rng(41);
  const PureState prod = random_product_pure(DimensionList({2, 3}), rng);
  const auto vals = realign(DensityMatrix::pure(prod), BipartiteSplit::bipartite());
  CHECK(vals.size() == 4);  // min(d_A^2, d_B^2)
  double sum = 0.0;
  for (double v : vals) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));

  const auto singlet_vals = realign(DensityMatrix::pure(ts::singlet()), BipartiteSplit::bipartite());
  double ssum = 0.0;
  for (double v : singlet_vals) ssum += v;
  CHECK(ssum == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("realign singular value sum equals the realigned trace norm") {
  // The realignment values are the singular values of the coefficient matrix
  // xi[(i,j)][(mu,nu)] = <i mu|rho|j nu>; their sum is its trace norm.
  auto rng = make_rng(53);
  for (int it = 0; it < 10; ++it) {
    const DensityMatrix rho = random_mixture(DimensionList({2, 3}), 2 + it % 3, rng);
    const auto vals = realign(rho, BipartiteSplit::bipartite());
    double sum = 0.0;
    for (double v : vals) sum += v;
    ComplexMatrix xi(4, 9);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t mu = 0; mu < 3; ++mu)
          for (std::size_t nu = 0; nu < 3; ++nu)
            xi(i * 2 + j, mu * 3 + nu) = rho.matrix()(i * 3 + mu, j * 3 + nu);
    CHECK(sum == doctest::Approx(la::trace_norm(xi)).epsilon(1e-10));
  }
}

TEST_CASE("operator-Schmidt data reconstructs the state") {
  auto rng = make_rng(43);
  const DensityMatrix rho = random_mixture(DimensionList({2, 3}), 3, rng);
  const auto os = operator_schmidt(rho, BipartiteSplit::bipartite());
  ComplexMatrix rec(6, 6);
  for (std::size_t k = 0; k < os.values.size(); ++k) {
    ComplexMatrix term = ComplexMatrix::kron(os.ops_a[k], os.ops_b[k]);
    term *= cplx{os.values[k], 0.0};
    rec += term;
  }
  rec -= rho.matrix();
  CHECK(rec.max_abs() < 1e-10);
  // Same singular values as the matrix-unit realignment.
  const auto vals = realign(rho, BipartiteSplit::bipartite());
  for (std::size_t k = 0; k < vals.size(); ++k)
    CHECK(os.values[k] == doctest::Approx(vals[k]).epsilon(1e-9));
}

TEST_CASE("state validation catches broken inputs") {
  CHECK_THROWS_AS(PureState({1.0, 1.0}, DimensionList({2})), std::invalid_argument);
  ComplexMatrix notpsd(2, 2);
  notpsd(0, 0) = 1.5;
  notpsd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(notpsd, DimensionList({2})), std::invalid_argument);
  ComplexMatrix nottrace = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(DensityMatrix(nottrace, DimensionList({2})), std::invalid_argument);
}

TEST_CASE("ensemble decomposition validates and reconstructs") {
  const DensityMatrix target = DensityMatrix::maximally_mixed(DimensionList({2}));
  const PureState zero = PureState::basis(0, DimensionList({2}));
  const PureState one = PureState::basis(1, DimensionList({2}));
  const auto ens = EnsembleDecomposition::checked({0.5, 0.5}, {zero, one}, target);
  ComplexMatrix diff = ens.average().matrix();
  diff -= target.matrix();
  CHECK(diff.max_abs() < 1e-14);
  CHECK_THROWS_AS(EnsembleDecomposition::checked({1.0}, {zero}, target), std::invalid_argument);
}
