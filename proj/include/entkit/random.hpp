// Seeded randomness for states, unitaries, and Monte Carlo suites.  Every
// entry point takes an explicit engine so runs are reproducible.

#pragma once

#include <cstdint>
#include <random>

#include "entkit/state.hpp"

namespace entkit {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);
cplx gaussian_cplx(Rng& rng);

// Haar-random pure state on the given dims.
PureState haar_pure(DimensionList dims, Rng& rng);

// Haar-random unitary (QR of a Ginibre matrix with phase-fixed diagonal).
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

// Mixture of `members` Haar-random pure states with flat-Dirichlet weights.
DensityMatrix random_mixture(DimensionList dims, std::size_t members, Rng& rng);

// Random product pure state psi_A (x) psi_B on a two-party system.
PureState random_product_pure(DimensionList dims, Rng& rng);

// Random separable state sum_i p_i rho_A^i (x) rho_B^i on two parties.
DensityMatrix random_separable(DimensionList dims, std::size_t terms, Rng& rng);

}  // namespace entkit
