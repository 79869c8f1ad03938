#include <cmath>

#include "doctest.h"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"
#include "entkit/range.hpp"
#include "helpers.hpp"

using namespace entkit;
namespace ts = testing_states;

namespace {
const BipartiteSplit kBi = BipartiteSplit::bipartite();
}

TEST_CASE("range_verify: pure product state certified by its own factor pair") {
  const PureState a = PureState::basis(0, DimensionList({2}));
  const PureState b({0.6, cplx{0.0, 0.8}}, DimensionList({2}));
  const DensityMatrix rho = DensityMatrix::pure(tensor(a, b));
  const auto data = range_verify(rho, kBi, {{a, b}});
  CHECK(data.all_in_range);
  CHECK(data.spans_range);
  CHECK(data.spans_pt_range);
  CHECK(data.rank_rho == 1);
  CHECK(data.rank_pt == 1);
}

TEST_CASE("range_verify: separable state spanned by its construction vectors") {
  auto rng = make_rng(17);
  std::vector<ProductVector> pairs;
  const std::size_t d = 4;
  ComplexMatrix m(d, d);
  for (int k = 0; k < 6; ++k) {
    const PureState a = haar_pure(DimensionList({2}), rng);
    const PureState b = haar_pure(DimensionList({2}), rng);
    const auto v = tensor(a, b).amplitudes();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) += (1.0 / 6.0) * v[i] * std::conj(v[j]);
    pairs.emplace_back(a, b);
  }
  const DensityMatrix rho(m, DimensionList({2, 2}));
  const auto data = range_verify(rho, kBi, pairs);
  CHECK(data.all_in_range);
  CHECK(data.spans_range);
  CHECK(data.spans_pt_range);
}

TEST_CASE("range_verify rejects mismatched candidates") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(DimensionList({2, 2}));
  const PureState bad = PureState::basis(0, DimensionList({3}));
  const PureState good = PureState::basis(0, DimensionList({2}));
  CHECK_THROWS_AS(range_verify(rho, kBi, {{bad, good}}), std::invalid_argument);
}

TEST_CASE("range search on a full-rank state returns budget-many hits") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(DimensionList({2, 2}));
  const auto found = range_search_product_vectors(rho, kBi, 8, 3);
  CHECK(found.size() == 8);
}

TEST_CASE("range search rejects oversized sides") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(DimensionList({5, 2}));
  CHECK_THROWS_AS(range_search_product_vectors(rho, kBi, 4, 1), std::domain_error);
}

TEST_CASE("tiles state: PPT, no product vector in range") {
  const DensityMatrix rho = ts::upb_tiles();
  // PPT within numerical tolerance.
  const auto pt_vals = la::eigh(partial_transpose(rho, 0)).values;
  CHECK(pt_vals.back() > -1e-12);
  // The search never reaches the membership tolerance.
  const auto found = range_search_product_vectors(rho, kBi, 300, 7);
  CHECK(found.empty());
  const double best = range_search_best_residual(rho, kBi, 300, 7);
  CHECK(best > 1e-3);
}

TEST_CASE("horodecki 3x3 family: PPT but range criterion fires") {
  const DensityMatrix rho = ts::horodecki_a(0.5);
  // PPT.
  const auto pt_vals = la::eigh(partial_transpose(rho, 1)).values;
  CHECK(pt_vals.back() > -1e-10);

  // Product vectors exist in Range(rho^{T_B}).
  const DensityMatrix pt = DensityMatrix::trusted(partial_transpose(rho, 1), rho.dims());
  const auto found = range_search_product_vectors(pt, kBi, 80, 11);
  CHECK(!found.empty());

  // Their partial conjugates cannot span Range(rho): candidates (e, f*)
  // tested against rho must leave a rank deficit.
  std::vector<ProductVector> conjugated;
  for (const auto& [e, f] : found) {
    std::vector<cplx> fc(f.amplitudes().size());
    for (std::size_t i = 0; i < fc.size(); ++i) fc[i] = std::conj(f.amplitudes()[i]);
    conjugated.emplace_back(e, PureState(std::move(fc), f.dims()));
  }
  const auto data = range_verify(rho, kBi, conjugated);
  CHECK(data.span_rank < data.rank_rho);
}
