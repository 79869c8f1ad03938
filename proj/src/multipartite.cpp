#include "entkit/multipartite.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/linalg.hpp"
#include "entkit/measures.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

BipartitionTable bipartition_table(const PureState& psi) {
  const std::size_t n = psi.dims().parties();
  if (n < 2) throw std::invalid_argument("bipartition_table: need at least two parties");
  if (n > 8) throw std::domain_error("bipartition_table: more than 8 parties unsupported");

  BipartitionTable table;
  // Party 0 stays on side A to halve the enumeration.
  const std::size_t rest = n - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
    std::vector<std::size_t> side_a{0};
    for (std::size_t p = 0; p < rest; ++p) {
      if (mask & (std::size_t{1} << p)) side_a.push_back(p + 1);
    }
    BipartiteSplit split(side_a, n);
    const auto dec = schmidt(psi, split);
    table.entries.push_back({split, dec.rank, dec.coefficients.empty()
                                                  ? 0.0
                                                  : dec.coefficients.front()});
  }
  return table;
}

KSeparability k_separability_pure(const PureState& psi) {
  const auto table = bipartition_table(psi);
  std::size_t separable = 0;
  for (const auto& e : table.entries) {
    if (e.schmidt_rank == 1) ++separable;
  }
  KSeparability out;
  out.k = std::min(psi.dims().parties(), 1 + separable);
  out.genuine = separable == 0;
  return out;
}

double ggm(const PureState& psi) {
  const auto table = bipartition_table(psi);
  double max_sq = 0.0;
  for (const auto& e : table.entries)
    max_sq = std::max(max_sq, e.max_coefficient * e.max_coefficient);
  return 1.0 - max_sq;
}

double ggm_bruteforce_oracle(const PureState& psi, std::size_t budget, std::uint64_t seed) {
  const std::size_t n = psi.dims().parties();
  if (n != 3) throw std::invalid_argument("ggm_bruteforce_oracle: three parties required");
  auto rng = make_rng(seed);

  double best_overlap_sq = 0.0;
  const std::size_t rest = n - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
    std::vector<std::size_t> side_a{0};
    for (std::size_t p = 0; p < rest; ++p)
      if (mask & (std::size_t{1} << p)) side_a.push_back(p + 1);
    const BipartiteSplit split(side_a, n);
    const PureState merged = merge_split(psi, split);
    const std::size_t da = merged.dims()[0];
    const std::size_t db = merged.dims()[1];
    const auto& amp = merged.amplitudes();

    for (std::size_t restart = 0; restart < std::max<std::size_t>(budget, 1); ++restart) {
      std::vector<cplx> u = haar_pure(DimensionList({da}), rng).amplitudes();
      std::vector<cplx> v = haar_pure(DimensionList({db}), rng).amplitudes();
      double overlap = 0.0;
      for (int iter = 0; iter < 300; ++iter) {
        // u <- M conj(v), v <- M^T conj(u) with M the amplitude matrix;
        // power iteration toward the top Schmidt pair.
        std::vector<cplx> nu(da, cplx{}), nv(db, cplx{});
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < db; ++j) nu[i] += amp[i * db + j] * std::conj(v[j]);
        double norm_u = vnorm(nu);
        if (norm_u == 0.0) break;
        kernels::scal(1.0 / norm_u, nu.data(), da);
        for (std::size_t j = 0; j < db; ++j)
          for (std::size_t i = 0; i < da; ++i) nv[j] += amp[i * db + j] * std::conj(nu[i]);
        const double norm_v = vnorm(nv);
        if (norm_v == 0.0) break;
        kernels::scal(1.0 / norm_v, nv.data(), db);
        u = nu;
        v = nv;
        if (norm_v - overlap < 1e-15) {
          overlap = norm_v;
          break;
        }
        overlap = norm_v;
      }
      best_overlap_sq = std::max(best_overlap_sq, overlap * overlap);
    }
  }
  return 1.0 - best_overlap_sq;
}

PureState make_ghz_class(const GHZClassParams& p) {
  if (!(p.delta > 0.0 && p.delta <= M_PI / 4.0))
    throw std::invalid_argument("make_ghz_class: delta must lie in (0, pi/4]");
  for (double angle : {p.alpha, p.beta, p.gamma}) {
    if (!(angle > 0.0 && angle <= M_PI / 2.0))
      throw std::invalid_argument("make_ghz_class: alpha, beta, gamma must lie in (0, pi/2]");
  }
  if (!(p.phi >= 0.0 && p.phi < 2.0 * M_PI))
    throw std::invalid_argument("make_ghz_class: phi must lie in [0, 2 pi)");

  const double cd = std::cos(p.delta), sd = std::sin(p.delta);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  const double k = 1.0 / (1.0 + 2.0 * cd * sd * ca * cb * cg * std::cos(p.phi));
  const double root_k = std::sqrt(k);
  const cplx phase{std::cos(p.phi), std::sin(p.phi)};

  const cplx fa[2] = {ca, sa};
  const cplx fb[2] = {cb, sb};
  const cplx fc[2] = {cg, sg};
  std::vector<cplx> amp(8);
  amp[0] = cd;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        amp[4 * i + 2 * j + l] += sd * phase * fa[i] * fb[j] * fc[l];
  for (auto& z : amp) z *= root_k;
  return PureState(std::move(amp), DimensionList({2, 2, 2}));
}

PureState make_w_class(const WClassParams& p) {
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0))
    throw std::invalid_argument("make_w_class: a, b, c must be positive");
  const double d = 1.0 - (p.a + p.b + p.c);
  if (d < -tol::norm) throw std::invalid_argument("make_w_class: a + b + c must not exceed 1");
  std::vector<cplx> amp(8);
  amp[1] = std::sqrt(p.a);
  amp[2] = std::sqrt(p.b);
  amp[4] = std::sqrt(p.c);
  amp[0] = std::sqrt(std::max(d, 0.0));
  return PureState(std::move(amp), DimensionList({2, 2, 2}));
}

namespace {

void require_three_qubits(const PureState& psi, const char* who) {
  if (!(psi.dims() == DimensionList({2, 2, 2})))
    throw std::invalid_argument(std::string(who) + ": three-qubit pure state required");
}

// 2 sqrt(det rho_node): the pure-state concurrence across node : rest.
double concurrence_node_vs_rest(const PureState& psi, std::size_t node) {
  const DensityMatrix red = partial_trace(DensityMatrix::pure(psi), {node});
  const auto& m = red.matrix();
  const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return 2.0 * std::sqrt(std::max(0.0, det.real()));
}

DensityMatrix two_qubit_marginal(const PureState& psi, std::size_t node, std::size_t other) {
  DensityMatrix red = partial_trace(DensityMatrix::pure(psi), {node, other});
  if (node > other) {
    // partial_trace keeps ascending order; swap so the node comes first.
    red = permute_parties(red, {1, 0});
  }
  return red;
}

}  // namespace

double tangle(const PureState& psi) {
  require_three_qubits(psi, "tangle");
  const double c_bc = concurrence_node_vs_rest(psi, 0);
  const double c_b = concurrence_mixed(two_qubit_marginal(psi, 0, 1)).value;
  const double c_c = concurrence_mixed(two_qubit_marginal(psi, 0, 2)).value;
  return c_bc * c_bc - c_b * c_b - c_c * c_c;
}

double monogamy_score(const PureState& psi, std::size_t node, MonogamyMeasure measure) {
  const std::size_t n = psi.dims().parties();
  if (node >= n) throw std::invalid_argument("monogamy_score: node out of range");
  const bool qubits_only = measure != MonogamyMeasure::Negativity;
  if (qubits_only) {
    for (std::size_t p = 0; p < n; ++p) {
      if (psi.dims()[p] != 2)
        throw std::invalid_argument("monogamy_score: qubit parties required for this measure");
    }
  } else if (psi.dims()[node] != 2) {
    throw std::invalid_argument("monogamy_score: qubit node required");
  }

  const BipartiteSplit node_vs_rest = BipartiteSplit::party_vs_rest(node, n);

  double total = 0.0;
  switch (measure) {
    case MonogamyMeasure::SquaredConcurrence: {
      const double c = concurrence_node_vs_rest(psi, node);
      total = c * c;
      break;
    }
    case MonogamyMeasure::Concurrence:
      total = concurrence_node_vs_rest(psi, node);
      break;
    case MonogamyMeasure::Eof:
      total = entropy_of_entanglement(psi, node_vs_rest).value;
      break;
    case MonogamyMeasure::Negativity:
      total = negativity(DensityMatrix::pure(psi), node_vs_rest).value;
      break;
  }

  double pairwise = 0.0;
  for (std::size_t other = 0; other < n; ++other) {
    if (other == node) continue;
    const DensityMatrix marginal = two_qubit_marginal(psi, node, other);
    switch (measure) {
      case MonogamyMeasure::SquaredConcurrence: {
        const double c = concurrence_mixed(marginal).value;
        pairwise += c * c;
        break;
      }
      case MonogamyMeasure::Concurrence:
        pairwise += concurrence_mixed(marginal).value;
        break;
      case MonogamyMeasure::Eof:
        pairwise += eof_two_qubit(marginal).value;
        break;
      case MonogamyMeasure::Negativity:
        pairwise += negativity(marginal, BipartiteSplit::bipartite()).value;
        break;
    }
  }
  return total - pairwise;
}

}  // namespace entkit
