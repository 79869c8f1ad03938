// Multipartite pure-state analysis: bipartition tables, k-separability,
// generalized geometric measure, GHZ/W parametrized families, tangle, and
// monogamy scores.

#pragma once

#include <cstdint>
#include <vector>

#include "entkit/schmidt.hpp"
#include "entkit/state.hpp"

namespace entkit {

struct BipartitionEntry {
  BipartiteSplit split;
  std::size_t schmidt_rank = 0;
  double max_coefficient = 0.0;
};

struct BipartitionTable {
  std::vector<BipartitionEntry> entries;  // all 2^(N-1) - 1 bipartitions
};

// Schmidt data for every bipartition (party 0 fixed on side A); N <= 8.
BipartitionTable bipartition_table(const PureState& psi);

struct KSeparability {
  std::size_t k = 1;     // 1 + number of separable bipartitions, capped at N
  bool genuine = false;  // entangled in every bipartition
};

KSeparability k_separability_pure(const PureState& psi);

// Generalized geometric measure 1 - max lambda^2 over bipartitions.
double ggm(const PureState& psi);

// Direct see-saw minimization of 1 - |<psi|phi>|^2 over biseparable phi;
// three-qubit oracle for the closed form.
double ggm_bruteforce_oracle(const PureState& psi, std::size_t budget = 16,
                             std::uint64_t seed = 1);

struct GHZClassParams {
  double delta;  // (0, pi/4]
  double alpha;  // (0, pi/2]
  double beta;   // (0, pi/2]
  double gamma;  // (0, pi/2]
  double phi;    // [0, 2 pi)
};

struct WClassParams {
  double a, b, c;  // positive; d = 1 - (a+b+c) >= 0
};

PureState make_ghz_class(const GHZClassParams& p);
PureState make_w_class(const WClassParams& p);

// tau = C^2_{A:BC} - C^2_{A:B} - C^2_{A:C} on three-qubit pure states;
// independent of the node choice.
double tangle(const PureState& psi);

enum class MonogamyMeasure { SquaredConcurrence, Concurrence, Eof, Negativity };

// E_{node:rest} - sum_k E_{node:k}; pairwise terms on two-qubit marginals.
double monogamy_score(const PureState& psi, std::size_t node, MonogamyMeasure measure);

}  // namespace entkit
