#include "entkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"
#include "entkit/schmidt.hpp"

namespace entkit {

std::string_view to_string(MeasureKind k) {
  switch (k) {
    case MeasureKind::Exact: return "exact";
    case MeasureKind::UpperBound: return "upper_bound";
    case MeasureKind::LowerBound: return "lower_bound";
  }
  return "unknown";
}

MeasureResult entropy_of_entanglement(const PureState& psi, const BipartiteSplit& split) {
  const auto dec = schmidt(psi, split);
  std::vector<double> probs;
  probs.reserve(dec.rank);
  for (double a : dec.coefficients) probs.push_back(a * a);
  return {"entropy_of_entanglement", shannon_entropy(probs), MeasureKind::Exact,
          "schmidt spectrum"};
}

namespace {

void require_two_qubits(const DimensionList& dims, const char* who) {
  if (!(dims == DimensionList({2, 2})))
    throw std::invalid_argument(std::string(who) + ": two-qubit state required");
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  // (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y), written out as the
  // index flip (i -> 3-i) with sign (-1)^{parity(i) + parity(j)}.
  ComplexMatrix out(4, 4);
  auto sign = [](std::size_t i) { return (i == 1 || i == 2) ? -1.0 : 1.0; };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out(i, j) = sign(i) * sign(j) * std::conj(rho(3 - i, 3 - j));
  return out;
}

}  // namespace

MeasureResult concurrence_pure(const PureState& psi) {
  require_two_qubits(psi.dims(), "concurrence_pure");
  const auto& a = psi.amplitudes();
  const double c = 2.0 * std::abs(a[1] * a[2] - a[0] * a[3]);
  return {"concurrence", std::min(c, 1.0), MeasureKind::Exact, "pure spin-flip overlap"};
}

MeasureResult concurrence_mixed(const DensityMatrix& rho) {
  require_two_qubits(rho.dims(), "concurrence_mixed");
  // The eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)) are the singular
  // values of sqrt(rho~) sqrt(rho); the SVD keeps the small ones at full
  // relative accuracy, which the eigenvalue route loses to sqrt noise.
  const ComplexMatrix root = la::sqrtm_psd(rho.matrix());
  const ComplexMatrix root_flip = la::sqrtm_psd(spin_flip(rho.matrix()));
  const auto vals = la::singular_values(root_flip * root);
  double c = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) c += (k == 0 ? vals[k] : -vals[k]);
  return {"concurrence", std::max(0.0, c), MeasureKind::Exact, "wootters spectrum"};
}

namespace {

double eof_from_concurrence(double c) {
  const double x = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
  return binary_entropy(x);
}

}  // namespace

MeasureResult eof_two_qubit(const DensityMatrix& rho) {
  const double c = concurrence_mixed(rho).value;
  return {"eof", eof_from_concurrence(c), MeasureKind::Exact, "wootters closed form"};
}

// --- convex roof ---

namespace {

// Entropy of entanglement of an unnormalized bipartite vector, scaled by its
// weight: returns ||v||^2 * E(v / ||v||).
double weighted_pure_entropy(const std::vector<cplx>& v, std::size_t da, std::size_t db) {
  const double w = kernels::nrm2sq(v.data(), v.size());
  if (w < 1e-30) return 0.0;
  if (da == 2) {
    // Closed-form spectrum of the 2x2 reduced Gram matrix.
    const double g00 = kernels::nrm2sq(v.data(), db);
    const double g11 = kernels::nrm2sq(v.data() + db, db);
    const cplx g01 = kernels::dotc(v.data(), v.data() + db, db);
    const double det = std::max(0.0, g00 * g11 - std::norm(g01));
    const double disc = std::sqrt(std::max(0.0, w * w - 4.0 * det));
    double e = 0.0;
    for (double lam : {(w + disc) / 2.0, (w - disc) / 2.0}) {
      const double p = lam / w;
      if (p > 1e-300) e -= p * std::log2(p);
    }
    return w * e;
  }
  // Reduced state on A of v/sqrt(w), times w: spectrum scaled by w.
  ComplexMatrix red(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx s = kernels::dotc(v.data() + j * db, v.data() + i * db, db);
      red(i, j) = s;
      red(j, i) = std::conj(s);
    }
  }
  const auto vals = la::eigh(red).values;
  double e = 0.0;
  for (double lam : vals) {
    const double p = lam / w;
    if (p > 1e-300) e -= p * std::log2(p);
  }
  return w * e;
}

struct RoofState {
  // Unnormalized ensemble vectors; sum of |v_i><v_i| equals rho.
  std::vector<std::vector<cplx>> vecs;
  std::size_t da = 0, db = 0;

  double objective() const {
    double s = 0.0;
    for (const auto& v : vecs) s += weighted_pure_entropy(v, da, db);
    return s;
  }
};

// Wirtinger gradient of the member functional f(v) = w log2(w) - sum_a
// lambda_a log2(lambda_a) with respect to conj(v): (log2 w) v - vec(L A),
// where A = reshape(v), M = A A^dagger = sum lambda_a u_a u_a^dagger and
// L = sum log2(lambda_a) u_a u_a^dagger.
std::vector<cplx> member_gradient(const std::vector<cplx>& v, std::size_t da, std::size_t db) {
  const double w = kernels::nrm2sq(v.data(), v.size());
  std::vector<cplx> g(v.size());
  if (w < 1e-30) return g;
  ComplexMatrix red(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx s = kernels::dotc(v.data() + j * db, v.data() + i * db, db);
      red(i, j) = s;
      red(j, i) = std::conj(s);
    }
  }
  const auto eig = la::eigh(red);
  const double logw = std::log2(w);
  for (std::size_t t = 0; t < v.size(); ++t) g[t] = logw * v[t];
  for (std::size_t a = 0; a < da; ++a) {
    const double lam = std::max(eig.values[a], 1e-18 * w);
    const double l = std::log2(lam);
    // (u_a u_a^dagger A) row i = u_a[i] * (u_a^dagger A).
    std::vector<cplx> ua(da);
    for (std::size_t i = 0; i < da; ++i) ua[i] = eig.vectors(i, a);
    std::vector<cplx> uA(db);
    for (std::size_t j = 0; j < db; ++j) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < da; ++i) s += std::conj(ua[i]) * v[i * db + j];
      uA[j] = s;
    }
    for (std::size_t i = 0; i < da; ++i) {
      const cplx c = l * ua[i];
      for (std::size_t j = 0; j < db; ++j) g[i * db + j] -= c * uA[j];
    }
  }
  return g;
}

// Solve (I - Om/2) U = (I + Om/2) by Gaussian elimination: the Cayley
// retraction of an anti-Hermitian direction onto U(m).
ComplexMatrix cayley(const ComplexMatrix& om) {
  const std::size_t m = om.rows();
  ComplexMatrix a(m, m), rhs(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = (i == j ? cplx{1.0} : cplx{}) - 0.5 * om(i, j);
      rhs(i, j) = (i == j ? cplx{1.0} : cplx{}) + 0.5 * om(i, j);
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(a(col, c), a(piv, c));
        std::swap(rhs(col, c), rhs(piv, c));
      }
    }
    const cplx d = a(col, col);
    for (std::size_t c = 0; c < m; ++c) {
      a(col, c) /= d;
      rhs(col, c) /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const cplx factor = a(r, col);
      if (factor == cplx{}) continue;
      for (std::size_t c = 0; c < m; ++c) {
        a(r, c) -= factor * a(col, c);
        rhs(r, c) -= factor * rhs(col, c);
      }
    }
  }
  return rhs;
}

// Joint refinement: gradient descent over the mixing unitary with Armijo
// backtracking on the Cayley retraction.
void roof_gradient_refine(RoofState& st, std::size_t max_steps) {
  const std::size_t m = st.vecs.size();
  const std::size_t d = st.vecs.front().size();
  double value = st.objective();
  for (std::size_t step = 0; step < max_steps; ++step) {
    // B_ij = <v_j | g_i>; the anti-Hermitian part drives the mixing.
    std::vector<std::vector<cplx>> grads(m);
    for (std::size_t i = 0; i < m; ++i) grads[i] = member_gradient(st.vecs[i], st.da, st.db);
    ComplexMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        b(i, j) = kernels::dotc(st.vecs[j].data(), grads[i].data(), d);
    ComplexMatrix dir(m, m);
    double dir_norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        dir(i, j) = 0.5 * (b(i, j) - std::conj(b(j, i)));
        dir_norm = std::max(dir_norm, std::abs(dir(i, j)));
      }
    }
    if (dir_norm < 1e-14) break;

    double eta = 1.0 / (dir_norm + 1e-30);
    bool improved = false;
    for (int bt = 0; bt < 25 && !improved; ++bt, eta *= 0.5) {
      ComplexMatrix om = dir;
      om *= cplx{-eta, 0.0};
      const ComplexMatrix u = cayley(om);
      std::vector<std::vector<cplx>> trial(m, std::vector<cplx>(d));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const cplx uij = u(i, j);
          if (uij != cplx{}) kernels::axpy(uij, st.vecs[j].data(), trial[i].data(), d);
        }
      double trial_value = 0.0;
      for (const auto& v : trial) trial_value += weighted_pure_entropy(v, st.da, st.db);
      if (trial_value < value - 1e-14) {
        st.vecs = std::move(trial);
        value = trial_value;
        improved = true;
      }
    }
    if (!improved) break;
  }
}

}  // namespace

MeasureResult eof_convex_roof_upper(const DensityMatrix& rho, const BipartiteSplit& split,
                                    const RoofBudget& budget, std::uint64_t seed) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  if (da > 4 || db > 4)
    throw std::domain_error("eof_convex_roof_upper: sides larger than 4 unsupported");

  const auto eig = la::eigh(merged.matrix());
  std::vector<std::vector<cplx>> base;  // phi_k = sqrt(mu_k) v_k
  const std::size_t d = merged.dim();
  for (std::size_t k = 0; k < d; ++k) {
    if (eig.values[k] < 1e-12) continue;
    std::vector<cplx> phi(d);
    const double r = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < d; ++i) phi[i] = r * eig.vectors(i, k);
    base.push_back(std::move(phi));
  }
  const std::size_t r = base.size();
  std::size_t m = budget.ensemble_size == 0 ? 2 * r : budget.ensemble_size;
  m = std::min(std::max<std::size_t>(m, r), d * d);

  auto rng = make_rng(seed);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<cplx>> best_vecs;

  for (std::size_t restart = 0; restart < std::max<std::size_t>(budget.restarts, 1); ++restart) {
    // Random isometry U (m x r): Gram-Schmidt of Gaussian columns.
    std::vector<std::vector<cplx>> cols(r, std::vector<cplx>(m));
    for (auto& c : cols) {
      for (auto& z : c) z = gaussian_cplx(rng);
    }
    for (std::size_t j = 0; j < r; ++j) {
      for (int round = 0; round < 2; ++round)
        for (std::size_t k = 0; k < j; ++k) {
          const cplx proj = kernels::dotc(cols[k].data(), cols[j].data(), m);
          kernels::axpy(-proj, cols[k].data(), cols[j].data(), m);
        }
      vnormalize(cols[j]);
    }

    RoofState st;
    st.da = da;
    st.db = db;
    st.vecs.assign(m, std::vector<cplx>(d));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < r; ++k)
        kernels::axpy(cols[k][i], base[k].data(), st.vecs[i].data(), d);

    double current = st.objective();
    // Pairwise 2x2 rotations; each pair keeps sum_i |v_i><v_i| = rho.
    auto pair_sweeps = [&](std::size_t max_sweeps) {
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
      double improved = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const double before = weighted_pure_entropy(st.vecs[i], da, db) +
                                weighted_pure_entropy(st.vecs[j], da, db);
          auto pair_cost = [&](double theta, double phi) {
            const double c = std::cos(theta), s = std::sin(theta);
            const cplx e{std::cos(phi), std::sin(phi)};
            std::vector<cplx> vi(d), vj(d);
            for (std::size_t t = 0; t < d; ++t) {
              vi[t] = c * st.vecs[i][t] + s * e * st.vecs[j][t];
              vj[t] = -s * std::conj(e) * st.vecs[i][t] + c * st.vecs[j][t];
            }
            return weighted_pure_entropy(vi, da, db) + weighted_pure_entropy(vj, da, db);
          };
          // Dense grid (the landscape has narrow basins), then coordinate
          // golden-section polish around the best grid point.
          constexpr int kGridT = 12, kGridP = 12;
          double bt = 0.0, bp = 0.0, bc = before;
          for (int gt = 0; gt < kGridT; ++gt) {
            for (int gp = 0; gp < kGridP; ++gp) {
              const double theta = (gt + 1) * (M_PI / 2.0) / (kGridT + 1);
              const double phi = gp * (2.0 * M_PI / kGridP);
              const double c2 = pair_cost(theta, phi);
              if (c2 < bc) {
                bc = c2;
                bt = theta;
                bp = phi;
              }
            }
          }
          if (bc < before - 1e-13) {
            const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
            auto polish = [&](bool along_theta, double span) {
              double lo = (along_theta ? bt : bp) - span;
              double hi = (along_theta ? bt : bp) + span;
              auto f = [&](double x) {
                return along_theta ? pair_cost(x, bp) : pair_cost(bt, x);
              };
              double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
              double f1 = f(x1), f2 = f(x2);
              for (int gs = 0; gs < 20; ++gs) {
                if (f1 < f2) {
                  hi = x2; x2 = x1; f2 = f1;
                  x1 = hi - golden * (hi - lo);
                  f1 = f(x1);
                } else {
                  lo = x1; x1 = x2; f1 = f2;
                  x2 = lo + golden * (hi - lo);
                  f2 = f(x2);
                }
              }
              const double x = f1 < f2 ? x1 : x2;
              const double fx = std::min(f1, f2);
              if (fx < bc) {
                bc = fx;
                (along_theta ? bt : bp) = x;
              }
            };
            double span_t = M_PI / (kGridT + 1), span_p = 2.0 * M_PI / kGridP;
            for (int round = 0; round < 5; ++round) {
              polish(true, span_t);
              polish(false, span_p);
              span_t *= 0.3;
              span_p *= 0.3;
            }
            // Apply the winning rotation.
            const double c = std::cos(bt), s = std::sin(bt);
            const cplx e{std::cos(bp), std::sin(bp)};
            for (std::size_t t = 0; t < d; ++t) {
              const cplx vi = st.vecs[i][t], vj = st.vecs[j][t];
              st.vecs[i][t] = c * vi + s * e * vj;
              st.vecs[j][t] = -s * std::conj(e) * vi + c * vj;
            }
            improved += before - bc;
          }
        }
      }
      current = st.objective();
      if (improved < 1e-11) break;
    }
    };

    // Alternate the pair moves with joint gradient refinement over the
    // mixing unitary; pair moves find the basin, the gradient polishes the
    // phase alignment the pairs cannot reach one at a time.
    for (int cycle = 0; cycle < 4; ++cycle) {
      pair_sweeps(budget.sweeps);
      roof_gradient_refine(st, 400);
      const double next = st.objective();
      if (current - next < 1e-11 && cycle > 0) {
        current = next;
        break;
      }
      current = next;
    }
    if (current < best) {
      best = current;
      best_vecs = st.vecs;
    }
  }

  // Report the achieving decomposition (weights and normalized members).
  std::ostringstream method;
  method.precision(17);
  method << "isometry mixing roof; decomposition=[";
  bool first = true;
  for (const auto& v : best_vecs) {
    const double w = kernels::nrm2sq(v.data(), v.size());
    if (w < 1e-12) continue;
    if (!first) method << ",";
    first = false;
    method << "{\"p\":" << w << ",\"state\":[";
    for (std::size_t t = 0; t < v.size(); ++t) {
      const cplx z = v[t] / std::sqrt(w);
      method << (t ? "," : "") << "[" << z.real() << "," << z.imag() << "]";
    }
    method << "]}";
  }
  method << "]";
  return {"eof_roof", best, MeasureKind::UpperBound, method.str()};
}

MeasureResult negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
  const ComplexMatrix pt = partial_transpose_b(rho, split);
  const auto vals = la::eigh(pt).values;
  double neg = 0.0;
  for (double v : vals)
    if (v < 0.0) neg -= v;
  return {"negativity", neg, MeasureKind::Exact, "partial transpose spectrum"};
}

MeasureResult log_negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
  const double n = negativity(rho, split).value;
  return {"log_negativity", std::log2(2.0 * n + 1.0), MeasureKind::Exact,
          "log2(2N+1) from negativity"};
}

// --- relative entropy of entanglement ---

namespace {

double tr_rho_log2_rho(const DensityMatrix& rho) {
  double sum = 0.0;
  for (double w : la::eigh(rho.matrix()).values) {
    if (w > 1e-15) sum += w * std::log2(w);
  }
  return sum;
}

// -tr(rho log2 sigma), +infinity when rho's support leaks outside sigma's.
double ree_cross_term(const DensityMatrix& rho, const ComplexMatrix& sigma) {
  const auto es = la::eigh(sigma);
  double tr_rho_log_sigma = 0.0;
  std::vector<cplx> col(rho.dim());
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    for (std::size_t i = 0; i < rho.dim(); ++i) col[i] = es.vectors(i, k);
    const auto rv = rho.matrix().apply(col);
    const double q = std::max(0.0, kernels::dotc(col.data(), rv.data(), col.size()).real());
    if (es.values[k] > 1e-15) {
      tr_rho_log_sigma += q * std::log2(es.values[k]);
    } else if (q > 1e-12) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return -tr_rho_log_sigma;
}

}  // namespace

double relative_entropy(const DensityMatrix& rho, const ComplexMatrix& sigma) {
  if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  return std::max(0.0, tr_rho_log2_rho(rho) + ree_cross_term(rho, sigma));
}

namespace {

struct ProductAtom {
  std::vector<cplx> a, b;
  double weight = 0.0;
};

ComplexMatrix atoms_to_matrix(const std::vector<ProductAtom>& atoms, std::size_t da,
                              std::size_t db) {
  const std::size_t d = da * db;
  ComplexMatrix sigma(d, d);
  std::vector<cplx> v(d);
  for (const auto& atom : atoms) {
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) v[i * db + j] = atom.a[i] * atom.b[j];
    for (std::size_t i = 0; i < d; ++i) {
      const cplx c = atom.weight * v[i];
      for (std::size_t j = 0; j < d; ++j) sigma(i, j) += c * std::conj(v[j]);
    }
  }
  return sigma;
}

// Ascent matrix G = d tr(rho ln sigma) / d sigma via the Daleckii-Krein
// divided differences in sigma's eigenbasis.  Minimizing S(rho||sigma) means
// maximizing tr(P G) over the admissible directions P.
ComplexMatrix ree_ascent_matrix(const DensityMatrix& rho, const ComplexMatrix& sigma) {
  const auto es = la::eigh(sigma);
  const std::size_t d = sigma.rows();
  const ComplexMatrix& v = es.vectors;
  const ComplexMatrix rt = v.adjoint() * (rho.matrix() * v);
  auto clamp = [](double s) { return std::max(s, 1e-18); };
  ComplexMatrix gt(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const double sa = clamp(es.values[a]);
    for (std::size_t b = 0; b < d; ++b) {
      const double sb = clamp(es.values[b]);
      double g;
      if (std::abs(sa - sb) < 1e-14 * (sa + sb)) {
        g = 2.0 / (sa + sb);
      } else {
        g = (std::log(sa) - std::log(sb)) / (sa - sb);
      }
      gt(a, b) = g * rt(a, b);
    }
  }
  return v * gt * v.adjoint();
}

// Best product state for max <a,b|G|a,b> by alternating top-eigenvector
// ascent from random starts.
ProductAtom ree_best_product(const ComplexMatrix& g, std::size_t da, std::size_t db,
                             std::size_t restarts, Rng& rng) {
  auto top_eigvec = [](const ComplexMatrix& m, double& value) {
    const auto eig = la::eigh(m);
    value = eig.values.front();
    std::vector<cplx> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = eig.vectors(i, 0);
    return v;
  };
  ProductAtom best;
  double best_val = -1e300;
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    std::vector<cplx> a = haar_pure(DimensionList({da}), rng).amplitudes();
    std::vector<cplx> b = haar_pure(DimensionList({db}), rng).amplitudes();
    double value = -1e300;
    for (int iter = 0; iter < 100; ++iter) {
      // <a (x) b| G |a' (x) b> as a matrix on A, then the B-side mirror.
      ComplexMatrix ma(da, da);
      for (std::size_t p = 0; p < da; ++p)
        for (std::size_t q = 0; q < da; ++q) {
          cplx s = 0.0;
          for (std::size_t mu = 0; mu < db; ++mu) {
            const cplx* row = g.row(p * db + mu) + q * db;
            for (std::size_t nu = 0; nu < db; ++nu) s += std::conj(b[mu]) * row[nu] * b[nu];
          }
          ma(p, q) = s;
        }
      double va = 0.0;
      a = top_eigvec(ma, va);
      ComplexMatrix mb(db, db);
      for (std::size_t mu = 0; mu < db; ++mu)
        for (std::size_t nu = 0; nu < db; ++nu) {
          cplx s = 0.0;
          for (std::size_t p = 0; p < da; ++p) {
            const cplx* row = g.row(p * db + mu);
            for (std::size_t q = 0; q < da; ++q) s += std::conj(a[p]) * row[q * db + nu] * a[q];
          }
          mb(mu, nu) = s;
        }
      double vb = 0.0;
      b = top_eigvec(mb, vb);
      if (vb - value < 1e-13) {
        value = vb;
        break;
      }
      value = vb;
    }
    if (value > best_val) {
      best_val = value;
      best.a = a;
      best.b = b;
    }
  }
  best.weight = 0.0;
  return best;
}

// Objective with the state-only term precomputed once per solve.
double ree_value_cached(double rho_term, const DensityMatrix& rho, const ComplexMatrix& sigma) {
  return std::max(0.0, rho_term + ree_cross_term(rho, sigma));
}

// Exponentiated-gradient refit of the mixture weights over a fixed atom set.
void ree_refit_weights(double rho_term, const DensityMatrix& rho,
                       std::vector<ProductAtom>& atoms, std::size_t da, std::size_t db,
                       std::size_t steps) {
  if (atoms.empty()) return;
  const std::size_t d = da * db;
  double value = ree_value_cached(rho_term, rho, atoms_to_matrix(atoms, da, db));
  double eta = 1.0;
  std::vector<cplx> v(d);
  std::vector<double> weights_backup(atoms.size());
  for (std::size_t step = 0; step < steps; ++step) {
    const ComplexMatrix sigma = atoms_to_matrix(atoms, da, db);
    const ComplexMatrix g = ree_ascent_matrix(rho, sigma);
    // Ascent coefficient per atom: tr(P_k G).
    std::vector<double> grad(atoms.size());
    double gmax = -1e300;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) v[i * db + j] = atoms[k].a[i] * atoms[k].b[j];
      const auto gv = g.apply(v);
      grad[k] = kernels::dotc(v.data(), gv.data(), d).real();
      gmax = std::max(gmax, grad[k]);
    }
    // Multiplicative update toward atoms with larger ascent coefficients.
    for (std::size_t k = 0; k < atoms.size(); ++k) weights_backup[k] = atoms[k].weight;
    bool improved = false;
    for (int bt = 0; bt < 8 && !improved; ++bt) {
      double z = 0.0;
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        atoms[k].weight = weights_backup[k] * std::exp(eta * (grad[k] - gmax));
        z += atoms[k].weight;
      }
      if (z <= 0.0) {
        eta *= 0.5;
        continue;
      }
      for (auto& a : atoms) a.weight /= z;
      const double cand_value =
          ree_value_cached(rho_term, rho, atoms_to_matrix(atoms, da, db));
      if (cand_value < value - 1e-14) {
        value = cand_value;
        improved = true;
        eta *= 1.3;
      } else {
        eta *= 0.5;
      }
    }
    if (!improved) {
      for (std::size_t k = 0; k < atoms.size(); ++k) atoms[k].weight = weights_backup[k];
      if (eta < 1e-12) break;
    }
  }
}

}  // namespace

MeasureResult relative_entropy_of_entanglement_upper(const DensityMatrix& rho,
                                                     const BipartiteSplit& split,
                                                     const ReeBudget& budget,
                                                     std::uint64_t seed) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  if (da > 3 || db > 3)
    throw std::domain_error("relative_entropy_of_entanglement_upper: sides above 3 unsupported");
  const std::size_t d = da * db;
  const std::size_t max_atoms = d * d;

  // Start from the maximally mixed state: a product-basis mixture.
  std::vector<ProductAtom> atoms;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      ProductAtom atom;
      atom.a.assign(da, cplx{});
      atom.b.assign(db, cplx{});
      atom.a[i] = 1.0;
      atom.b[j] = 1.0;
      atom.weight = 1.0 / static_cast<double>(d);
      atoms.push_back(std::move(atom));
    }
  }

  auto rng = make_rng(seed);
  const double rho_term = tr_rho_log2_rho(merged);
  double value = ree_value_cached(rho_term, merged, atoms_to_matrix(atoms, da, db));
  std::size_t stagnant = 0;

  for (std::size_t it = 0; it < budget.iterations; ++it) {
    // End game: near the separable floor the descent flattens; denser
    // refits and extra subproblem restarts pay for themselves on the small
    // systems where the reported bound is held to 1e-4.
    const bool endgame = value < 5e-3 && d <= 4;
    const std::size_t refit_every = endgame ? 10 : 20;
    const std::size_t refit_steps = endgame ? 3 * budget.weight_steps : budget.weight_steps;
    const std::size_t lmo_restarts = budget.lmo_restarts + (endgame ? 6 : 0);

    const ComplexMatrix sigma = atoms_to_matrix(atoms, da, db);
    const ComplexMatrix g = ree_ascent_matrix(merged, sigma);
    ProductAtom candidate = ree_best_product(g, da, db, lmo_restarts, rng);

    // Line search on sigma' = (1 - t) sigma + t P, evaluated on matrices.
    ProductAtom unit_candidate = candidate;
    unit_candidate.weight = 1.0;
    const ComplexMatrix p_mat = atoms_to_matrix({unit_candidate}, da, db);
    auto eval = [&](double t) {
      ComplexMatrix s = sigma;
      s *= cplx{1.0 - t, 0.0};
      ComplexMatrix ps = p_mat;
      ps *= cplx{t, 0.0};
      s += ps;
      return ree_value_cached(rho_term, merged, s);
    };
    double lo = 0.0, hi = 0.999;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int gs = 0; gs < 20; ++gs) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - golden * (hi - lo);
        f1 = eval(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + golden * (hi - lo);
        f2 = eval(x2);
      }
    }
    const double t_best = f1 < f2 ? x1 : x2;
    const double f_best = std::min(f1, f2);
    if (f_best < value - 1e-12 && t_best > 1e-14) {
      for (auto& a : atoms) a.weight *= (1.0 - t_best);
      candidate.weight = t_best;
      atoms.push_back(candidate);
      value = f_best;
      stagnant = 0;
    } else {
      ++stagnant;
    }

    // Periodic cleanup: refit weights over the collected atoms and prune.
    const bool last = it + 1 == budget.iterations || stagnant >= 14;
    if ((it + 1) % refit_every == 0 || last) {
      const double before = value;
      ree_refit_weights(rho_term, merged, atoms, da, db, refit_steps);
      std::erase_if(atoms, [](const ProductAtom& a) { return a.weight < 1e-12; });
      while (atoms.size() > max_atoms) {
        auto smallest = std::min_element(
            atoms.begin(), atoms.end(),
            [](const ProductAtom& x, const ProductAtom& y) { return x.weight < y.weight; });
        atoms.erase(smallest);
        double z = 0.0;
        for (const auto& a : atoms) z += a.weight;
        for (auto& a : atoms) a.weight /= z;
        ree_refit_weights(rho_term, merged, atoms, da, db, refit_steps);
      }
      value = ree_value_cached(rho_term, merged, atoms_to_matrix(atoms, da, db));
      if (before - value > 1e-12) stagnant = 0;
    }
    if (value < 1e-9) break;        // already at the separable floor
    if (stagnant >= 14 && last) break;  // stationary: gradient step and refit both flat
  }
  // One long final refit squeezes out the residual weight misallocation.
  ree_refit_weights(rho_term, merged, atoms, da, db, 4 * budget.weight_steps);
  std::erase_if(atoms, [](const ProductAtom& a) { return a.weight < 1e-14; });
  value = ree_value_cached(rho_term, merged, atoms_to_matrix(atoms, da, db));

  std::ostringstream method;
  method.precision(17);
  method << "conditional gradient over product mixtures; sigma=[";
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) method << ",";
    method << "{\"w\":" << atoms[k].weight << ",\"a\":[";
    for (std::size_t i = 0; i < da; ++i)
      method << (i ? "," : "") << "[" << atoms[k].a[i].real() << "," << atoms[k].a[i].imag()
             << "]";
    method << "],\"b\":[";
    for (std::size_t j = 0; j < db; ++j)
      method << (j ? "," : "") << "[" << atoms[k].b[j].real() << "," << atoms[k].b[j].imag()
             << "]";
    method << "]}";
  }
  method << "]";
  return {"ree", value, MeasureKind::UpperBound, method.str()};
}

}  // namespace entkit
