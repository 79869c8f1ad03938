#include "entkit/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"

namespace entkit {

WitnessOperator::WitnessOperator(ComplexMatrix m, DimensionList d,
                                 std::optional<std::pair<ComplexMatrix, ComplexMatrix>> dec)
    : matrix(std::move(m)), dims(std::move(d)), decomposition(std::move(dec)) {
  if (!matrix.square() || matrix.rows() != dims.total())
    throw std::invalid_argument("WitnessOperator: shape does not match dims");
  if (!matrix.is_hermitian(tol::herm))
    throw std::invalid_argument("WitnessOperator: matrix is not Hermitian");
  if (decomposition) {
    const auto& [p, q] = *decomposition;
    if (la::eigh(p).values.back() < -tol::psd || la::eigh(q).values.back() < -tol::psd)
      throw std::invalid_argument("WitnessOperator: decomposition parts must be PSD");
    const DensityMatrix qd = DensityMatrix::trusted(q, dims);
    ComplexMatrix rebuilt = p;
    rebuilt += partial_transpose(qd, 0);
    rebuilt -= matrix;
    if (rebuilt.max_abs() > tol::recon)
      throw std::invalid_argument("WitnessOperator: decomposition does not rebuild W");
  }
}

double witness_value(const WitnessOperator& w, const DensityMatrix& rho) {
  if (rho.dim() != w.matrix.rows())
    throw std::invalid_argument("witness_value: dimension mismatch");
  return expectation_real(rho, w.matrix, 1e-10);
}

WitnessOperator witness_from_ppt_entangled_direction(const DensityMatrix& q) {
  ComplexMatrix w = partial_transpose(q, 0);
  ComplexMatrix zero(w.rows(), w.cols());
  return WitnessOperator(std::move(w), q.dims(), std::make_pair(zero, q.matrix()));
}

namespace {

ComplexMatrix side_a_sandwich(const ComplexMatrix& m, const std::vector<cplx>& f,
                              std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < da; ++b) {
      cplx s = 0.0;
      for (std::size_t mu = 0; mu < db; ++mu) {
        const cplx* row = m.row(a * db + mu) + b * db;
        for (std::size_t nu = 0; nu < db; ++nu) s += std::conj(f[mu]) * row[nu] * f[nu];
      }
      out(a, b) = s;
    }
  }
  return out;
}

ComplexMatrix side_b_sandwich(const ComplexMatrix& m, const std::vector<cplx>& e,
                              std::size_t da, std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t mu = 0; mu < db; ++mu) {
    for (std::size_t nu = 0; nu < db; ++nu) {
      cplx s = 0.0;
      for (std::size_t a = 0; a < da; ++a) {
        const cplx* row = m.row(a * db + mu);
        for (std::size_t b = 0; b < da; ++b) s += std::conj(e[a]) * row[b * db + nu] * e[b];
      }
      out(mu, nu) = s;
    }
  }
  return out;
}

std::vector<cplx> smallest_eigvec(const ComplexMatrix& m, double& value) {
  const auto eig = la::eigh(m);
  const std::size_t n = m.rows();
  value = eig.values.back();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, n - 1);
  return v;
}

}  // namespace

double witness_product_floor(const WitnessOperator& w, std::size_t restarts, std::uint64_t seed) {
  if (w.dims.parties() != 2)
    throw std::invalid_argument("witness_product_floor: bipartite witness required");
  const std::size_t da = w.dims[0], db = w.dims[1];
  auto rng = make_rng(seed);
  double best = 1e300;
  for (std::size_t r = 0; r < restarts; ++r) {
    std::vector<cplx> e = haar_pure(DimensionList({da}), rng).amplitudes();
    std::vector<cplx> f = haar_pure(DimensionList({db}), rng).amplitudes();
    double value = 1e300;
    for (int iter = 0; iter < 500; ++iter) {
      double ve = 0.0, vf = 0.0;
      e = smallest_eigvec(side_a_sandwich(w.matrix, f, da, db), ve);
      f = smallest_eigvec(side_b_sandwich(w.matrix, e, da, db), vf);
      if (value - vf < 1e-14) {
        value = vf;
        break;
      }
      value = vf;
    }
    best = std::min(best, value);
  }
  return best;
}

ComplexMatrix cj_operator_to_map(const MapAsOperator& e, const ComplexMatrix& rho_b) {
  if (!rho_b.square() || rho_b.rows() != e.dim_b)
    throw std::invalid_argument("cj_operator_to_map: input dimension mismatch");
  if (e.op.rows() != e.dim_b * e.dim_c)
    throw std::invalid_argument("cj_operator_to_map: operator shape mismatch");
  // tr_B(E rho^{T_B}): eps(rho)[c1, c2] = sum_{k l} E[(k c1), (l c2)] rho[k, l].
  ComplexMatrix out(e.dim_c, e.dim_c);
  for (std::size_t c1 = 0; c1 < e.dim_c; ++c1) {
    for (std::size_t c2 = 0; c2 < e.dim_c; ++c2) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < e.dim_b; ++k)
        for (std::size_t l = 0; l < e.dim_b; ++l)
          s += e.op(k * e.dim_c + c1, l * e.dim_c + c2) * rho_b(k, l);
      out(c1, c2) = s;
    }
  }
  return out;
}

MapAsOperator cj_map_to_operator(const std::vector<ComplexMatrix>& unit_images,
                                 std::size_t dim_b) {
  if (unit_images.size() != dim_b * dim_b)
    throw std::invalid_argument("cj_map_to_operator: need dim_b^2 matrix-unit images");
  const std::size_t dim_c = unit_images.front().rows();
  for (const auto& img : unit_images) {
    if (!img.square() || img.rows() != dim_c)
      throw std::invalid_argument("cj_map_to_operator: inconsistent image dimensions");
  }
  MapAsOperator e;
  e.dim_b = dim_b;
  e.dim_c = dim_c;
  e.op = ComplexMatrix(dim_b * dim_c, dim_b * dim_c);
  for (std::size_t i = 0; i < dim_b; ++i) {
    for (std::size_t j = 0; j < dim_b; ++j) {
      const ComplexMatrix& img = unit_images[i * dim_b + j];
      for (std::size_t c1 = 0; c1 < dim_c; ++c1)
        for (std::size_t c2 = 0; c2 < dim_c; ++c2)
          e.op(i * dim_c + c1, j * dim_c + c2) = img(c1, c2);
    }
  }
  return e;
}

ComplexMatrix pauli_dot(const std::array<double, 3>& n) {
  ComplexMatrix m(2, 2);
  m(0, 0) = n[2];
  m(1, 1) = -n[2];
  m(0, 1) = cplx{n[0], -n[1]};
  m(1, 0) = cplx{n[0], n[1]};
  return m;
}

void CHSHSetting::validate() const {
  for (const auto& v : {a, a_prime, b, b_prime}) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(n - 1.0) > 1e-12)
      throw std::invalid_argument("CHSHSetting: directions must be unit vectors");
  }
}

std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho) {
  if (!(rho.dims() == DimensionList({2, 2})))
    throw std::invalid_argument("correlation_matrix: two-qubit state required");
  std::array<std::array<double, 3>, 3> t{};
  const std::array<std::array<double, 3>, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int i = 0; i < 3; ++i) {
    const ComplexMatrix si = pauli_dot(axes[i]);
    for (int j = 0; j < 3; ++j) {
      const ComplexMatrix sj = pauli_dot(axes[j]);
      t[i][j] = expectation_real(rho, ComplexMatrix::kron(si, sj));
    }
  }
  return t;
}

namespace {

double correlation(const std::array<std::array<double, 3>, 3>& t,
                   const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i] * t[i][j] * b[j];
  return s;
}

std::array<double, 3> apply_t(const std::array<std::array<double, 3>, 3>& t,
                              const std::array<double, 3>& b) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += t[i][j] * b[j];
  return out;
}

std::array<double, 3> apply_tt(const std::array<std::array<double, 3>, 3>& t,
                               const std::array<double, 3>& a) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[j] += a[i] * t[i][j];
  return out;
}

bool normalize3(std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n < 1e-14) return false;
  for (double& x : v) x /= n;
  return true;
}

std::array<double, 3> random_dir(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<double, 3> v{g(rng), g(rng), g(rng)};
  while (!normalize3(v)) v = {g(rng), g(rng), g(rng)};
  return v;
}

}  // namespace

double chsh_value(const DensityMatrix& rho, const CHSHSetting& s) {
  s.validate();
  const auto t = correlation_matrix(rho);
  return correlation(t, s.a, s.b) + correlation(t, s.a, s.b_prime) +
         correlation(t, s.a_prime, s.b) - correlation(t, s.a_prime, s.b_prime);
}

CHSHMaximum chsh_maximize(const DensityMatrix& rho, std::size_t restarts, std::uint64_t seed) {
  const auto t = correlation_matrix(rho);
  auto rng = make_rng(seed);
  CHSHMaximum best;
  best.value = -1e300;
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    CHSHSetting s{random_dir(rng), random_dir(rng), random_dir(rng), random_dir(rng)};
    double value = -1e300;
    for (int sweep = 0; sweep < 500; ++sweep) {
      // B = a.T(b+b') + a'.T(b-b'); each factor has a closed-form optimum.
      std::array<double, 3> bsum{}, bdiff{};
      for (int i = 0; i < 3; ++i) {
        bsum[i] = s.b[i] + s.b_prime[i];
        bdiff[i] = s.b[i] - s.b_prime[i];
      }
      auto ta = apply_t(t, bsum);
      if (normalize3(ta)) s.a = ta;
      auto tap = apply_t(t, bdiff);
      if (normalize3(tap)) s.a_prime = tap;

      std::array<double, 3> asum{}, adiff{};
      for (int i = 0; i < 3; ++i) {
        asum[i] = s.a[i] + s.a_prime[i];
        adiff[i] = s.a[i] - s.a_prime[i];
      }
      auto tb = apply_tt(t, asum);
      if (normalize3(tb)) s.b = tb;
      auto tbp = apply_tt(t, adiff);
      if (normalize3(tbp)) s.b_prime = tbp;

      const double next = correlation(t, s.a, s.b) + correlation(t, s.a, s.b_prime) +
                          correlation(t, s.a_prime, s.b) - correlation(t, s.a_prime, s.b_prime);
      if (next - value < 1e-10) {
        value = next;
        break;
      }
      value = next;
    }
    if (value > best.value) {
      best.value = value;
      best.setting = s;
    }
  }
  return best;
}

}  // namespace entkit
