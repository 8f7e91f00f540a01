#include "freeconv/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "freeconv/parallel.hpp"
#include "freeconv/rng.hpp"

namespace freeconv {

namespace {

// All randomness of one sample flows through one Stream in a pinned order, so
// a (seed, index) pair fully determines the draw regardless of thread count.
struct Stream {
  std::mt19937_64 eng;
  std::normal_distribution<double> normal{0.0, 1.0};

  Stream(std::uint64_t seed, std::uint64_t index) : eng(engine_for(seed, index)) {}

  double gauss() { return normal(eng); }
  double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<int>(mean)(eng);
  }
};

// Standard Gaussian Hermitian: N(0,1) diagonal, (g1 + i g2)/sqrt(2) above it.
Matrix gaussian_hermitian(int N, Stream& s) {
  Matrix h(N, N);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < N; ++i) {
    h(i, i) = s.gauss();
    for (int j = i + 1; j < N; ++j) {
      double re = s.gauss();
      double im = s.gauss();
      h(i, j) = cd(re * inv_sqrt2, im * inv_sqrt2);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

Eigen::VectorXcd uniform_unit_vector(int N, Stream& s) {
  Eigen::VectorXcd u(N);
  double nrm = 0.0;
  do {
    for (int i = 0; i < N; ++i) u(i) = cd(s.gauss(), s.gauss());
    nrm = u.norm();
  } while (nrm == 0.0);
  return u / nrm;
}

std::size_t pick_atom(const AtomicMeasure& law, double mass, Stream& s) {
  double x = s.uniform01() * mass;
  double acc = 0.0;
  const auto& atoms = law.atoms();
  for (std::size_t j = 0; j + 1 < atoms.size(); ++j) {
    acc += atoms[j].weight;
    if (x < acc) return j;
  }
  return atoms.size() - 1;
}

Matrix exp_i_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const int n = static_cast<int>(h.rows());
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix polar_unitary(const Matrix& u) {
  Eigen::JacobiSVD<Matrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

struct JumpEvent {
  cd zeta;
  Eigen::VectorXcd u;
};

struct Segment {
  Matrix exponent;            // Hermitian increment including the drift
  int jump = -1;              // jump applied at the right end, -1 if none
  bool fine_boundary = false; // right end lies on the fine grid
  bool coarse_boundary = false;
};

struct UnitaryPath {
  std::vector<Segment> segments;
  std::vector<JumpEvent> jumps;
};

// The triplet drift y0 is stated against the sin-truncated jump compensation,
// so the simulated drift must subtract sum_j w_j sin(theta_j); without it the
// first moment comes out e^{i sum w sin(theta)} too large.
double compensated_drift(const UnitaryModel& m) {
  double y0 = m.y0;
  for (const Atom& at : m.jump_law.atoms()) y0 -= at.weight * std::sin(at.location);
  return y0;
}

// Draw order is pinned: jump count, jump times (then sorted), per-jump marks
// in time order, then one Gaussian block per refined segment in time order.
// The refined grid is the fine grid united with the jump times; a coarse
// boundary is every coarse_every-th fine grid point.
UnitaryPath draw_path(const UnitaryModel& m, Stream& s, int fine_steps, int coarse_every) {
  const int N = m.N;
  UnitaryPath path;

  const double mass = m.jump_law.total_mass();
  const int jump_count = s.poisson(N * mass);
  std::vector<double> times(jump_count);
  for (int p = 0; p < jump_count; ++p) times[p] = s.uniform01();
  std::sort(times.begin(), times.end());
  path.jumps.reserve(jump_count);
  for (int p = 0; p < jump_count; ++p) {
    std::size_t j = pick_atom(m.jump_law, mass, s);
    path.jumps.push_back({m.jump_law.circle_point(j), uniform_unit_vector(N, s)});
  }

  struct Boundary {
    double time;
    int jump;
    int grid_k;
  };
  std::vector<Boundary> bounds;
  bounds.reserve(static_cast<std::size_t>(fine_steps) + jump_count);
  int p = 0;
  for (int k = 1; k <= fine_steps; ++k) {
    double tk = static_cast<double>(k) / fine_steps;
    for (; p < jump_count && times[p] < tk; ++p) bounds.push_back({times[p], p, -1});
    bounds.push_back({tk, -1, k});
  }
  for (; p < jump_count; ++p) bounds.push_back({times[p], p, -1});

  const double y0 = compensated_drift(m);
  const Matrix id = Matrix::Identity(N, N);
  path.segments.reserve(bounds.size());
  double prev = 0.0;
  for (const Boundary& b : bounds) {
    double len = b.time - prev;
    prev = b.time;
    Matrix h = gaussian_hermitian(N, s);
    double g = s.gauss();
    double tr = h.trace().real() / N;
    Segment seg;
    seg.exponent = std::sqrt(m.alpha * len) * (h - tr * id) +
                   (y0 * len + std::sqrt(m.beta * len / N) * g) * id;
    seg.jump = b.jump;
    seg.fine_boundary = b.grid_k >= 0;
    seg.coarse_boundary = b.grid_k >= 0 && b.grid_k % coarse_every == 0;
    path.segments.push_back(std::move(seg));
  }
  return path;
}

// Left-to-right product of exponentials and jump factors. Flushing only at
// coarse boundaries sums consecutive Gaussian increments first, which has
// exactly the law of a native coarse-grid run.
Matrix assemble(const UnitaryPath& path, int N, bool coarse) {
  Matrix u = Matrix::Identity(N, N);
  Matrix acc = Matrix::Zero(N, N);
  int mults = 0;
  auto bump = [&] {
    if (++mults % 32 == 0) u = polar_unitary(u);
  };
  auto flush = [&] {
    if (!acc.isZero(0.0)) {
      u = u * exp_i_hermitian(acc);
      acc.setZero();
      bump();
    }
  };
  for (const Segment& seg : path.segments) {
    acc += seg.exponent;
    if (seg.jump >= 0) {
      flush();
      const JumpEvent& ev = path.jumps[seg.jump];
      u = u * (Matrix::Identity(N, N) + (ev.zeta - 1.0) * (ev.u * ev.u.adjoint()));
      bump();
    } else if (coarse ? seg.coarse_boundary : seg.fine_boundary) {
      flush();
    }
  }
  flush();
  return u;
}

void pin_hermitian(Matrix& m) {
  const int N = static_cast<int>(m.rows());
  for (int i = 0; i < N; ++i) {
    m(i, i) = cd(m(i, i).real(), 0.0);
    for (int j = i + 1; j < N; ++j) m(j, i) = std::conj(m(i, j));
  }
}

void check_config(std::uint64_t n_samples, int steps) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (steps < 1) throw std::invalid_argument("brownian_steps must be >= 1");
}

// Compensated (Kahan) sums keep the reduction error at a few ulps regardless
// of the sample count; the loop stays sequential so results do not depend on
// the thread count that produced the slots.
EmpiricalMoments reduce_slots(const std::vector<cd>& slots, std::uint64_t n, std::size_t k) {
  EmpiricalMoments out;
  out.n_samples = n;
  out.estimates.resize(k);
  out.stderrs.resize(k);
  for (std::size_t st = 0; st < k; ++st) {
    cd sum = 0.0, carry = 0.0;
    double sq = 0.0, sq_carry = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const cd v = slots[i * k + st];
      const cd y = v - carry;
      const cd t = sum + y;
      carry = (t - sum) - y;
      sum = t;
      const double ys = std::norm(v) - sq_carry;
      const double ts = sq + ys;
      sq_carry = (ts - sq) - ys;
      sq = ts;
    }
    cd mean = sum / static_cast<double>(n);
    double var = 0.0;
    if (n > 1) var = std::max(0.0, (sq - n * std::norm(mean)) / static_cast<double>(n - 1));
    out.estimates[st] = mean;
    out.stderrs[st] = std::sqrt(var / static_cast<double>(n));
  }
  return out;
}

// Normalized trace powers t_k = (1/N) Tr(x^k), k = 1..kmax.
std::vector<cd> trace_powers(const Matrix& x, int kmax) {
  const double N = static_cast<double>(x.rows());
  std::vector<cd> t(static_cast<std::size_t>(kmax) + 1, cd(0.0));
  if (kmax < 1) return t;
  Matrix p = x;
  for (int k = 1; k <= kmax; ++k) {
    t[k] = p.trace() / N;
    if (k < kmax) p = p * x;
  }
  return t;
}

int max_entry(const std::vector<std::vector<int>>& cycle_types) {
  int kmax = 0;
  for (const auto& ct : cycle_types) {
    for (int k : ct) {
      if (k < 1) throw std::invalid_argument("cycle_type entries must be >= 1");
      kmax = std::max(kmax, k);
    }
  }
  return kmax;
}

void fill_products(const std::vector<cd>& t, const std::vector<std::vector<int>>& cycle_types,
                   cd* out) {
  for (std::size_t c = 0; c < cycle_types.size(); ++c) {
    cd prod = 1.0;
    for (int k : cycle_types[c]) prod *= t[k];
    out[c] = prod;
  }
}

}  // namespace

Matrix sample_hermitian(const HermitianModel& m, std::uint64_t seed, std::uint64_t index) {
  const int N = m.N;
  Stream s(seed, index);

  Matrix h = gaussian_hermitian(N, s);
  double t = h.trace().real() / N;
  const Matrix id = Matrix::Identity(N, N);
  Matrix out = std::sqrt(m.a / (N + 1.0)) * (h - t * id) + std::sqrt(m.a) * t * id;

  // Triplet drift is stated against jumps compensated inside [-1, 1].
  double compensator = 0.0;
  for (const Atom& at : m.jump_law.atoms())
    if (std::abs(at.location) <= 1.0) compensator += at.weight * at.location;
  out += (m.eta - compensator) * id;

  const double mass = m.jump_law.total_mass();
  int jumps = s.poisson(N * mass);
  for (int p = 0; p < jumps; ++p) {
    std::size_t j = pick_atom(m.jump_law, mass, s);
    Eigen::VectorXcd u = uniform_unit_vector(N, s);
    out += m.jump_law.atoms()[j].location * (u * u.adjoint());
  }

  pin_hermitian(out);
  return out;
}

Matrix sample_unitary(const UnitaryModel& m, std::uint64_t seed, std::uint64_t index, int steps) {
  if (steps < 1) throw std::invalid_argument("brownian_steps must be >= 1");
  Stream s(seed, index);
  if (m.haar) return haar_unitary(m.N, s.eng);
  if (m.alpha == 0.0 && m.beta == 0.0 && m.jump_law.is_zero())
    return std::polar(1.0, m.y0) * Matrix::Identity(m.N, m.N);
  UnitaryPath path = draw_path(m, s, steps, 1);
  return assemble(path, m.N, /*coarse=*/false);
}

std::pair<Matrix, Matrix> sample_unitary_coupled(const UnitaryModel& m, std::uint64_t seed,
                                                 std::uint64_t index, int coarse_steps) {
  if (coarse_steps < 1) throw std::invalid_argument("brownian_steps must be >= 1");
  Stream s(seed, index);
  if (m.haar) {
    Matrix u = haar_unitary(m.N, s.eng);
    return {u, u};
  }
  if (m.alpha == 0.0 && m.beta == 0.0 && m.jump_law.is_zero()) {
    Matrix u = std::polar(1.0, m.y0) * Matrix::Identity(m.N, m.N);
    return {u, u};
  }
  UnitaryPath path = draw_path(m, s, 2 * coarse_steps, 2);
  Matrix coarse = assemble(path, m.N, /*coarse=*/true);
  Matrix fine = assemble(path, m.N, /*coarse=*/false);
  return {coarse, fine};
}

Matrix haar_unitary(int N, std::mt19937_64& eng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix z(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double re = nd(eng);
      double im = nd(eng);
      z(i, j) = cd(re * inv_sqrt2, im * inv_sqrt2);
    }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  // Fix the gauge so the law is exactly Haar, not merely QR of Ginibre.
  for (int j = 0; j < N; ++j) {
    cd d = qr.matrixQR()(j, j);
    double ad = std::abs(d);
    q.col(j) *= (ad == 0.0) ? cd(1.0, 0.0) : d / ad;
  }
  return q;
}

Matrix sample_hermitian(const SampleConfig& cfg, std::uint64_t index) {
  check_config(cfg.n_samples, cfg.brownian_steps);
  if (!std::holds_alternative<HermitianModel>(cfg.model))
    throw std::invalid_argument("config does not hold a HermitianModel");
  return sample_hermitian(std::get<HermitianModel>(cfg.model), cfg.seed, index);
}

Matrix sample_unitary(const SampleConfig& cfg, std::uint64_t index) {
  check_config(cfg.n_samples, cfg.brownian_steps);
  if (!std::holds_alternative<UnitaryModel>(cfg.model))
    throw std::invalid_argument("config does not hold a UnitaryModel");
  return sample_unitary(std::get<UnitaryModel>(cfg.model), cfg.seed, index, cfg.brownian_steps);
}

EmpiricalMoments empirical_trace_products(const SampleConfig& cfg,
                                          const std::vector<int>& cycle_type) {
  check_config(cfg.n_samples, cfg.brownian_steps);
  std::vector<std::vector<int>> types{cycle_type};
  const int kmax = max_entry(types);
  std::vector<cd> slots(cfg.n_samples);
  parallel_for(0, static_cast<std::int64_t>(cfg.n_samples), [&](std::int64_t i) {
    Matrix x;
    if (std::holds_alternative<HermitianModel>(cfg.model))
      x = sample_hermitian(std::get<HermitianModel>(cfg.model), cfg.seed, i);
    else
      x = sample_unitary(std::get<UnitaryModel>(cfg.model), cfg.seed, i, cfg.brownian_steps);
    fill_products(trace_powers(x, kmax), types, &slots[i]);
  });
  return reduce_slots(slots, cfg.n_samples, 1);
}

EmpiricalMoments empirical_cycle_products(const UnitaryModel& m,
                                          const std::vector<std::vector<int>>& cycle_types,
                                          std::uint64_t n_samples, int steps, std::uint64_t seed) {
  check_config(n_samples, steps);
  const int kmax = max_entry(cycle_types);
  const std::size_t k = cycle_types.size();
  std::vector<cd> slots(n_samples * k);
  parallel_for(0, static_cast<std::int64_t>(n_samples), [&](std::int64_t i) {
    Matrix u = sample_unitary(m, seed, i, steps);
    fill_products(trace_powers(u, kmax), cycle_types, slots.data() + i * k);
  });
  return reduce_slots(slots, n_samples, k);
}

std::pair<EmpiricalMoments, EmpiricalMoments> empirical_cycle_products_coupled(
    const UnitaryModel& m, const std::vector<std::vector<int>>& cycle_types,
    std::uint64_t n_samples, int coarse_steps, std::uint64_t seed) {
  check_config(n_samples, coarse_steps);
  const int kmax = max_entry(cycle_types);
  const std::size_t k = cycle_types.size();
  std::vector<cd> coarse_slots(n_samples * k);
  std::vector<cd> fine_slots(n_samples * k);
  parallel_for(0, static_cast<std::int64_t>(n_samples), [&](std::int64_t i) {
    auto [coarse, fine] = sample_unitary_coupled(m, seed, i, coarse_steps);
    fill_products(trace_powers(coarse, kmax), cycle_types, coarse_slots.data() + i * k);
    fill_products(trace_powers(fine, kmax), cycle_types, fine_slots.data() + i * k);
  });
  return {reduce_slots(coarse_slots, n_samples, k), reduce_slots(fine_slots, n_samples, k)};
}

EmpiricalMoments empirical_spectral_moments(const SampleConfig& cfg, int k_max) {
  check_config(cfg.n_samples, cfg.brownian_steps);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const std::size_t k = static_cast<std::size_t>(k_max);
  std::vector<cd> slots(cfg.n_samples * k);
  parallel_for(0, static_cast<std::int64_t>(cfg.n_samples), [&](std::int64_t i) {
    cd* out = slots.data() + i * k;
    if (std::holds_alternative<HermitianModel>(cfg.model)) {
      Matrix x = sample_hermitian(std::get<HermitianModel>(cfg.model), cfg.seed, i);
      Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();
      const double N = static_cast<double>(x.rows());
      std::vector<double> pw(ev.size(), 1.0);
      for (int kk = 1; kk <= k_max; ++kk) {
        double acc = 0.0;
        for (int e = 0; e < ev.size(); ++e) {
          pw[e] *= ev(e);
          acc += pw[e];
        }
        out[kk - 1] = cd(acc / N, 0.0);
      }
    } else {
      Matrix u =
          sample_unitary(std::get<UnitaryModel>(cfg.model), cfg.seed, i, cfg.brownian_steps);
      Eigen::ComplexEigenSolver<Matrix> es(u, /*computeEigenvectors=*/false);
      const auto& ev = es.eigenvalues();
      const double N = static_cast<double>(u.rows());
      std::vector<cd> pw(ev.size(), cd(1.0));
      for (int kk = 1; kk <= k_max; ++kk) {
        cd acc = 0.0;
        for (int e = 0; e < ev.size(); ++e) {
          pw[e] *= ev(e);
          acc += pw[e];
        }
        out[kk - 1] = acc / N;
      }
    }
  });
  return reduce_slots(slots, cfg.n_samples, k);
}

}  // namespace freeconv
