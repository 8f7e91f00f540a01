// Compares the OpenMP kernels against their serial references: dense group
// algebra convolution at degrees 7 and 8, and the Monte Carlo trace-moment
// loop at 1 thread vs all available. CSV to stdout.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>

#include "freeconv/group_algebra.hpp"
#include "freeconv/models.hpp"
#include "freeconv/parallel.hpp"
#include "freeconv/sampler.hpp"
#include "freeconv/triplets.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

freeconv::GroupAlgebraElement random_element(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> g;
  freeconv::GroupAlgebraElement x(n);
  for (std::uint64_t r = 0; r < x.dim(); ++r)
    x.set_by_rank(r, freeconv::cd(g(eng), g(eng)));
  return x;
}

void bench_convolution(int n, int reps) {
  const auto a = random_element(n, 11);
  const auto b = random_element(n, 17);

  auto t0 = Clock::now();
  freeconv::GroupAlgebraElement serial(n);
  for (int i = 0; i < reps; ++i) serial = freeconv::convolve_serial(a, b);
  const double t_serial = seconds_since(t0) / reps;

  t0 = Clock::now();
  freeconv::GroupAlgebraElement parallel(n);
  for (int i = 0; i < reps; ++i) parallel = freeconv::convolve(a, b);
  const double t_parallel = seconds_since(t0) / reps;

  const bool identical = serial == parallel;
  std::cout << "convolve_deg" << n << ',' << t_serial << ',' << t_parallel << ','
            << t_serial / t_parallel << ',' << (identical ? "bitwise_equal" : "MISMATCH")
            << '\n';
}

void bench_sampler(std::uint64_t samples) {
  const freeconv::MultFreeTriplet t(
      0.4, 0.8, freeconv::AtomicMeasure::circle({{2.0, 0.5}}));
  freeconv::SampleConfig cfg;
  cfg.model = freeconv::gamma_n(t, 24);
  cfg.n_samples = samples;
  cfg.brownian_steps = 60;
  cfg.seed = 3;

  freeconv::set_threads(1);
  auto t0 = Clock::now();
  const auto one = freeconv::empirical_trace_products(cfg, {1});
  const double t_one = seconds_since(t0);

  const int all = freeconv::max_threads();
  freeconv::set_threads(all);
  t0 = Clock::now();
  const auto many = freeconv::empirical_trace_products(cfg, {1});
  const double t_all = seconds_since(t0);

  const bool identical = one.estimates[0] == many.estimates[0] && one.stderrs == many.stderrs;
  std::cout << "sampler_" << samples << "x1_vs_" << all << "t," << t_one << ',' << t_all << ','
            << t_one / t_all << ',' << (identical ? "bitwise_equal" : "MISMATCH") << '\n';
}

}  // namespace

int main() {
  std::cout << "kernel,serial_s,parallel_s,speedup,agreement\n";
  bench_convolution(7, 5);
  bench_convolution(8, 2);
  bench_sampler(400);
  return 0;
}
