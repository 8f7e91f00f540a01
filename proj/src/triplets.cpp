#include "freeconv/triplets.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "freeconv/chains.hpp"

namespace freeconv {

namespace {

void check_nonneg(double v, const char* what) {
  if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

void check_space(const AtomicMeasure& m, Space s, const char* what) {
  if (m.space() != s) throw std::invalid_argument(std::string(what) + " lives on the wrong space");
}

// Shared data transform of estar_map / eboxplus_map: wrap the drift, push the
// Levy measure forward through x -> e^{ix}, drop what lands at 1.
std::pair<double, AtomicMeasure> wrap_additive_data(double eta, const AtomicMeasure& levy) {
  double angle = eta;
  std::vector<Atom> circ;
  for (const auto& at : levy.atoms()) {
    double ind = std::abs(at.location) <= 1.0 ? at.location : 0.0;
    angle += at.weight * (std::sin(at.location) - ind);
    circ.push_back({at.location, at.weight});  // constructor reduces to a principal angle
  }
  return {angle, AtomicMeasure::circle(std::move(circ)).without_excluded_point()};
}

}  // namespace

AddClassicalTriplet::AddClassicalTriplet(double eta_, double a_, AtomicMeasure levy_)
    : eta(eta_), a(a_), levy(std::move(levy_)) {
  check_nonneg(a, "Gaussian weight");
  check_space(levy, Space::kRealLine, "additive Levy measure");
  levy.require_levy();
}

AddFreeTriplet::AddFreeTriplet(double eta_, double a_, AtomicMeasure levy_)
    : eta(eta_), a(a_), levy(std::move(levy_)) {
  check_nonneg(a, "Gaussian weight");
  check_space(levy, Space::kRealLine, "additive Levy measure");
  levy.require_levy();
}

Idempotent Idempotent::finite(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("idempotent order must be at least 1");
  return {false, m};
}

bool Idempotent::divides(long long k) const {
  if (is_infinite) return k == 0;
  return k % static_cast<long long>(m) == 0;
}

bool Idempotent::operator==(const Idempotent& o) const {
  if (is_infinite || o.is_infinite) return is_infinite == o.is_infinite;
  return m == o.m;
}

Idempotent idempotent_product(const Idempotent& a, const Idempotent& b) {
  if (a.is_infinite || b.is_infinite) return Idempotent::infinite();
  return Idempotent::finite(std::lcm(a.m, b.m));
}

MultClassicalTriplet::MultClassicalTriplet(double omega_angle_, double b_, AtomicMeasure levy_,
                                           Idempotent idempotent_)
    : omega_angle(principal_angle(omega_angle_)), b(b_), levy(std::move(levy_)), idempotent(idempotent_) {
  check_nonneg(b, "Gaussian weight");
  check_space(levy, Space::kCircle, "circle Levy measure");
  levy.require_levy();
}

MultFreeTriplet::MultFreeTriplet(double omega_angle_, double b_, AtomicMeasure levy_, bool haar_)
    : omega_angle(principal_angle(omega_angle_)), b(b_), levy(std::move(levy_)), haar(haar_) {
  check_nonneg(b, "Gaussian weight");
  check_space(levy, Space::kCircle, "circle Levy measure");
  levy.require_levy();
  if (haar) {  // the remaining fields are ignored; zero them so equality is by-value
    omega_angle = 0.0;
    b = 0.0;
    levy = AtomicMeasure::zero(Space::kCircle);
  }
}

AddClassicalTriplet pair_to_triplet(const CharPair& pair) {
  check_space(pair.sigma, Space::kRealLine, "characteristic-pair measure");
  double a = 0.0;
  double eta = pair.gamma;
  std::vector<Atom> rho;
  for (const auto& at : pair.sigma.atoms()) {
    if (std::abs(at.location) <= kAtomMergeTol) {
      a += at.weight;
      continue;
    }
    double x = at.location;
    double w = at.weight * (1.0 + x * x) / (x * x);
    rho.push_back({x, w});
    double ind = std::abs(x) <= 1.0 ? 1.0 : 0.0;
    eta += w * x * (ind - 1.0 / (1.0 + x * x));
  }
  return AddClassicalTriplet(eta, a, AtomicMeasure::real_line(std::move(rho)));
}

CharPair triplet_to_pair(const AddClassicalTriplet& t) {
  std::vector<Atom> sigma;
  if (t.a > 0.0) sigma.push_back({0.0, t.a});
  double gamma = t.eta;
  for (const auto& at : t.levy.atoms()) {
    double x = at.location;
    sigma.push_back({x, at.weight * x * x / (1.0 + x * x)});
    double ind = std::abs(x) <= 1.0 ? 1.0 : 0.0;
    gamma -= at.weight * x * (ind - 1.0 / (1.0 + x * x));
  }
  return CharPair{gamma, AtomicMeasure::real_line(std::move(sigma))};
}

AddFreeTriplet lambda_map(const AddClassicalTriplet& t) { return AddFreeTriplet(t.eta, t.a, t.levy); }

MultClassicalTriplet estar_map(const AddClassicalTriplet& t) {
  auto [angle, levy] = wrap_additive_data(t.eta, t.levy);
  return MultClassicalTriplet(angle, t.a, std::move(levy));
}

MultFreeTriplet eboxplus_map(const AddFreeTriplet& t) {
  auto [angle, levy] = wrap_additive_data(t.eta, t.levy);
  return MultFreeTriplet(angle, t.a, std::move(levy));
}

MultClassicalTriplet gamma_map(const MultFreeTriplet& t) {
  if (t.haar)
    return MultClassicalTriplet(0.0, 0.0, AtomicMeasure::zero(Space::kCircle), Idempotent::infinite());
  return MultClassicalTriplet(t.omega_angle, t.b, t.levy);
}

bool diagram_check(const AddClassicalTriplet& t) {
  MultClassicalTriplet direct = estar_map(t);
  MultClassicalTriplet composed = gamma_map(eboxplus_map(lambda_map(t)));
  return angle_distance(direct.omega_angle, composed.omega_angle) <= 1e-12 &&
         std::abs(direct.b - composed.b) <= 1e-12 &&
         measure_distance(direct.levy, composed.levy) <= 1e-12 &&
         direct.idempotent == composed.idempotent;
}

LogCumulantSequence log_cumulants(const MultFreeTriplet& t, int n_max) {
  if (t.haar) throw std::domain_error("the haar law has no log-cumulants");
  if (n_max < 1) throw std::invalid_argument("log-cumulant order must be at least 1");
  LogCumulantSequence out;
  out.lk1 = cd(0.0, t.omega_angle) - cd(t.b / 2.0);
  for (const auto& at : t.levy.atoms()) out.lk1 += at.weight * (std::cos(at.location) - 1.0);
  out.lk.assign(static_cast<std::size_t>(n_max - 1), cd(0.0));
  for (int n = 2; n <= n_max; ++n) {
    cd acc = n == 2 ? cd(-t.b) : cd(0.0);
    for (std::size_t i = 0; i < t.levy.atoms().size(); ++i) {
      cd zm1 = t.levy.circle_point(i) - cd(1.0);
      acc += t.levy.atoms()[i].weight * std::pow(zm1, n);
    }
    out.lk[static_cast<std::size_t>(n - 2)] = acc;
  }
  return out;
}

cd moments_from_triplet(const MultFreeTriplet& t, const Permutation& sigma) {
  if (t.haar) throw std::domain_error("the haar law has no log-cumulants");
  const int n = sigma.degree();
  LogCumulantSequence ls = log_cumulants(t, std::max(n, 1));
  std::vector<cd> cycle_weight(static_cast<std::size_t>(n) + 1, cd(0.0));
  for (int m = 2; m <= n; ++m) cycle_weight[static_cast<std::size_t>(m)] = ls.at(m);
  std::vector<cd> g = chain_length_weights(sigma, cycle_weight);
  cd sum = 0.0;
  double fact = 1.0;
  for (std::size_t l = 0; l < g.size(); ++l) {
    if (l > 0) fact *= static_cast<double>(l);
    sum += g[l] / fact;
  }
  return std::exp(static_cast<double>(n) * ls.lk1) * sum;
}

TruncatedSeries s_series_from_triplet(const MultFreeTriplet& t, int order) {
  if (t.haar) throw std::domain_error("the haar law has no S-transform");
  TruncatedSeries e(order);
  e.set(0, cd(t.b / 2.0));
  if (order >= 1) e.set(1, cd(t.b));
  for (std::size_t i = 0; i < t.levy.atoms().size(); ++i) {
    double w = t.levy.atoms()[i].weight;
    cd zeta = t.levy.circle_point(i);
    cd one_minus = cd(1.0) - zeta;
    e.set(0, e.coef(0) + w * (cd(0.0, std::sin(t.levy.atoms()[i].location)) + one_minus));
    cd pw = one_minus;
    double sign = 1.0;
    for (int k = 1; k <= order; ++k) {
      pw *= one_minus;
      sign = -sign;
      e.set(k, e.coef(k) + w * sign * pw);
    }
  }
  return e.exp().scaled(std::polar(1.0, -t.omega_angle));
}

cd char_function(const MultClassicalTriplet& t, long long k) {
  if (!t.idempotent.divides(k)) return 0.0;
  cd expo(-0.5 * t.b * static_cast<double>(k) * static_cast<double>(k), 0.0);
  for (const auto& at : t.levy.atoms()) {
    cd zk = std::polar(1.0, static_cast<double>(k) * at.location);
    expo += at.weight * (zk - cd(1.0) - cd(0.0, static_cast<double>(k) * std::sin(at.location)));
  }
  return std::polar(1.0, static_cast<double>(k) * t.omega_angle) * std::exp(expo);
}

std::vector<PowerLimitRow> boxtimes_power_limit_experiment(const MomentSequence& base,
                                                           const std::vector<int>& powers,
                                                           const MomentSequence& target) {
  TruncatedSeries log_s = s_from_moments(base).log();
  std::vector<PowerLimitRow> rows;
  for (int n : powers) {
    if (n < 1) throw std::invalid_argument("boxtimes power must be positive");
    MomentSequence mom = moments_from_s(log_s.scaled(static_cast<double>(n)).exp());
    int k_max = std::min(mom.order(), target.order());
    double err = 0.0;
    for (int k = 1; k <= k_max; ++k)
      err = std::max(err, std::abs(mom.moment(k) - target.moment(k)));
    rows.push_back({n, err});
  }
  return rows;
}

AddClassicalTriplet add(const AddClassicalTriplet& s, const AddClassicalTriplet& t) {
  return AddClassicalTriplet(s.eta + t.eta, s.a + t.a, s.levy + t.levy);
}

AddFreeTriplet add(const AddFreeTriplet& s, const AddFreeTriplet& t) {
  return AddFreeTriplet(s.eta + t.eta, s.a + t.a, s.levy + t.levy);
}

MultClassicalTriplet add(const MultClassicalTriplet& s, const MultClassicalTriplet& t) {
  return MultClassicalTriplet(s.omega_angle + t.omega_angle, s.b + t.b, s.levy + t.levy,
                              idempotent_product(s.idempotent, t.idempotent));
}

MultFreeTriplet add(const MultFreeTriplet& s, const MultFreeTriplet& t) {
  if (s.haar || t.haar) return haar_triplet();  // absorbing
  return MultFreeTriplet(s.omega_angle + t.omega_angle, s.b + t.b, s.levy + t.levy);
}

AddClassicalTriplet gaussian_triplet(double a) {
  return AddClassicalTriplet(0.0, a, AtomicMeasure::zero(Space::kRealLine));
}

AddClassicalTriplet dirac_triplet(double eta) {
  return AddClassicalTriplet(eta, 0.0, AtomicMeasure::zero(Space::kRealLine));
}

AddClassicalTriplet poisson_triplet(double lambda, const AtomicMeasure& jump_law) {
  check_nonneg(lambda, "Poisson rate");
  check_space(jump_law, Space::kRealLine, "Poisson jump law");
  AtomicMeasure levy = jump_law.without_excluded_point().scaled(lambda);
  double eta = 0.0;
  for (const auto& at : levy.atoms())
    if (std::abs(at.location) <= 1.0) eta += at.weight * at.location;
  return AddClassicalTriplet(eta, 0.0, std::move(levy));
}

AddFreeTriplet semicircle_triplet(double a) {
  return AddFreeTriplet(0.0, a, AtomicMeasure::zero(Space::kRealLine));
}

AddFreeTriplet free_poisson_triplet(double lambda) {
  return free_compound_poisson_triplet(lambda, AtomicMeasure::real_line({{1.0, 1.0}}));
}

AddFreeTriplet free_compound_poisson_triplet(double lambda, const AtomicMeasure& jump_law) {
  return lambda_map(poisson_triplet(lambda, jump_law));
}

MultFreeTriplet free_mult_brownian_triplet(double b) {
  return MultFreeTriplet(0.0, b, AtomicMeasure::zero(Space::kCircle));
}

MultFreeTriplet free_mult_poisson_triplet(double lambda, const AtomicMeasure& jump_law) {
  check_nonneg(lambda, "Poisson rate");
  check_space(jump_law, Space::kCircle, "circle Poisson jump law");
  double angle = 0.0;
  for (const auto& at : jump_law.atoms()) angle += lambda * at.weight * std::sin(at.location);
  return MultFreeTriplet(angle, 0.0, jump_law.without_excluded_point().scaled(lambda));
}

MultFreeTriplet dirac_circle_triplet(double angle) {
  return MultFreeTriplet(angle, 0.0, AtomicMeasure::zero(Space::kCircle));
}

MultFreeTriplet haar_triplet() {
  return MultFreeTriplet(0.0, 0.0, AtomicMeasure::zero(Space::kCircle), true);
}

MultClassicalTriplet wrapped_gaussian_triplet(double b) { return estar_map(gaussian_triplet(b)); }

MultClassicalTriplet mult_poisson_triplet(double lambda, const AtomicMeasure& jump_law) {
  MultFreeTriplet f = free_mult_poisson_triplet(lambda, jump_law);
  return MultClassicalTriplet(f.omega_angle, f.b, f.levy);
}

}  // namespace freeconv
