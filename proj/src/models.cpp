#include "freeconv/models.hpp"

#include <cmath>
#include <stdexcept>

namespace freeconv {

namespace {

void check_dim(int N) {
  if (N < 1) throw std::invalid_argument("matrix dimension must be at least 1");
}

}  // namespace

HermitianModel::HermitianModel(int N_, double eta_, double a_, AtomicMeasure jump_law_)
    : N(N_), eta(eta_), a(a_), jump_law(std::move(jump_law_)) {
  check_dim(N);
  if (!(a >= 0.0)) throw std::invalid_argument("Gaussian weight must be nonnegative");
  if (jump_law.space() != Space::kRealLine)
    throw std::invalid_argument("Hermitian jump law lives on the real line");
  jump_law.require_levy();
}

UnitaryModel::UnitaryModel(int N_, double y0_, double alpha_, double beta_, AtomicMeasure jump_law_,
                           bool haar_)
    : N(N_), y0(principal_angle(y0_)), alpha(alpha_), beta(beta_), jump_law(std::move(jump_law_)),
      haar(haar_) {
  check_dim(N);
  if (!(alpha >= 0.0) || !(beta >= 0.0))
    throw std::invalid_argument("Gaussian covariances must be nonnegative");
  if (jump_law.space() != Space::kCircle)
    throw std::invalid_argument("unitary jump law lives on the circle");
  jump_law.require_levy();
  if (haar) {
    y0 = 0.0;
    alpha = 0.0;
    beta = 0.0;
    jump_law = AtomicMeasure::zero(Space::kCircle);
  }
}

UnitaryModel gamma_n(const MultFreeTriplet& t, int N) {
  check_dim(N);
  if (t.haar) return UnitaryModel(N, 0.0, 0.0, 0.0, AtomicMeasure::zero(Space::kCircle), true);
  return UnitaryModel(N, t.omega_angle, t.b / (N + 1), t.b, t.levy);
}

HermitianModel pi_n(const AddFreeTriplet& t, int N) {
  check_dim(N);
  return HermitianModel(N, t.eta, t.a, t.levy);
}

UnitaryModel stochastic_exponential(const HermitianModel& h) {
  double y0 = h.eta;
  std::vector<Atom> circ;
  for (const auto& at : h.jump_law.atoms()) {
    double ind = std::abs(at.location) <= 1.0 ? at.location : 0.0;
    y0 += at.weight * (std::sin(at.location) - ind);
    circ.push_back({at.location, at.weight});
  }
  AtomicMeasure wrapped = AtomicMeasure::circle(std::move(circ)).without_excluded_point();
  return UnitaryModel(h.N, y0, h.a / (h.N + 1), h.a, std::move(wrapped));
}

}  // namespace freeconv
