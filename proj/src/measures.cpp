#include "freeconv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace freeconv {

AtomicMeasure::AtomicMeasure(Space space, std::vector<Atom> atoms) : space_(space) {
  for (auto& a : atoms) {
    if (!(a.weight >= 0.0)) throw std::invalid_argument("atomic measure weights must be nonnegative");
    if (!std::isfinite(a.location)) throw std::invalid_argument("atom location must be finite");
    if (space_ == Space::kCircle) a.location = principal_angle(a.location);
  }
  std::erase_if(atoms, [](const Atom& a) { return a.weight == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.location < y.location; });
  for (const auto& a : atoms) {
    if (atoms_.empty() || std::abs(a.location - atoms_.back().location) > kAtomMergeTol)
      atoms_.push_back(a);
    else
      atoms_.back().weight += a.weight;
  }
  // Circle wraparound: -pi and pi are the same point.
  if (space_ == Space::kCircle && atoms_.size() >= 2 &&
      std::abs(atoms_.front().location + kTwoPi - atoms_.back().location) <= kAtomMergeTol) {
    atoms_.front().weight += atoms_.back().weight;
    atoms_.pop_back();
  }
}

AtomicMeasure AtomicMeasure::real_line(std::vector<Atom> atoms) {
  return AtomicMeasure(Space::kRealLine, std::move(atoms));
}

AtomicMeasure AtomicMeasure::circle(std::vector<Atom> atoms) {
  return AtomicMeasure(Space::kCircle, std::move(atoms));
}

AtomicMeasure AtomicMeasure::zero(Space space) { return AtomicMeasure(space, {}); }

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

cd AtomicMeasure::circle_point(std::size_t i) const {
  if (space_ != Space::kCircle) throw std::invalid_argument("circle_point on a line measure");
  return std::polar(1.0, atoms_.at(i).location);
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
  if (!(factor >= 0.0)) throw std::invalid_argument("measure scale factor must be nonnegative");
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.weight *= factor;
  return AtomicMeasure(space_, std::move(out));
}

AtomicMeasure operator+(const AtomicMeasure& a, const AtomicMeasure& b) {
  if (a.space_ != b.space_) throw std::invalid_argument("cannot add measures on different spaces");
  std::vector<Atom> all = a.atoms_;
  all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
  return AtomicMeasure(a.space_, std::move(all));
}

void AtomicMeasure::require_levy() const {
  for (const auto& a : atoms_)
    if (std::abs(a.location) <= kAtomMergeTol)
      throw std::invalid_argument(space_ == Space::kRealLine
                                      ? "Levy measure on the line must have no atom at 0"
                                      : "Levy measure on the circle must have no atom at 1");
}

AtomicMeasure AtomicMeasure::without_excluded_point() const {
  std::vector<Atom> kept;
  for (const auto& a : atoms_)
    if (std::abs(a.location) > kAtomMergeTol) kept.push_back(a);
  return AtomicMeasure(space_, std::move(kept));
}

double measure_distance(const AtomicMeasure& a, const AtomicMeasure& b) {
  if (a.space() != b.space() || a.atoms().size() != b.atoms().size())
    return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    const Atom& x = a.atoms()[i];
    const Atom& y = b.atoms()[i];
    double dl = a.space() == Space::kCircle ? angle_distance(x.location, y.location)
                                            : std::abs(x.location - y.location);
    d = std::max(d, std::max(dl, std::abs(x.weight - y.weight)));
  }
  return d;
}

}  // namespace freeconv
