#pragma once

#include <vector>

#include "freeconv/common.hpp"

namespace freeconv {

enum class Space { kRealLine, kCircle };

struct Atom {
  double location;  // point on the line, or angle in (-pi, pi] on the circle
  double weight;    // >= 0

  bool operator==(const Atom& o) const = default;
};

// Finite atomic measure on the real line or the unit circle. Construction
// canonicalizes: weights must be nonnegative, zero-weight atoms are dropped,
// circle locations are reduced to principal angles, locations within 1e-12
// are merged (weights added), atoms are sorted by location.
class AtomicMeasure {
 public:
  static AtomicMeasure real_line(std::vector<Atom> atoms);
  static AtomicMeasure circle(std::vector<Atom> atoms);
  static AtomicMeasure zero(Space space);

  Space space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  double total_mass() const;

  // e^{i theta} for a circle atom.
  cd circle_point(std::size_t i) const;

  AtomicMeasure scaled(double factor) const;  // factor >= 0
  friend AtomicMeasure operator+(const AtomicMeasure& a, const AtomicMeasure& b);

  // Throws unless usable as a Levy measure: no atom at 0 (line) / 1 (circle).
  void require_levy() const;
  // Copy with any atom at the excluded point (0 on the line, 1 on the circle) removed.
  AtomicMeasure without_excluded_point() const;

  bool operator==(const AtomicMeasure& o) const = default;

 private:
  AtomicMeasure(Space space, std::vector<Atom> atoms);

  Space space_;
  std::vector<Atom> atoms_;
};

// Max over matched atoms of location/weight distance; infinity when the atom
// counts differ. Circle locations compare modulo 2 pi.
double measure_distance(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace freeconv
