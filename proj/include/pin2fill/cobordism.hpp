#pragma once

#include <string>

#include "pin2fill/floer.hpp"

namespace pin2fill {

// Grading change of the induced bar-flavor map for a connected cobordism
// with the given Betti numbers: (b2minus - 5*b2plus)/4.
Grading grading_shift(int b2plus, int b2minus);

// Induced map on bar flavors, presented abstractly: either zero, or
// multiplication by Q^qpow together with an overall grading shift. The
// V-power is implicit; it is recovered when the map is applied between two
// concrete models whose identification shifts are known.
struct BarMap {
  enum class Kind { zero, mono };

  Kind kind = Kind::zero;
  int qpow = 0;
  Grading degree;  // zero maps keep degree 0 by convention

  static BarMap Zero() { return BarMap{}; }
  static BarMap Mono(int qpow, Grading degree);

  bool operator==(const BarMap&) const = default;
  std::string str() const;
};

// The bar-flavor map induced by a cobordism: Q^(b2plus) when b2plus <= 2,
// zero once b2plus >= 3. Negative Betti inputs are rejected.
BarMap hs_bar_map(int b2plus, int b2minus);

// Map induced by stacking `first` then `second`.
BarMap compose_bar(const BarMap& first, const BarMap& second);

// Realize a BarMap as a concrete GradedMap src.bar -> tgt.bar. The V-power
// k = -(degree + qpow + shift_src - shift_tgt)/4 must come out an integer;
// a fractional k means the map cannot exist between these two models and
// raises GradingError.
GradedMap apply_bar(const BarMap& f, const FloerModel& src, const FloerModel& tgt);

}  // namespace pin2fill
