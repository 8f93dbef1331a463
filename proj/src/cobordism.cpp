#include "pin2fill/cobordism.hpp"

#include "pin2fill/errors.hpp"

namespace pin2fill {

Grading grading_shift(int b2plus, int b2minus) {
  if (b2plus < 0 || b2minus < 0)
    throw DomainError("grading_shift: Betti numbers must be nonnegative");
  return Grading(Rational(b2minus - 5 * b2plus, 4));
}

BarMap BarMap::Mono(int qpow, Grading degree) {
  if (qpow < 0 || qpow > 2) throw DomainError("BarMap: Q-power must lie in {0, 1, 2}");
  return BarMap{Kind::mono, qpow, degree};
}

std::string BarMap::str() const {
  if (kind == Kind::zero) return "Zero";
  return "Mono(" + std::to_string(qpow) + ", " + degree.str() + ")";
}

BarMap hs_bar_map(int b2plus, int b2minus) {
  Grading d = grading_shift(b2plus, b2minus);
  if (b2plus >= 3) return BarMap::Zero();
  return BarMap::Mono(b2plus, d);
}

BarMap compose_bar(const BarMap& first, const BarMap& second) {
  if (first.kind == BarMap::Kind::zero || second.kind == BarMap::Kind::zero)
    return BarMap::Zero();
  int q = first.qpow + second.qpow;
  if (q >= 3) return BarMap::Zero();
  return BarMap::Mono(q, first.degree + second.degree);
}

GradedMap apply_bar(const BarMap& f, const FloerModel& src, const FloerModel& tgt) {
  if (f.kind == BarMap::Kind::zero) return GradedMap::zero(src.bar, tgt.bar, Grading(0));

  Rational k = -(f.degree.v + f.qpow + src.hs_bar_shift.v - tgt.hs_bar_shift.v) / 4;
  if (!is_integer(k))
    throw GradingError("apply_bar: " + f.str() + " from '" + src.name + "' to '" + tgt.name +
                       "' needs V-power " + rational_to_string(k) +
                       ", which is not an integer");

  GradedMap out(src.bar, tgt.bar, f.degree);
  F2Matrix one(1, 1);
  one.set(0, 0, true);
  for (const auto& [g, d] : src.bar.dims()) {
    auto a = src.bar_qindex(g);
    if (!a || *a + f.qpow > 2) continue;
    if (tgt.bar.dim_clamped(g + f.degree) != 1) continue;
    out.set_block(g, one);
  }
  return out;
}

}  // namespace pin2fill
