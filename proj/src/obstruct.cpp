#include "pin2fill/obstruct.hpp"

#include "pin2fill/errors.hpp"

namespace pin2fill {

const char* to_string(Scope s) {
  return s == Scope::indefinite ? "indefinite" : "negative-definite-only";
}

namespace {

// Fill in the indefinite-side fields once the Betti numbers are pinned down.
FillingConstraint indefinite_constraint(int b2plus, const Rational& b2minus_rat) {
  FillingConstraint fc;
  if (b2minus_rat < 1) {
    fc.scope = Scope::negative_definite_only;
    fc.note = "forced b2- below 1: no indefinite filling exists";
    return fc;
  }
  fc.scope = Scope::indefinite;
  fc.even = true;
  fc.b2plus = b2plus;
  fc.b2minus = static_cast<int>(numerator(b2minus_rat));
  try {
    fc.lattice = classify_even_indefinite(*fc.b2plus, *fc.b2minus);
  } catch (const ClassificationError&) {
    fc.note = "signature not divisible by 8: no even unimodular form, so no such filling";
  }
  return fc;
}

}  // namespace

FillingConstraint theorem_main(const Rational& h, TypeClass t) {
  if (!is_integer(Rational(8) * h))
    throw HypothesisError("theorem_main: 8h must be an integer, got h = " +
                          rational_to_string(h));
  // Type I pins (b2+, b2-) = (1, 9-8h); type II pins (2, 10-8h).
  int b2plus = t == TypeClass::I ? 1 : 2;
  Rational b2minus = (t == TypeClass::I ? 9 : 10) - Rational(8) * h;
  return indefinite_constraint(b2plus, b2minus);
}

FillingConstraint theorem_contact(const ContactClass& c) {
  if (!c.j_invariant)
    throw HypothesisError("theorem_contact: the contact class must be conjugation invariant");
  if (c.tower == Tower::alpha) {
    FillingConstraint fc;
    fc.scope = Scope::negative_definite_only;
    fc.note = "alpha-tower contact class: every filling is negative definite";
    return fc;
  }
  if (!is_integer(Rational(4) * c.d.v))
    throw HypothesisError("theorem_contact: 4d must be an integer, got d = " + c.d.str());
  int b2plus = c.tower == Tower::beta ? 1 : 2;
  Rational b2minus = (c.tower == Tower::beta ? 5 : 10) - Rational(4) * c.d.v;
  return indefinite_constraint(b2plus, b2minus);
}

EulerBound euler_bounds(const std::optional<FillingConstraint>& fc,
                        const std::optional<Rational>& C) {
  EulerBound out;
  if (fc && fc->scope == Scope::indefinite && fc->b2plus && fc->b2minus)
    out.chi_indefinite = 1 + *fc->b2plus + *fc->b2minus;
  if (C) {
    Int cap = floor_rational(Rational(2) - *C);
    if (cap < 0) cap = 0;
    out.chi_negdef_max = 1 + static_cast<int>(cap);
  }
  return out;
}

RestrictionSquare restriction_square(const FloerModel& target, int qpow) {
  const GradedSpace& tgt_hs = target.hs_hat();
  if (!target.p_star)
    throw StructuralError("restriction_square: target lacks p_star data");

  FloerModel ref = build_s3(target.window);

  Grading g_top = tgt_hs.max_supported();
  auto c_top = target.column_of(g_top);
  if (!c_top)
    throw StructuralError("restriction_square: top class of the target has no column index");
  Grading deg = g_top - Grading(-1);  // reference top class sits at -1

  F2Matrix one(1, 1);
  one.set(0, 0, true);
  GradedMap mult(ref.hs_hat(), tgt_hs, deg);
  for (const auto& [gs, d] : ref.hs_hat().dims()) {
    auto bs = ref.column_of(gs);
    if (!bs || *bs + *c_top > 2) continue;
    Grading gt = gs + deg;
    if (tgt_hs.dim_clamped(gt) != 1) continue;
    if (target.column_of(gt) != *bs + *c_top) continue;
    mult.set_block(gs, one);
  }

  RestrictionSquare sq;
  sq.qpow = qpow;
  sq.bar_map = apply_bar(BarMap::Mono(qpow, deg), ref, target);  // may throw GradingError
  sq.top_mult = mult;
  sq.commutes = check_square(mult, sq.bar_map, *ref.p_star, *target.p_star);
  return sq;
}

int forced_qpower(const FloerModel& target) {
  for (int q = 0; q <= 2; q++) {
    RestrictionSquare sq;
    try {
      sq = restriction_square(target, q);
    } catch (const GradingError&) {
      continue;  // shift mismatch: this power cannot exist at all
    }
    if (sq.commutes) return q;
  }
  throw HypothesisError("forced_qpower: no Q-power makes the restriction square commute for '" +
                        target.name + "'");
}

}  // namespace pin2fill
