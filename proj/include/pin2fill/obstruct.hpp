#pragma once

#include <optional>
#include <string>

#include "pin2fill/cobordism.hpp"
#include "pin2fill/floer.hpp"
#include "pin2fill/lattice.hpp"

namespace pin2fill {

enum class Scope { indefinite, negative_definite_only };
const char* to_string(Scope s);

// What an indefinite-form filling of the given boundary is forced to look
// like. When scope is negative_definite_only, no indefinite filling exists
// and the Betti/lattice fields stay empty. When the forced signature is not
// divisible by 8, the Betti numbers are still reported but no even
// unimodular lattice exists, which rules the indefinite case out entirely;
// the note records that.
struct FillingConstraint {
  Scope scope = Scope::indefinite;
  bool even = true;
  std::optional<int> b2plus;
  std::optional<int> b2minus;
  std::optional<LatticeForm> lattice;
  std::string note;
};

// Constraint forced by a rank-one boundary of the given type with monopole
// invariant h. Requires 8h to be an integer.
FillingConstraint theorem_main(const Rational& h, TypeClass t);

// Constraint forced by a conjugation-invariant contact class of grading d
// landing in the named tower. Requires 4d integral for the beta and gamma
// cases; an alpha class confines fillings to negative definite forms.
FillingConstraint theorem_contact(const ContactClass& c);

struct EulerBound {
  bool finite = true;
  std::optional<int> chi_indefinite;  // exact value in the indefinite case
  std::optional<int> chi_negdef_max;  // bound over negative definite fillings
};

// Euler characteristic consequences of a constraint: the indefinite case has
// chi = 1 + b2+ + b2-; a lattice embedding constant C caps the negative
// definite case at chi <= 1 + max(0, floor(2 - C)).
EulerBound euler_bounds(const std::optional<FillingConstraint>& fc,
                        const std::optional<Rational>& C);

// Restriction square for a filling of the target's boundary: multiplication
// by the top-degree class upstairs against the induced Q^qpow map on bar
// flavors downstairs, glued by the two p maps.
struct RestrictionSquare {
  GradedMap top_mult;  // hs_hat(reference) -> hs_hat(target)
  GradedMap bar_map;   // bar(reference) -> bar(target)
  int qpow = 0;
  bool commutes = false;
};

// Build the square for one Q-power. Throws GradingError when the power is
// incompatible with the two identification shifts.
RestrictionSquare restriction_square(const FloerModel& target, int qpow);

// The unique Q-power whose restriction square commutes; HypothesisError when
// no power works.
int forced_qpower(const FloerModel& target);

}  // namespace pin2fill
