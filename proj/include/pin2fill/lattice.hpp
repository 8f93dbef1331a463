#pragma once

#include <string>
#include <vector>

#include "pin2fill/rational.hpp"

namespace pin2fill {

using Gram = std::vector<std::vector<Int>>;

// Standard even building blocks: the rank-2 hyperbolic form and the rank-8
// even unimodular form of signature +8 (sign = +1) or -8 (sign = -1).
Gram gram_hyperbolic();
Gram gram_e8(int sign);
Gram direct_sum(const Gram& a, const Gram& b);

struct LatticeInvariants {
  int rank = 0;
  int signature = 0;  // positive minus negative inertia index
  Int determinant = 1;
  bool even = true;
  bool unimodular = true;

  bool operator==(const LatticeInvariants&) const = default;
};

// Exact invariants of a symmetric integer Gram matrix: signature by rational
// congruence diagonalization, determinant by fraction-free elimination.
// Non-square or non-symmetric input raises StructuralError.
LatticeInvariants invariants(const Gram& gram);

// An even indefinite unimodular form p*H + q*E8(eps).
struct LatticeForm {
  int p = 0;
  int q = 0;
  int eps = 1;

  std::string name() const;
  Gram gram() const;
  bool operator==(const LatticeForm&) const = default;
};

// Classification of the even unimodular form with the given Betti numbers.
// Requires b2plus >= 1 and b2minus >= 1 (indefinite) and signature divisible
// by 8; otherwise raises ClassificationError.
LatticeForm classify_even_indefinite(int b2plus, int b2minus);

}  // namespace pin2fill
