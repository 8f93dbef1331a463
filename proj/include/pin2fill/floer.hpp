#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pin2fill/graded.hpp"

namespace pin2fill {

// Monomial V^a Q^b in the coefficient ring F[[V]][Q]/(Q^3). V has degree -4,
// Q has degree -1, so b stays in {0,1,2} and products with b1+b2 >= 3 vanish.
struct RingMonomial {
  long long vpow = 0;
  int qpow = 0;

  Grading degree() const { return Grading::of(-4 * vpow - qpow); }
  static std::optional<RingMonomial> mul(const RingMonomial& a, const RingMonomial& b) {
    if (a.qpow + b.qpow >= 3) return std::nullopt;
    return RingMonomial{a.vpow + b.vpow, a.qpow + b.qpow};
  }
  bool operator==(const RingMonomial&) const = default;
};

// Rank-one classification of a model: which side of the tower the extra
// summand sits on. Orientation reversal swaps the two.
enum class TypeClass { I, II };
TypeClass dual_type(TypeClass t);
const char* to_string(TypeClass t);
std::optional<TypeClass> type_from_string(const std::string& s);

// The three bar-tower images inside the to-flavor: alpha/beta/gamma are the
// images of the Q^2, Q^1, Q^0 sub-towers respectively.
enum class Tower { alpha, beta, gamma };
const char* to_string(Tower t);
std::optional<Tower> tower_from_string(const std::string& s);

// Distinguished class data: its grading, the tower its image lands in, and
// whether it is conjugation invariant.
struct ContactClass {
  Grading d;
  Tower tower = Tower::gamma;
  bool j_invariant = true;

  bool operator==(const ContactClass&) const = default;
};

// One exact triangle hs --q--> hs --iota--> hm --pi--> hs together with the
// module actions: V (degree -4) on hs, U (degree -2) on hm. q doubles as the
// Q-action on hs.
struct GysinTriangle {
  GradedSpace hs, hm;
  GradedMap q;     // hs -> hs, degree -1
  GradedMap iota;  // hs -> hm, degree 0
  GradedMap pi;    // hm -> hs, degree 0
  GradedMap v_hs;  // hs -> hs, degree -4
  GradedMap u_hm;  // hm -> hm, degree -2
};

// Position of the rank-one reduced generator inside an hm space.
struct ReducedGenerator {
  Grading at;
  int index = 0;
};

// Four-flavor package for one model manifold. The hat and to triangles are
// populated when the corresponding flavor is pinned down by the inputs; the
// bar flavor is always present. All spaces share `window`. Treat as
// immutable once a builder returns it.
struct FloerModel {
  std::string name;
  Window window;
  Grading anchor;  // every supported grading differs from this by an integer

  std::optional<TypeClass> type;
  std::optional<Grading> froyshov;

  std::optional<GysinTriangle> hat;  // hs_hat / hm_hat
  std::optional<GysinTriangle> to;   // hs_to / hm_to

  GradedSpace bar;       // hs_bar dimensions
  Grading hs_bar_shift;  // Q^0 bar tower sits at shift - 4Z
  GradedMap v_bar;       // degree -4, invertible inside the window
  GradedMap q_bar;       // degree -1, Q^a tower -> Q^(a+1) tower

  std::optional<GradedMap> p_star;  // hs_hat -> hs_bar, degree 0
  std::optional<GradedMap> istar;   // hs_bar -> hs_to, degree -1 (connecting map)

  std::map<Grading, int> column;  // hs_hat grading -> Q-column index {0,1,2}

  std::optional<ReducedGenerator> reduced_hat;  // inside hm_hat
  std::optional<ReducedGenerator> reduced_to;   // inside hm_to
  std::optional<ContactClass> contact;

  std::optional<GradedMap> jstar;    // involution on hm_to (only with a J summand)
  std::set<Grading> skip_exactness;  // gradings hidden by an injected J summand

  const GradedSpace& hm_hat() const;
  const GradedSpace& hs_hat() const;
  const GradedSpace& hm_to() const;
  const GradedSpace& hs_to() const;
  const GradedSpace& hs_bar() const { return bar; }

  std::optional<int> column_of(const Grading& g) const;
  // Q-subtower index {0,1,2} of the bar class at g; nothing when bar is zero
  // at g.
  std::optional<int> bar_qindex(const Grading& g) const;
};

// Model with hs_hat = three Q-columns topped at -1, -2, -3 and hm_hat a
// single U-tower topped at -1. Window must span at least two period-4
// blocks (width >= 8).
FloerModel build_s3(const Window& w);

// Rank-one model with Froyshov invariant h: hm_hat is a U-tower topped at
// -2h-1 plus one extra class at -2h (Type I) or -2h-1 (Type II); hs_hat has
// V-columns topped at (-2h-3, -2h, -2h-1) resp. (-2h-3, -2h-4, -2h-1), with
// Q embedding each column in the next. The to-flavor (towers reaching
// upward) and the bar connecting map are derived by duality. Window must
// contain [-2h-20, -2h+4].
FloerModel build_rank_one(const Grading& h, TypeClass t, const Window& w);

// Reversed-orientation Brieskorn family member, to-flavor only: hm_to is a
// U-tower from 0 plus a (2k+1)-step truncated tower from 0, and the hs side
// carries gamma at 4Z>=0, reduced classes at 2,6,...,4k-2, alpha from 4k+2,
// beta from 4k+3. j_summand gradings inject an extra summand twice each and
// are excluded from exactness checks. Window must contain [-4, 8k+8].
FloerModel build_y4k1(int k, const Window& w, const std::vector<Grading>& j_summand = {});

enum class TowerAnswer { alpha, beta, gamma, none, unverifiable };
const char* to_string(TowerAnswer t);

// Which tower (image of a bar Q-subtower under istar) has a nonzero class at
// grading g. none when istar has no nonzero image there; unverifiable inside
// the guard band.
TowerAnswer tower_of(const FloerModel& m, const Grading& g);

struct CheckEntry {
  std::string check;
  Grading at;
  Check status = Check::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckEntry> entries;

  bool all_passed() const;
  int failures() const;
  std::vector<CheckEntry> failed() const;
};

// Per-grading structural audit of a model: exactness of each populated Gysin
// triangle, compatibility of the module actions with iota/pi/p_star/istar,
// Q-column injectivity, p_star injectivity, membership of the reduced
// generator in the image of iota, and contact-class placement.
VerifyReport verify_model(const FloerModel& m);

}  // namespace pin2fill
