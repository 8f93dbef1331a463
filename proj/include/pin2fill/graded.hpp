#pragma once

#include <map>
#include <optional>
#include <string>

#include "pin2fill/f2matrix.hpp"
#include "pin2fill/rational.hpp"

namespace pin2fill {

// Exact rational degree. A thin wrapper so gradings do not silently mix with
// other rational quantities.
struct Grading {
  Rational v;

  Grading() : v(0) {}
  explicit Grading(Rational r) : v(std::move(r)) {}
  explicit Grading(long long n) : v(n) {}
  static Grading of(long long num, long long den = 1) { return Grading(Rational(num, den)); }

  std::string str() const { return rational_to_string(v); }

  friend Grading operator+(const Grading& a, const Grading& b) { return Grading(a.v + b.v); }
  friend Grading operator-(const Grading& a, const Grading& b) { return Grading(a.v - b.v); }
  Grading operator-() const { return Grading(-v); }

  friend bool operator==(const Grading& a, const Grading& b) { return a.v == b.v; }
  friend bool operator!=(const Grading& a, const Grading& b) { return a.v != b.v; }
  friend bool operator<(const Grading& a, const Grading& b) { return a.v < b.v; }
  friend bool operator<=(const Grading& a, const Grading& b) { return a.v <= b.v; }
  friend bool operator>(const Grading& a, const Grading& b) { return a.v > b.v; }
  friend bool operator>=(const Grading& a, const Grading& b) { return a.v >= b.v; }
};

// (a - b) mod 4 when a - b is an integer; nothing otherwise.
std::optional<int> residue_mod4(const Grading& a, const Grading& b);

// Finite grading range with a guard band at each end. Checks whose answer
// depends on dimensions within `guard` of an end are reported as boundary
// (unverifiable) rather than true/false, because window truncation makes
// those blocks unreliable. Invariant expected of callers: guard >= the
// largest |degree| among maps checked against this window.
struct Window {
  Grading lo, hi;
  Rational guard;

  Window() : lo(), hi(), guard(0) {}
  Window(Grading lo_, Grading hi_, Rational guard_ = 4);

  bool contains(const Grading& g) const { return lo <= g && g <= hi; }
  bool checkable(const Grading& g) const {
    return Grading(lo.v + guard) <= g && g <= Grading(hi.v - guard);
  }
  bool operator==(const Window& o) const {
    return lo == o.lo && hi == o.hi && guard == o.guard;
  }
};

// Tri-state verdict for window-truncated checks. `boundary` is distinct from
// `fail`: the data needed for the check is cut off by the window.
enum class Check { pass, fail, boundary };
const char* to_string(Check c);

// Graded F2 vector space restricted to a window. extends_below/extends_above
// record whether the true object continues past the window ends, i.e.
// whether the edge dimensions are truncation artifacts.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(Window w, bool extends_below = false, bool extends_above = false)
      : window_(w), below_(extends_below), above_(extends_above) {}

  const Window& window() const { return window_; }
  bool extends_below() const { return below_; }
  bool extends_above() const { return above_; }

  // Dimension at g. Out-of-window queries are a caller error, never a silent
  // zero.
  int dim_at(const Grading& g) const;

  // Truncation-aware variant used when composing across window edges.
  int dim_clamped(const Grading& g) const;

  void set_dim(const Grading& g, int d);
  void add_dim(const Grading& g, int d = 1);

  const std::map<Grading, int>& dims() const { return dims_; }
  bool empty() const { return dims_.empty(); }
  Grading max_supported() const;  // throws on empty space

  bool operator==(const GradedSpace& o) const {
    return window_ == o.window_ && below_ == o.below_ && above_ == o.above_ && dims_ == o.dims_;
  }
  bool operator!=(const GradedSpace& o) const { return !(*this == o); }

 private:
  Window window_;
  std::map<Grading, int> dims_;  // only strictly positive entries stored
  bool below_ = false;
  bool above_ = false;
};

// Degree-homogeneous F2-linear map. Blocks are keyed by source grading; a
// missing block is zero. Shapes are validated on insertion: the block at g
// has dim(target, g+degree) rows and dim(source, g) columns.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedSpace source, GradedSpace target, Grading degree)
      : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

  static GradedMap zero(GradedSpace source, GradedSpace target, Grading degree) {
    return GradedMap(std::move(source), std::move(target), degree);
  }
  static GradedMap identity(const GradedSpace& space);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  const Grading& degree() const { return degree_; }

  // Insert/overwrite the block leaving grading g. Zero blocks are dropped so
  // maps have one canonical representation.
  void set_block(const Grading& g, const F2Matrix& m);

  const F2Matrix* block(const Grading& g) const;
  // Shaped zero when absent or out of window.
  F2Matrix block_or_zero(const Grading& g) const;

  const std::map<Grading, F2Matrix>& blocks() const { return blocks_; }

  bool operator==(const GradedMap& o) const;
  bool operator!=(const GradedMap& o) const { return !(*this == o); }

 private:
  GradedSpace source_, target_;
  Grading degree_;
  std::map<Grading, F2Matrix> blocks_;
};

// f after g. Requires target of g == source of f as spaces.
GradedMap compose(const GradedMap& f, const GradedMap& g);

// Exactness of A --f--> B --g--> C at B in grading g0: the image of f equals
// the kernel of g there. Answers boundary when g0 falls in the guard band of
// B's window.
Check is_exact_at(const GradedMap& f, const GradedMap& g, const Grading& g0);

// True iff the two maps agree block-by-block at every source grading g with
// g checkable in the source window and g + degree checkable in the target
// window. Maps must share source, target and degree.
bool agree_within_guard(const GradedMap& a, const GradedMap& b);

// Commutativity of
//
//   A --top--> B
//   |          |
//  left      right
//   v          v
//   C -bottom-> D
//
// compared as right(top(.)) == bottom(left(.)) inside the guard region.
bool check_square(const GradedMap& top, const GradedMap& bottom, const GradedMap& left,
                  const GradedMap& right);

}  // namespace pin2fill
