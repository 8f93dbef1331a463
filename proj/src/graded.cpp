#include "pin2fill/graded.hpp"

#include <set>

#include "pin2fill/errors.hpp"

namespace pin2fill {

std::optional<int> residue_mod4(const Grading& a, const Grading& b) {
  Rational d = a.v - b.v;
  if (!is_integer(d)) return std::nullopt;
  Int n = numerator(d) % 4;
  if (n < 0) n += 4;
  return static_cast<int>(n);
}

Window::Window(Grading lo_, Grading hi_, Rational guard_) : lo(lo_), hi(hi_), guard(guard_) {
  if (!(lo < hi)) throw StructuralError("Window: lo must be below hi");
  if (guard < 0) throw StructuralError("Window: guard must be nonnegative");
}

const char* to_string(Check c) {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "fail";
    case Check::boundary: return "boundary";
  }
  return "?";
}

int GradedSpace::dim_at(const Grading& g) const {
  if (!window_.contains(g))
    throw DomainError("GradedSpace::dim_at: grading " + g.str() + " outside window [" +
                      window_.lo.str() + ", " + window_.hi.str() + "]");
  auto it = dims_.find(g);
  return it == dims_.end() ? 0 : it->second;
}

int GradedSpace::dim_clamped(const Grading& g) const {
  if (!window_.contains(g)) return 0;
  auto it = dims_.find(g);
  return it == dims_.end() ? 0 : it->second;
}

void GradedSpace::set_dim(const Grading& g, int d) {
  if (d < 0) throw StructuralError("GradedSpace::set_dim: negative dimension");
  if (!window_.contains(g))
    throw DomainError("GradedSpace::set_dim: grading outside window");
  if (d == 0)
    dims_.erase(g);
  else
    dims_[g] = d;
}

void GradedSpace::add_dim(const Grading& g, int d) { set_dim(g, dim_clamped(g) + d); }

Grading GradedSpace::max_supported() const {
  if (dims_.empty()) throw StructuralError("GradedSpace::max_supported: empty space");
  return dims_.rbegin()->first;
}

GradedMap GradedMap::identity(const GradedSpace& space) {
  GradedMap m(space, space, Grading(0));
  for (const auto& [g, d] : space.dims()) m.set_block(g, F2Matrix::identity(d));
  return m;
}

void GradedMap::set_block(const Grading& g, const F2Matrix& m) {
  if (!source_.window().contains(g))
    throw StructuralError("GradedMap::set_block: source grading outside window");
  Grading gt = g + degree_;
  int rows = target_.dim_clamped(gt);
  int cols = source_.dim_at(g);
  if (m.rows() != rows || m.cols() != cols)
    throw StructuralError("GradedMap::set_block: block at " + g.str() + " has shape " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  if (m.is_zero())
    blocks_.erase(g);
  else
    blocks_[g] = m;
}

const F2Matrix* GradedMap::block(const Grading& g) const {
  auto it = blocks_.find(g);
  return it == blocks_.end() ? nullptr : &it->second;
}

F2Matrix GradedMap::block_or_zero(const Grading& g) const {
  if (const F2Matrix* b = block(g)) return *b;
  return F2Matrix(target_.dim_clamped(g + degree_), source_.dim_clamped(g));
}

bool GradedMap::operator==(const GradedMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ &&
         blocks_ == o.blocks_;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (g.target() != f.source())
    throw StructuralError("compose: target of inner map differs from source of outer map");
  GradedMap out(g.source(), f.target(), f.degree() + g.degree());
  for (const auto& [s, inner] : g.blocks()) {
    Grading mid = s + g.degree();
    if (!f.source().window().contains(mid)) continue;
    F2Matrix outer = f.block_or_zero(mid);
    if (outer.rows() == 0) continue;
    F2Matrix prod = outer * inner;
    if (!prod.is_zero()) out.set_block(s, prod);
  }
  return out;
}

Check is_exact_at(const GradedMap& f, const GradedMap& g, const Grading& g0) {
  if (f.target() != g.source())
    throw StructuralError("is_exact_at: maps do not chain at a common middle space");
  const Window& w = g.source().window();
  if (!w.contains(g0)) throw DomainError("is_exact_at: grading outside window");
  if (!w.checkable(g0)) return Check::boundary;

  F2Matrix into = f.block_or_zero(g0 - f.degree());
  F2Matrix out = g.block_or_zero(g0);
  int image = into.rank();
  int kernel = g.source().dim_clamped(g0) - out.rank();
  if (image != kernel) return Check::fail;
  if (into.cols() > 0 && out.rows() > 0 && !(out * into).is_zero()) return Check::fail;
  return Check::pass;
}

bool agree_within_guard(const GradedMap& a, const GradedMap& b) {
  if (a.source() != b.source() || a.target() != b.target() || a.degree() != b.degree())
    throw StructuralError("agree_within_guard: maps are not comparable");
  std::set<Grading> keys;
  for (const auto& [g, d] : a.source().dims()) keys.insert(g);
  for (const auto& [g, m] : a.blocks()) keys.insert(g);
  for (const auto& [g, m] : b.blocks()) keys.insert(g);
  for (const Grading& g : keys) {
    if (!a.source().window().checkable(g)) continue;
    if (!a.target().window().checkable(g + a.degree())) continue;
    if (a.block_or_zero(g) != b.block_or_zero(g)) return false;
  }
  return true;
}

bool check_square(const GradedMap& top, const GradedMap& bottom, const GradedMap& left,
                  const GradedMap& right) {
  if (top.source() != left.source() || top.target() != right.source() ||
      left.target() != bottom.source() || right.target() != bottom.target())
    throw StructuralError("check_square: corner spaces do not match");
  if (top.degree() + right.degree() != left.degree() + bottom.degree())
    throw StructuralError("check_square: degrees around the square disagree");
  return agree_within_guard(compose(right, top), compose(bottom, left));
}

}  // namespace pin2fill
