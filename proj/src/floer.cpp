#include "pin2fill/floer.hpp"

#include <array>
#include <sstream>

#include "pin2fill/errors.hpp"

namespace pin2fill {

namespace {

const Grading kOne(1), kTwo(2), kThree(3), kFour(4);

F2Matrix unit_block(int rows, int cols, int r, int c) {
  F2Matrix m(rows, cols);
  m.set(r, c, true);
  return m;
}

// Support of a tower reaching downward from `top` in steps of `step`,
// clipped to the window.
std::set<Grading> down_tower(const Grading& top, long long step, const Window& w) {
  std::set<Grading> out;
  if (top < w.lo) return out;
  Int a0 = 0;
  if (top > w.hi) {
    Rational excess = (top.v - w.hi.v) / step;
    a0 = -floor_rational(-excess);  // ceil
  }
  for (Int a = a0;; a++) {
    Grading g(top.v - Rational(a) * step);
    if (g < w.lo) break;
    out.insert(g);
  }
  return out;
}

// Support of a tower reaching upward from `bottom`.
std::set<Grading> up_tower(const Grading& bottom, long long step, const Window& w) {
  std::set<Grading> out;
  if (bottom > w.hi) return out;
  Int a0 = 0;
  if (bottom < w.lo) {
    Rational deficit = (w.lo.v - bottom.v) / step;
    a0 = -floor_rational(-deficit);
  }
  for (Int a = a0;; a++) {
    Grading g(bottom.v + Rational(a) * step);
    if (g > w.hi) break;
    out.insert(g);
  }
  return out;
}

// Bar flavor is determined by its identification shift: one class at every
// grading shift - a - 4Z for a in {0,1,2}.
GradedSpace make_bar(const Window& w, const Grading& shift) {
  GradedSpace bar(w, true, true);
  // iterate g = shift + a over the integer lattice through shift
  Int start = -floor_rational(-(w.lo.v - shift.v));  // ceil(lo - shift)
  for (Int a = start;; a++) {
    Grading g(shift.v + Rational(a));
    if (g > w.hi) break;
    Int r = ((-a) % 4 + 4) % 4;
    if (r <= 2) bar.add_dim(g);
  }
  return bar;
}

GradedMap make_bar_v(const GradedSpace& bar) {
  GradedMap v(bar, bar, -kFour);
  for (const auto& [g, d] : bar.dims())
    if (bar.dim_clamped(g - kFour) > 0) v.set_block(g, unit_block(1, 1, 0, 0));
  return v;
}

int bar_qindex_of(const Grading& shift, const Grading& g) {
  auto r = residue_mod4(shift, g);
  return r ? *r : 3;
}

GradedMap make_bar_q(const GradedSpace& bar, const Grading& shift) {
  GradedMap q(bar, bar, -kOne);
  for (const auto& [g, d] : bar.dims()) {
    int a = bar_qindex_of(shift, g);
    if (a <= 1 && bar.dim_clamped(g - kOne) > 0) q.set_block(g, unit_block(1, 1, 0, 0));
  }
  return q;
}

// p_star is the degree-preserving inclusion of each hs_hat class into the
// bar class of the same grading; the builder picked the shift so that the
// Q-column index matches the bar Q-subtower index.
GradedMap make_p_star(const GradedSpace& hs, const GradedSpace& bar) {
  GradedMap p(hs, bar, Grading(0));
  for (const auto& [g, d] : hs.dims()) {
    if (bar.dim_clamped(g) != 1)
      throw StructuralError("internal: bar shift misaligned with hs_hat at " + g.str());
    p.set_block(g, unit_block(1, 1, 0, 0));
  }
  return p;
}

GradedMap make_istar(const GradedSpace& bar, const Grading& shift, const GradedSpace& hs_to,
                     const std::array<const std::set<Grading>*, 3>& tower_by_qindex) {
  GradedMap istar(bar, hs_to, -kOne);
  for (const auto& [g, d] : bar.dims()) {
    int a = bar_qindex_of(shift, g);
    if (a > 2) continue;
    const std::set<Grading>& tower = *tower_by_qindex[a];
    if (tower.count(g - kOne)) istar.set_block(g, unit_block(1, 1, 0, 0));
  }
  return istar;
}

}  // namespace

TypeClass dual_type(TypeClass t) { return t == TypeClass::I ? TypeClass::II : TypeClass::I; }

const char* to_string(TypeClass t) { return t == TypeClass::I ? "I" : "II"; }

std::optional<TypeClass> type_from_string(const std::string& s) {
  if (s == "I") return TypeClass::I;
  if (s == "II") return TypeClass::II;
  return std::nullopt;
}

const char* to_string(Tower t) {
  switch (t) {
    case Tower::alpha: return "alpha";
    case Tower::beta: return "beta";
    case Tower::gamma: return "gamma";
  }
  return "?";
}

std::optional<Tower> tower_from_string(const std::string& s) {
  if (s == "alpha") return Tower::alpha;
  if (s == "beta") return Tower::beta;
  if (s == "gamma") return Tower::gamma;
  return std::nullopt;
}

const char* to_string(TowerAnswer t) {
  switch (t) {
    case TowerAnswer::alpha: return "alpha";
    case TowerAnswer::beta: return "beta";
    case TowerAnswer::gamma: return "gamma";
    case TowerAnswer::none: return "none";
    case TowerAnswer::unverifiable: return "unverifiable";
  }
  return "?";
}

const GradedSpace& FloerModel::hm_hat() const {
  if (!hat) throw StructuralError("model '" + name + "' has no hat flavor");
  return hat->hm;
}
const GradedSpace& FloerModel::hs_hat() const {
  if (!hat) throw StructuralError("model '" + name + "' has no hat flavor");
  return hat->hs;
}
const GradedSpace& FloerModel::hm_to() const {
  if (!to) throw StructuralError("model '" + name + "' has no to flavor");
  return to->hm;
}
const GradedSpace& FloerModel::hs_to() const {
  if (!to) throw StructuralError("model '" + name + "' has no to flavor");
  return to->hs;
}

std::optional<int> FloerModel::column_of(const Grading& g) const {
  auto it = column.find(g);
  if (it == column.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FloerModel::bar_qindex(const Grading& g) const {
  if (bar.dim_clamped(g) == 0) return std::nullopt;
  int a = bar_qindex_of(hs_bar_shift, g);
  if (a > 2) return std::nullopt;
  return a;
}

FloerModel build_s3(const Window& w) {
  if (w.hi.v - w.lo.v < 8)
    throw StructuralError("build_s3: window must span at least two period-4 blocks");

  FloerModel m;
  m.name = "s3";
  m.window = w;
  m.anchor = Grading(-1);
  m.froyshov = Grading(0);

  // hat flavor: three V-columns topped at -1, -2, -3; U-tower topped at -1.
  std::array<std::set<Grading>, 3> col = {down_tower(Grading(-1), 4, w),
                                          down_tower(Grading(-2), 4, w),
                                          down_tower(Grading(-3), 4, w)};
  GradedSpace hs(w, true, false), hm(w, true, false);
  for (int i = 0; i < 3; i++)
    for (const Grading& g : col[i]) {
      hs.add_dim(g);
      m.column[g] = i;
    }
  std::set<Grading> hmsup = down_tower(Grading(-1), 2, w);
  for (const Grading& g : hmsup) hm.add_dim(g);

  GradedMap q(hs, hs, -kOne), v(hs, hs, -kFour), iota(hs, hm, Grading(0)),
      pi(hm, hs, Grading(0)), u(hm, hm, -kTwo);
  for (int i = 0; i < 2; i++)
    for (const Grading& g : col[i])
      if (col[i + 1].count(g - kOne)) q.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto& c : col)
    for (const Grading& g : c)
      if (c.count(g - kFour)) v.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : hmsup)
    if (hmsup.count(g - kTwo)) u.set_block(g, unit_block(1, 1, 0, 0));
  // iota is an isomorphism on the top column, zero on the other two; pi
  // inverts that on the bottom column.
  for (const Grading& g : col[0])
    if (hmsup.count(g)) iota.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : hmsup)
    if (col[2].count(g)) pi.set_block(g, unit_block(1, 1, 0, 0));
  m.hat = GysinTriangle{hs, hm, q, iota, pi, v, u};

  m.hs_bar_shift = Grading(-1);
  m.bar = make_bar(w, m.hs_bar_shift);
  m.v_bar = make_bar_v(m.bar);
  m.q_bar = make_bar_q(m.bar, m.hs_bar_shift);
  m.p_star = make_p_star(hs, m.bar);

  // to flavor: U-tower upward from 0; alpha from 0, beta from 1, gamma
  // from 2 (the connecting map drops degree by one, so the gamma bottom sits
  // one below the lowest surviving Q^0 bar class).
  std::set<Grading> tgamma = up_tower(Grading(2), 4, w), tbeta = up_tower(Grading(1), 4, w),
                    talpha = up_tower(Grading(0), 4, w);
  GradedSpace hst(w, false, true), hmt(w, false, true);
  for (const Grading& g : tgamma) hst.add_dim(g);
  for (const Grading& g : tbeta) hst.add_dim(g);
  for (const Grading& g : talpha) hst.add_dim(g);
  std::set<Grading> tplus = up_tower(Grading(0), 2, w);
  for (const Grading& g : tplus) hmt.add_dim(g);

  GradedMap qt(hst, hst, -kOne), vt(hst, hst, -kFour), iotat(hst, hmt, Grading(0)),
      pit(hmt, hst, Grading(0)), ut(hmt, hmt, -kTwo);
  for (const Grading& g : tgamma)
    if (tbeta.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tbeta)
    if (talpha.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto* tw : {&tgamma, &tbeta, &talpha})
    for (const Grading& g : *tw)
      if (tw->count(g - kFour)) vt.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tplus)
    if (tplus.count(g - kTwo)) ut.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tgamma)
    if (tplus.count(g)) iotat.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tplus)
    if (talpha.count(g)) pit.set_block(g, unit_block(1, 1, 0, 0));
  m.to = GysinTriangle{hst, hmt, qt, iotat, pit, vt, ut};

  m.istar = make_istar(m.bar, m.hs_bar_shift, hst, {&tgamma, &tbeta, &talpha});
  return m;
}

FloerModel build_rank_one(const Grading& h, TypeClass t, const Window& w) {
  Grading mtop(-2 * h.v);  // -2h: grading of the hm_to tower bottom
  if (!(w.lo <= mtop - Grading(20) && w.hi >= mtop + kFour))
    throw StructuralError("build_rank_one: window must contain [-2h-20, -2h+4]");

  FloerModel m;
  {
    std::ostringstream os;
    os << "rank-one(" << to_string(t) << ",h=" << rational_to_string(h.v) << ")";
    m.name = os.str();
  }
  m.window = w;
  m.anchor = mtop;
  m.type = t;
  m.froyshov = h;
  const bool type1 = t == TypeClass::I;

  // hat flavor. Column tops per type; the extra hm class sits at -2h (I) or
  // -2h-1 (II), and in the latter case shares its grading with the tower top
  // (basis order: tower first, extra second).
  std::array<Grading, 3> tops =
      type1 ? std::array<Grading, 3>{mtop - kThree, mtop, mtop - kOne}
            : std::array<Grading, 3>{mtop - kThree, mtop - kFour, mtop - kOne};
  std::array<std::set<Grading>, 3> col;
  GradedSpace hs(w, true, false), hm(w, true, false);
  for (int i = 0; i < 3; i++) {
    col[i] = down_tower(tops[i], 4, w);
    for (const Grading& g : col[i]) {
      hs.add_dim(g);
      m.column[g] = i;
    }
  }
  std::set<Grading> hmsup = down_tower(mtop - kOne, 2, w);
  for (const Grading& g : hmsup) hm.add_dim(g);
  Grading xg = type1 ? mtop : mtop - kOne;
  if (w.contains(xg)) hm.add_dim(xg);
  m.reduced_hat = ReducedGenerator{xg, type1 ? 0 : 1};

  GradedMap q(hs, hs, -kOne), v(hs, hs, -kFour), iota(hs, hm, Grading(0)),
      pi(hm, hs, Grading(0)), u(hm, hm, -kTwo);
  for (int i = 0; i < 2; i++)
    for (const Grading& g : col[i])
      if (col[i + 1].count(g - kOne)) q.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto& c : col)
    for (const Grading& g : c)
      if (c.count(g - kFour)) v.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : hmsup) {
    int rows = hm.dim_clamped(g - kTwo);
    if (rows > 0) u.set_block(g, unit_block(rows, hm.dim_clamped(g), 0, 0));
  }
  // iota: the bottom column lands in the U-tower; the top of the column
  // holding the top-degree class lands on the reduced generator. Everything
  // hit by Q dies.
  for (const Grading& g : col[0])
    if (hmsup.count(g)) iota.set_block(g, unit_block(hm.dim_clamped(g), 1, 0, 0));
  if (type1) {
    if (w.contains(mtop)) iota.set_block(mtop, unit_block(1, 1, 0, 0));
  } else {
    if (w.contains(mtop - kOne)) iota.set_block(mtop - kOne, unit_block(2, 1, 1, 0));
  }
  // pi: kills the image of iota, inverts onto the last column at gradings
  // congruent to its top.
  for (const Grading& g : hmsup) {
    auto r = residue_mod4(mtop - kOne, g);
    if (!r || *r != 0 || !col[2].count(g)) continue;
    int cols = hm.dim_clamped(g);
    pi.set_block(g, unit_block(1, cols, 0, 0));
  }
  m.hat = GysinTriangle{hs, hm, q, iota, pi, v, u};

  m.hs_bar_shift = mtop - kThree;
  m.bar = make_bar(w, m.hs_bar_shift);
  m.v_bar = make_bar_v(m.bar);
  m.q_bar = make_bar_q(m.bar, m.hs_bar_shift);
  m.p_star = make_p_star(hs, m.bar);

  // to flavor, derived by duality from the hat flavor of the reversed
  // orientation: gamma always bottoms at -2h; the other two towers and the
  // reduced class position depend on the type.
  std::set<Grading> tgamma = up_tower(mtop, 4, w);
  std::set<Grading> tbeta = up_tower(type1 ? mtop + kThree : mtop - kOne, 4, w);
  std::set<Grading> talpha = up_tower(mtop + kTwo, 4, w);
  GradedSpace hst(w, false, true), hmt(w, false, true);
  for (const auto* tw : {&tgamma, &tbeta, &talpha})
    for (const Grading& g : *tw) hst.add_dim(g);
  std::set<Grading> tplus = up_tower(mtop, 2, w);
  for (const Grading& g : tplus) hmt.add_dim(g);
  Grading xgt = type1 ? mtop : mtop - kOne;  // reduced class in hm_to
  if (w.contains(xgt)) hmt.add_dim(xgt);
  m.reduced_to = ReducedGenerator{xgt, type1 ? 1 : 0};

  GradedMap qt(hst, hst, -kOne), vt(hst, hst, -kFour), iotat(hst, hmt, Grading(0)),
      pit(hmt, hst, Grading(0)), ut(hmt, hmt, -kTwo);
  for (const Grading& g : tgamma)
    if (tbeta.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tbeta)
    if (talpha.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto* tw : {&tgamma, &tbeta, &talpha})
    for (const Grading& g : *tw)
      if (tw->count(g - kFour)) vt.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tplus) {
    int rows = hmt.dim_clamped(g - kTwo);
    if (rows > 0) ut.set_block(g, unit_block(rows, hmt.dim_clamped(g), 0, 0));
  }
  for (const Grading& g : tgamma) {
    int rows = hmt.dim_clamped(g);
    if (rows > 0) iotat.set_block(g, unit_block(rows, 1, 0, 0));
  }
  // pi sends the reduced generator to the bottom of the tower named by the
  // contact data, and the U-tower onto alpha.
  if (w.contains(xgt)) {
    if (type1)
      pit.set_block(xgt, unit_block(1, 2, 0, 1));
    else
      pit.set_block(xgt, unit_block(1, 1, 0, 0));
  }
  for (const Grading& g : tplus)
    if (talpha.count(g)) pit.set_block(g, unit_block(1, hmt.dim_clamped(g), 0, 0));
  m.to = GysinTriangle{hst, hmt, qt, iotat, pit, vt, ut};

  m.istar = make_istar(m.bar, m.hs_bar_shift, hst, {&tgamma, &tbeta, &talpha});
  m.contact = ContactClass{xgt, type1 ? Tower::gamma : Tower::beta, true};
  return m;
}

FloerModel build_y4k1(int k, const Window& w, const std::vector<Grading>& j_summand) {
  if (k < 1) throw DomainError("build_y4k1: k must be at least 1");
  if (!(w.lo <= Grading(-4) && w.hi >= Grading(8 * k + 8)))
    throw StructuralError("build_y4k1: window must contain [-4, 8k+8]");

  FloerModel m;
  m.name = "y4k1(k=" + std::to_string(k) + ")";
  m.window = w;
  m.anchor = Grading(0);

  // hm_to: U-tower upward from 0 plus a (2k+1)-step truncated tower on
  // 0..4k. Component layout per grading: [tplus, trunc, j, j].
  struct Layout {
    int tplus = -1, trunc = -1, j1 = -1, j2 = -1;
  };
  std::map<Grading, Layout> lay;
  std::set<Grading> tplus = up_tower(Grading(0), 2, w);
  std::set<Grading> trunc;
  for (int i = 0; i <= 2 * k; i++)
    if (w.contains(Grading(2 * i))) trunc.insert(Grading(2 * i));
  GradedSpace hmt(w, false, true);
  auto add_component = [&](const Grading& g, int Layout::*slot) {
    lay[g].*slot = hmt.dim_clamped(g);
    hmt.add_dim(g);
  };
  for (const Grading& g : tplus) add_component(g, &Layout::tplus);
  for (const Grading& g : trunc) add_component(g, &Layout::trunc);
  for (const Grading& g : j_summand) {
    if (!w.contains(g)) throw StructuralError("build_y4k1: J summand grading outside window");
    add_component(g, &Layout::j1);
    add_component(g, &Layout::j2);
    m.skip_exactness.insert(g);
  }
  m.reduced_to = ReducedGenerator{Grading(0), lay[Grading(0)].trunc};

  // hs_to: gamma from 0, reduced classes at 2, 6, ..., 4k-2, alpha from
  // 4k+2, beta from 4k+3.
  std::set<Grading> tgamma = up_tower(Grading(0), 4, w);
  std::set<Grading> talpha = up_tower(Grading(4 * k + 2), 4, w);
  std::set<Grading> tbeta = up_tower(Grading(4 * k + 3), 4, w);
  std::set<Grading> reduced;
  for (int a = 0; a < k; a++)
    if (w.contains(Grading(4 * a + 2))) reduced.insert(Grading(4 * a + 2));
  GradedSpace hst(w, false, true);
  for (const auto* tw : {&tgamma, &talpha, &tbeta, &reduced})
    for (const Grading& g : *tw) hst.add_dim(g);

  GradedMap qt(hst, hst, -kOne), vt(hst, hst, -kFour), iotat(hst, hmt, Grading(0)),
      pit(hmt, hst, Grading(0)), ut(hmt, hmt, -kTwo);
  for (const Grading& g : tgamma)
    if (tbeta.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const Grading& g : tbeta)
    if (talpha.count(g - kOne)) qt.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto* tw : {&tgamma, &talpha, &tbeta, &reduced})
    for (const Grading& g : *tw)
      if (tw->count(g - kFour)) vt.set_block(g, unit_block(1, 1, 0, 0));
  for (const auto& [g, L] : lay) {
    if (!w.contains(g - kTwo)) continue;
    auto prev = lay.find(g - kTwo);
    if (prev == lay.end()) continue;
    int rows = hmt.dim_clamped(g - kTwo), cols = hmt.dim_clamped(g);
    F2Matrix blk(rows, cols);
    if (L.tplus >= 0 && prev->second.tplus >= 0) blk.set(prev->second.tplus, L.tplus, true);
    if (L.trunc >= 0 && prev->second.trunc >= 0) blk.set(prev->second.trunc, L.trunc, true);
    if (!blk.is_zero()) ut.set_block(g, blk);
  }
  // iota carries gamma and the reduced classes onto the U-tower.
  for (const auto* tw : {&tgamma, &reduced})
    for (const Grading& g : *tw) {
      auto L = lay.find(g);
      if (L == lay.end() || L->second.tplus < 0) continue;
      iotat.set_block(g, unit_block(hmt.dim_clamped(g), 1, L->second.tplus, 0));
    }
  // pi carries the truncated tower onto gamma / the reduced classes, and the
  // U-tower onto alpha above the truncation range.
  for (const auto& [g, L] : lay) {
    int cols = hmt.dim_clamped(g);
    if (L.trunc >= 0 && (tgamma.count(g) || reduced.count(g))) {
      pit.set_block(g, unit_block(1, cols, 0, L.trunc));
    } else if (L.trunc < 0 && L.tplus >= 0 && talpha.count(g)) {
      pit.set_block(g, unit_block(1, cols, 0, L.tplus));
    }
  }
  m.to = GysinTriangle{hst, hmt, qt, iotat, pit, vt, ut};

  if (!j_summand.empty()) {
    GradedMap js(hmt, hmt, Grading(0));
    for (const auto& [g, d] : hmt.dims()) {
      F2Matrix blk = F2Matrix::identity(d);
      auto L = lay.find(g);
      if (L != lay.end() && L->second.j1 >= 0) {
        int a = L->second.j1, b = L->second.j2;
        blk.set(a, a, false);
        blk.set(b, b, false);
        blk.set(a, b, true);
        blk.set(b, a, true);
      }
      js.set_block(g, blk);
    }
    m.jstar = js;
  }

  m.hs_bar_shift = Grading(1);
  m.bar = make_bar(w, m.hs_bar_shift);
  m.v_bar = make_bar_v(m.bar);
  m.q_bar = make_bar_q(m.bar, m.hs_bar_shift);
  m.istar = make_istar(m.bar, m.hs_bar_shift, hst, {&tgamma, &tbeta, &talpha});
  m.contact = ContactClass{Grading(0), Tower::gamma, true};
  return m;
}

TowerAnswer tower_of(const FloerModel& m, const Grading& g) {
  if (!m.istar) throw StructuralError("tower_of: model has no istar data");
  if (!m.window.contains(g)) throw DomainError("tower_of: grading outside window");
  if (!m.window.checkable(g)) return TowerAnswer::unverifiable;
  Grading gb = g + kOne;
  auto qi = m.bar_qindex(gb);
  if (!qi) return TowerAnswer::none;
  const F2Matrix* blk = m.istar->block(gb);
  if (!blk || blk->is_zero()) return TowerAnswer::none;
  switch (*qi) {
    case 0: return TowerAnswer::gamma;
    case 1: return TowerAnswer::beta;
    default: return TowerAnswer::alpha;
  }
}

bool VerifyReport::all_passed() const {
  for (const auto& e : entries)
    if (e.status == Check::fail) return false;
  return true;
}

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.status == Check::fail) n++;
  return n;
}

std::vector<CheckEntry> VerifyReport::failed() const {
  std::vector<CheckEntry> out;
  for (const auto& e : entries)
    if (e.status == Check::fail) out.push_back(e);
  return out;
}

namespace {

// Worst-of merge: fail beats boundary beats pass.
Check merge(Check a, Check b) {
  if (a == Check::fail || b == Check::fail) return Check::fail;
  if (a == Check::boundary || b == Check::boundary) return Check::boundary;
  return Check::pass;
}

struct Relation {
  std::string name;
  GradedMap lhs, rhs;
};

Check relation_at(const Relation& r, const Grading& g, std::string* why) {
  if (!r.lhs.source().window().checkable(g) ||
      !r.lhs.target().window().checkable(g + r.lhs.degree()))
    return Check::boundary;
  if (r.lhs.block_or_zero(g) != r.rhs.block_or_zero(g)) {
    *why += (why->empty() ? "" : "; ") + r.name;
    return Check::fail;
  }
  return Check::pass;
}

std::vector<Grading> lattice_gradings(const FloerModel& m) {
  std::vector<Grading> out;
  Rational lo = m.window.lo.v + m.window.guard;
  Rational hi = m.window.hi.v - m.window.guard;
  Int a = -floor_rational(-(lo - m.anchor.v));  // ceil(lo - anchor)
  for (;; a++) {
    Grading g(m.anchor.v + Rational(a));
    if (g.v > hi) break;
    out.push_back(g);
  }
  return out;
}

void verify_triangle(const FloerModel& m, const GysinTriangle& tri, const std::string& label,
                     bool hat_side, VerifyReport& rep) {
  std::vector<Relation> rels;
  GradedMap u2 = compose(tri.u_hm, tri.u_hm);
  rels.push_back({"iota*V == U^2*iota", compose(tri.iota, tri.v_hs), compose(u2, tri.iota)});
  rels.push_back({"pi*U^2 == V*pi", compose(tri.pi, u2), compose(tri.v_hs, tri.pi)});
  rels.push_back({"iota*Q == 0", compose(tri.iota, tri.q),
                  GradedMap::zero(tri.hs, tri.hm, -kOne)});
  rels.push_back({"Q^3 == 0", compose(tri.q, compose(tri.q, tri.q)),
                  GradedMap::zero(tri.hs, tri.hs, -kThree)});
  if (hat_side && m.p_star) {
    rels.push_back({"p*Q == Q*p", compose(*m.p_star, tri.q), compose(m.q_bar, *m.p_star)});
    rels.push_back({"p*V == V*p", compose(*m.p_star, tri.v_hs), compose(m.v_bar, *m.p_star)});
  }
  if (!hat_side && m.istar) {
    rels.push_back({"istar*Q == Q*istar", compose(*m.istar, m.q_bar),
                    compose(tri.q, *m.istar)});
    rels.push_back({"istar*V == V*istar", compose(*m.istar, m.v_bar),
                    compose(tri.v_hs, *m.istar)});
  }

  for (const Grading& g : lattice_gradings(m)) {
    // Exactness at the three triangle positions in grading g. The middle
    // (hm) position is skipped where an injected J summand hides data.
    Check hs_in = is_exact_at(tri.q, tri.iota, g);
    Check hs_out = is_exact_at(tri.pi, tri.q, g);
    Check hm_mid;
    std::string detail;
    if (!hat_side && m.skip_exactness.count(g)) {
      hm_mid = Check::boundary;
      detail = "hm position skipped: J summand";
    } else {
      hm_mid = is_exact_at(tri.iota, tri.pi, g);
    }
    Check ex = merge(merge(hs_in, hm_mid), hs_out);
    if (ex == Check::fail) {
      detail = "positions:";
      if (hs_in == Check::fail) detail += " hs-after-q";
      if (hm_mid == Check::fail) detail += " hm";
      if (hs_out == Check::fail) detail += " hs-before-q";
    }
    rep.entries.push_back({"exact[" + label + "]", g, ex, detail});

    Check rc = Check::pass;
    std::string why;
    bool any_boundary = false;
    for (const Relation& r : rels) {
      Check c = relation_at(r, g, &why);
      if (c == Check::boundary) any_boundary = true;
      rc = merge(rc, c);
    }
    if (rc == Check::pass && any_boundary) rc = Check::boundary;
    rep.entries.push_back({"raction[" + label + "]", g, rc, why});

    if (hat_side) {
      auto ci = m.column_of(g);
      if (ci && *ci <= 1) {
        bool inj = tri.q.block_or_zero(g).rank() == tri.hs.dim_clamped(g);
        rep.entries.push_back({"qcolumn[" + label + "]", g,
                               inj ? Check::pass : Check::fail,
                               inj ? "" : "column not carried injectively"});
      }
      if (m.p_star && tri.hs.dim_clamped(g) > 0) {
        bool inj = m.p_star->block_or_zero(g).rank() == tri.hs.dim_clamped(g);
        rep.entries.push_back({"pstar-inject", g, inj ? Check::pass : Check::fail,
                               inj ? "" : "p_star drops rank"});
      }
    }
  }
}

}  // namespace

VerifyReport verify_model(const FloerModel& m) {
  VerifyReport rep;
  if (m.hat) verify_triangle(m, *m.hat, "hat", true, rep);
  if (m.to) verify_triangle(m, *m.to, "to", false, rep);

  if (m.hat && m.reduced_hat) {
    const Grading& gr = m.reduced_hat->at;
    if (!m.window.checkable(gr)) {
      rep.entries.push_back({"reduced-in-iota", gr, Check::boundary, "guard band"});
    } else {
      std::vector<bool> e(m.hat->hm.dim_clamped(gr), false);
      e[m.reduced_hat->index] = true;
      bool ok = m.hat->iota.block_or_zero(gr).column_space_contains(e);
      rep.entries.push_back({"reduced-in-iota", gr, ok ? Check::pass : Check::fail,
                             ok ? "" : "reduced generator missed by iota"});
    }
  }

  if (m.to && m.contact && m.reduced_to && m.istar) {
    const Grading& gc = m.reduced_to->at;
    CheckEntry e{"contact-placement", gc, Check::pass, ""};
    if (gc != m.contact->d) {
      e.status = Check::fail;
      e.detail = "contact grading mismatch";
    } else if (!m.window.checkable(gc)) {
      e.status = Check::boundary;
      e.detail = "guard band";
    } else {
      F2Matrix blk = m.to->pi.block_or_zero(gc);
      bool nonzero = false;
      for (int i = 0; i < blk.rows(); i++) nonzero = nonzero || blk.get(i, m.reduced_to->index);
      TowerAnswer tw = tower_of(m, gc);
      bool match = nonzero && to_string(tw) == std::string(to_string(m.contact->tower));
      e.status = match ? Check::pass : Check::fail;
      if (!match)
        e.detail = nonzero ? std::string("lands in ") + to_string(tw) : "pi kills the class";
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace pin2fill
