#include "pin2fill/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pin2fill {

namespace {

using json = nlohmann::ordered_json;

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// "input: k1 = v1, k2 = v2" over the non-null echo fields.
std::string echo_line(const json& input) {
  std::string s = "input:";
  bool first = true;
  for (const auto& item : input.items()) {
    if (item.value().is_null()) continue;
    s += (first ? " " : ", ");
    s += item.key() + " = " + scalar_str(item.value());
    first = false;
  }
  if (first) s += " (none)";
  return s;
}

const char* tower_letter(TowerAnswer t) {
  switch (t) {
    case TowerAnswer::alpha: return "A";
    case TowerAnswer::beta: return "B";
    case TowerAnswer::gamma: return "G";
    case TowerAnswer::none: return ".";
    case TowerAnswer::unverifiable: return "?";
  }
  return "?";
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string dim_cell(int d, bool star = false) {
  std::string s = d == 0 ? "." : std::to_string(d);
  if (star) s += "*";
  return s;
}

json verification_json(const VerifyReport& rep) {
  int pass = 0, boundary = 0, fail = 0;
  for (const CheckEntry& e : rep.entries) {
    if (e.status == Check::pass) pass++;
    else if (e.status == Check::boundary) boundary++;
    else fail++;
  }
  json v;
  v["passed"] = rep.all_passed();
  v["pass_count"] = pass;
  v["boundary_count"] = boundary;
  v["fail_count"] = fail;
  v["failures"] = json::array();
  for (const CheckEntry& e : rep.failed()) {
    json f;
    f["check"] = e.check;
    f["at"] = e.at.str();
    f["detail"] = e.detail;
    v["failures"].push_back(f);
  }
  return v;
}

}  // namespace

json constraint_to_json(const FillingConstraint& fc) {
  json v;
  v["scope"] = to_string(fc.scope);
  v["even"] = fc.even;
  if (fc.b2plus) v["b2plus"] = *fc.b2plus; else v["b2plus"] = nullptr;
  if (fc.b2minus) v["b2minus"] = *fc.b2minus; else v["b2minus"] = nullptr;
  if (fc.lattice) v["lattice"] = fc.lattice->name(); else v["lattice"] = nullptr;
  v["note"] = fc.note;
  return v;
}

json entry_summary_json(const ManifoldEntry& m) {
  json e;
  e["name"] = m.name;
  e["h"] = rational_to_string(m.h);
  if (m.reduced_rank)
    e["reduced_rank"] = m.reduced_rank->convert_to<long long>();
  else
    e["reduced_rank"] = "unknown";
  if (m.type) e["type"] = to_string(*m.type); else e["type"] = nullptr;
  if (m.contact) {
    json c;
    c["d"] = rational_to_string(m.contact->d.v);
    c["tower"] = to_string(m.contact->tower);
    c["j_invariant"] = m.contact->j_invariant;
    e["contact"] = c;
  } else {
    e["contact"] = nullptr;
  }
  e["notes"] = m.notes;
  return e;
}

Report report_constraint(const std::string& command, json input, const FillingConstraint& fc,
                         const std::optional<EulerBound>& euler) {
  std::ostringstream os;
  os << echo_line(input) << "\n";
  os << "scope: " << to_string(fc.scope) << "\n";
  if (fc.scope == Scope::indefinite) {
    os << "parity: " << (fc.even ? "even" : "odd") << "\n";
    if (fc.b2plus) os << "b2+ = " << *fc.b2plus << "\n";
    if (fc.b2minus) os << "b2- = " << *fc.b2minus << "\n";
    os << "lattice: " << (fc.lattice ? fc.lattice->name() : std::string("none")) << "\n";
  }
  if (!fc.note.empty()) os << "note: " << fc.note << "\n";
  if (euler) {
    if (euler->chi_indefinite) os << "chi (indefinite) = " << *euler->chi_indefinite << "\n";
    if (euler->chi_negdef_max)
      os << "chi (negative definite) <= " << *euler->chi_negdef_max << "\n";
  }

  Report r;
  r.data["command"] = command;
  r.data["input"] = std::move(input);
  r.data["verdict"] = constraint_to_json(fc);
  if (euler) {
    json e;
    if (euler->chi_indefinite) e["chi_indefinite"] = *euler->chi_indefinite;
    else e["chi_indefinite"] = nullptr;
    if (euler->chi_negdef_max) e["chi_negdef_max"] = *euler->chi_negdef_max;
    else e["chi_negdef_max"] = nullptr;
    r.data["euler"] = e;
  }
  r.text = os.str();
  return r;
}

Report report_catalog_list(const std::vector<ManifoldEntry>& entries, json input) {
  std::vector<std::array<std::string, 4>> cells;
  for (const ManifoldEntry& m : entries) {
    std::string rank = m.reduced_rank ? "rank " + m.reduced_rank->str() : "rank unknown";
    std::string cls;
    if (m.type) {
      cls = std::string("type ") + to_string(*m.type);
    } else if (m.contact) {
      cls = "contact d = " + rational_to_string(m.contact->d.v) + ", " +
            to_string(m.contact->tower);
    }
    cells.push_back({m.name, "h = " + rational_to_string(m.h), rank, cls});
  }
  std::array<std::size_t, 3> width = {0, 0, 0};
  for (const auto& row : cells)
    for (int c = 0; c < 3; c++) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  os << echo_line(input) << "\n";
  for (const auto& row : cells) {
    std::string line = pad_right(row[0], width[0]) + "  " + pad_right(row[1], width[1]) +
                       "  " + pad_right(row[2], width[2]) + "  " + row[3];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }

  Report r;
  r.data["command"] = "catalog-list";
  r.data["input"] = std::move(input);
  r.data["entries"] = json::array();
  for (const ManifoldEntry& m : entries) r.data["entries"].push_back(entry_summary_json(m));
  r.text = os.str();
  return r;
}

Report report_catalog_show(const ManifoldEntry& m, json input) {
  std::ostringstream os;
  os << "name: " << m.name << "\n";
  os << "h = " << rational_to_string(m.h) << "\n";
  os << "reduced rank: " << (m.reduced_rank ? m.reduced_rank->str() : std::string("unknown"))
     << "\n";
  os << "type: " << (m.type ? to_string(*m.type) : "none") << "\n";
  if (m.contact) {
    os << "contact: d = " << rational_to_string(m.contact->d.v) << ", tower "
       << to_string(m.contact->tower) << ", "
       << (m.contact->j_invariant ? "j-invariant" : "not j-invariant") << "\n";
  } else {
    os << "contact: none\n";
  }
  os << "notes: " << m.notes << "\n";

  Report r;
  r.data["command"] = "catalog-show";
  r.data["input"] = std::move(input);
  r.data["entry"] = entry_summary_json(m);
  r.text = os.str();
  return r;
}

Report report_gysin(const FloerModel& m, const Grading& display_lo, const Grading& display_hi,
                    const VerifyReport& verification, json input) {
  // rows over the model's grading lattice, top down
  std::vector<Grading> rows;
  {
    Rational frac = m.anchor.v - Rational(floor_rational(m.anchor.v));
    Int top = floor_rational(display_hi.v - frac);
    Int bot = -floor_rational(-(display_lo.v - frac));
    for (Int n = top; n >= bot; n--) rows.push_back(Grading(frac + Rational(n)));
  }

  const bool has_hat = m.hat.has_value();
  const bool has_to = m.to.has_value();

  struct RowCells {
    std::string g, hs_hat, hm_hat, hs_to, hm_to, bar, col, tower;
  };
  std::vector<RowCells> cells;
  json table = json::array();
  for (const Grading& g : rows) {
    int d_hs_hat = has_hat ? m.hs_hat().dim_at(g) : 0;
    int d_hm_hat = has_hat ? m.hm_hat().dim_at(g) : 0;
    int d_hs_to = has_to ? m.hs_to().dim_at(g) : 0;
    int d_hm_to = has_to ? m.hm_to().dim_at(g) : 0;
    int d_bar = m.bar.dim_at(g);
    bool star = m.contact && m.reduced_to && g == m.reduced_to->at;
    std::optional<int> col = m.column_of(g);
    TowerAnswer tower = has_to ? tower_of(m, g) : TowerAnswer::none;

    RowCells rc;
    rc.g = g.str();
    rc.hs_hat = has_hat ? dim_cell(d_hs_hat) : "-";
    rc.hm_hat = has_hat ? dim_cell(d_hm_hat) : "-";
    rc.hs_to = has_to ? dim_cell(d_hs_to) : "-";
    rc.hm_to = has_to ? dim_cell(d_hm_to, star) : "-";
    rc.bar = dim_cell(d_bar);
    rc.col = col ? "c" + std::to_string(*col) : ".";
    rc.tower = tower_letter(tower);
    cells.push_back(rc);

    json row;
    row["g"] = g.str();
    if (has_hat) {
      row["hs_hat"] = d_hs_hat;
      row["hm_hat"] = d_hm_hat;
    } else {
      row["hs_hat"] = nullptr;
      row["hm_hat"] = nullptr;
    }
    if (has_to) {
      row["hs_to"] = d_hs_to;
      row["hm_to"] = d_hm_to;
    } else {
      row["hs_to"] = nullptr;
      row["hm_to"] = nullptr;
    }
    row["bar"] = d_bar;
    if (col) row["column"] = *col; else row["column"] = nullptr;
    row["tower"] = to_string(tower);
    row["contact"] = star;
    table.push_back(row);
  }

  std::size_t gw = 1;
  for (const RowCells& rc : cells) gw = std::max(gw, rc.g.size());

  std::ostringstream os;
  os << echo_line(input) << "\n";
  os << "model: " << m.name << "\n";
  os << "display window: [" << display_lo.str() << ", " << display_hi.str() << "]\n";
  os << "model window: [" << m.window.lo.str() << ", " << m.window.hi.str()
     << "]  guard: " << rational_to_string(m.window.guard) << "\n";
  os << "\n";
  os << pad_left("g", gw) << " | hs^  hm^ | hs~  hm~ | bar | col tw\n";
  os << std::string(gw + 36, '-') << "\n";
  for (const RowCells& rc : cells) {
    os << pad_left(rc.g, gw) << " | " << pad_left(rc.hs_hat, 3) << " " << pad_left(rc.hm_hat, 4)
       << " | " << pad_left(rc.hs_to, 3) << " " << pad_left(rc.hm_to, 4) << " | "
       << pad_left(rc.bar, 3) << " | " << pad_left(rc.col, 3) << " " << pad_left(rc.tower, 2)
       << "\n";
  }
  os << "towers: A = alpha, B = beta, G = gamma; '*' marks the contact class\n";
  os << "\n";

  json ver = verification_json(verification);
  os << "checks: " << ver["pass_count"].get<int>() << " passed, "
     << ver["boundary_count"].get<int>() << " boundary, " << ver["fail_count"].get<int>()
     << " failed\n";
  for (const CheckEntry& e : verification.failed()) {
    os << "FAIL " << e.check << " at " << e.at.str();
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
  }
  os << "verification: " << (verification.all_passed() ? "PASS" : "FAIL") << "\n";

  Report r;
  r.data["command"] = "gysin";
  r.data["input"] = std::move(input);
  r.data["model"] = m.name;
  {
    json w;
    w["lo"] = m.window.lo.str();
    w["hi"] = m.window.hi.str();
    w["guard"] = rational_to_string(m.window.guard);
    r.data["model_window"] = w;
    json d;
    d["lo"] = display_lo.str();
    d["hi"] = display_hi.str();
    r.data["display_window"] = d;
  }
  r.data["table"] = std::move(table);
  r.data["verification"] = std::move(ver);
  r.text = os.str();
  return r;
}

Report report_cobmap(int b2plus, int b2minus, const BarMap& map) {
  json input;
  input["b2plus"] = b2plus;
  input["b2minus"] = b2minus;

  std::ostringstream os;
  os << echo_line(input) << "\n";
  os << "bar-level map: " << map.str() << "\n";
  if (map.kind == BarMap::Kind::mono) {
    os << "q-power = " << map.qpow << "\n";
    os << "degree = " << map.degree.str() << "\n";
  }

  Report r;
  r.data["command"] = "cobmap";
  r.data["input"] = std::move(input);
  json v;
  if (map.kind == BarMap::Kind::zero) {
    v["kind"] = "zero";
    v["qpow"] = nullptr;
    v["degree"] = nullptr;
  } else {
    v["kind"] = "mono";
    v["qpow"] = map.qpow;
    v["degree"] = map.degree.str();
  }
  v["display"] = map.str();
  r.data["verdict"] = v;
  r.text = os.str();
  return r;
}

Report report_lattice(int b2plus, int b2minus, const LatticeForm& form) {
  json input;
  input["b2plus"] = b2plus;
  input["b2minus"] = b2minus;

  int rank = 2 * form.p + 8 * form.q;
  int signature = 8 * form.eps * form.q;

  std::ostringstream os;
  os << echo_line(input) << "\n";
  os << "rank = " << rank << "\n";
  os << "signature = " << signature << "\n";
  os << "parity: even\n";
  os << "lattice: " << form.name() << "\n";

  Report r;
  r.data["command"] = "lattice";
  r.data["input"] = std::move(input);
  json v;
  v["name"] = form.name();
  v["p"] = form.p;
  v["q"] = form.q;
  v["eps"] = form.eps;
  v["rank"] = rank;
  v["signature"] = signature;
  r.data["verdict"] = v;
  r.text = os.str();
  return r;
}

}  // namespace pin2fill
