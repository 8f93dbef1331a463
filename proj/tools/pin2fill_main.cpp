#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pin2fill/catalog.hpp"
#include "pin2fill/errors.hpp"
#include "pin2fill/report.hpp"

using namespace pin2fill;
using json = nlohmann::ordered_json;

namespace {

// Flag-level problems detected after CLI11 parsing (wrong flag combinations,
// malformed values). Mapped to the usage exit code.
struct UsageError {
  std::string msg;
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  std::optional<Rational> r = parse_rational(text);
  if (!r) throw UsageError{"malformed rational for " + flag + ": \"" + text + "\""};
  return *r;
}

void emit(const Report& r, bool json_out) {
  if (json_out)
    std::cout << r.json_text();
  else
    std::cout << r.text;
}

struct ObstructArgs {
  std::string type, h, contact_d, tower, C;
  bool json = false;
};

int run_obstruct(const ObstructArgs& a) {
  bool type_route = !a.type.empty() || !a.h.empty();
  bool contact_route = !a.contact_d.empty() || !a.tower.empty();
  if (type_route == contact_route)
    throw UsageError{"pass exactly one input group: --type with --h, or --contact-d with --tower"};

  std::optional<Rational> C;
  if (!a.C.empty()) C = parse_rational_flag(a.C, "--C");

  FillingConstraint fc;
  json input;
  if (type_route) {
    if (a.type.empty() || a.h.empty()) throw UsageError{"--type and --h must be given together"};
    std::optional<TypeClass> t = type_from_string(a.type);
    if (!t) throw UsageError{"unknown type \"" + a.type + "\" (expected I or II)"};
    Rational h = parse_rational_flag(a.h, "--h");
    input["type"] = to_string(*t);
    input["h"] = rational_to_string(h);
    input["C"] = a.C.empty() ? json(nullptr) : json(rational_to_string(*C));
    fc = theorem_main(h, *t);
  } else {
    if (a.contact_d.empty() || a.tower.empty())
      throw UsageError{"--contact-d and --tower must be given together"};
    std::optional<Tower> tower = tower_from_string(a.tower);
    if (!tower)
      throw UsageError{"unknown tower \"" + a.tower + "\" (expected alpha, beta or gamma)"};
    Rational d = parse_rational_flag(a.contact_d, "--contact-d");
    input["contact_d"] = rational_to_string(d);
    input["tower"] = to_string(*tower);
    input["C"] = a.C.empty() ? json(nullptr) : json(rational_to_string(*C));
    fc = theorem_contact({Grading(d), *tower, true});
  }

  std::optional<EulerBound> euler;
  if (C) euler = euler_bounds(fc, C);
  emit(report_constraint("obstruct", input, fc, euler), a.json);
  return 0;
}

std::vector<ManifoldEntry> effective_catalog(const std::string& file_flag, std::string* used) {
  std::string path = file_flag;
  if (path.empty()) {
    const char* env = std::getenv("PIN2FILL_CATALOG");
    if (env && *env) path = env;
  }
  *used = path;
  std::vector<ManifoldEntry> cat = builtin_catalog();
  if (!path.empty()) cat = merge_catalog(std::move(cat), load_catalog(path));
  return cat;
}

struct CatalogArgs {
  std::string action, name, file;
  bool json = false;
};

int run_catalog(const CatalogArgs& a) {
  std::string used_file;
  std::vector<ManifoldEntry> cat = effective_catalog(a.file, &used_file);
  json input;
  if (a.action != "list") input["name"] = a.name;
  input["file"] = used_file.empty() ? json(nullptr) : json(used_file);

  if (a.action == "list") {
    emit(report_catalog_list(cat, input), a.json);
    return 0;
  }
  const ManifoldEntry* entry = find_entry(cat, a.name);
  if (!entry) throw NotFoundError("no catalog entry named \"" + a.name + "\"");
  if (a.action == "show") {
    emit(report_catalog_show(*entry, input), a.json);
  } else {
    emit(report_constraint("catalog-run", input, run_entry(*entry), std::nullopt), a.json);
  }
  return 0;
}

struct GysinArgs {
  std::string model, type, h, window, guard = "4";
  int k = 0;
  bool k_given = false;
  bool json = false;
};

int run_gysin(const GysinArgs& a) {
  std::size_t colon = a.window.find(':');
  if (colon == std::string::npos)
    throw UsageError{"--window expects LO:HI, e.g. --window -16:2"};
  Rational lo = parse_rational_flag(a.window.substr(0, colon), "--window");
  Rational hi = parse_rational_flag(a.window.substr(colon + 1), "--window");
  if (!(lo < hi)) throw UsageError{"--window needs LO < HI"};
  Rational guard = parse_rational_flag(a.guard, "--guard");
  if (guard < 0) throw UsageError{"--guard must be nonnegative"};

  json input;
  input["model"] = a.model;
  input["type"] = a.type.empty() ? json(nullptr) : json(a.type);
  input["h"] = a.h.empty() ? json(nullptr) : json(a.h);
  input["k"] = a.k_given ? json(a.k) : json(nullptr);
  input["window"] = a.window;
  input["guard"] = rational_to_string(guard);

  // the model is built on the display range enlarged to whatever the builder
  // needs; the table is clipped back to the display range
  Rational mlo = lo, mhi = hi;
  FloerModel m;
  if (a.model == "s3") {
    if (!a.type.empty() || !a.h.empty() || a.k_given)
      throw UsageError{"--model s3 takes no --type/--h/--k"};
    if (mhi - mlo < 8) mlo = mhi - 8;
    m = build_s3(Window(Grading(mlo), Grading(mhi), guard));
  } else if (a.model == "rank-one") {
    if (a.type.empty() || a.h.empty())
      throw UsageError{"--model rank-one needs --type and --h"};
    if (a.k_given) throw UsageError{"--model rank-one takes no --k"};
    std::optional<TypeClass> t = type_from_string(a.type);
    if (!t) throw UsageError{"unknown type \"" + a.type + "\" (expected I or II)"};
    Rational h = parse_rational_flag(a.h, "--h");
    mlo = std::min(mlo, Rational(-2 * h - 20));
    mhi = std::max(mhi, Rational(-2 * h + 4));
    m = build_rank_one(Grading(h), *t, Window(Grading(mlo), Grading(mhi), guard));
  } else if (a.model == "y4k1") {
    if (!a.k_given) throw UsageError{"--model y4k1 needs --k"};
    if (!a.type.empty() || !a.h.empty())
      throw UsageError{"--model y4k1 takes no --type/--h"};
    mlo = std::min(mlo, Rational(-4));
    mhi = std::max(mhi, Rational(8 * a.k + 8));
    m = build_y4k1(a.k, Window(Grading(mlo), Grading(mhi), guard));
  } else {
    throw UsageError{"unknown model \"" + a.model + "\" (expected s3, rank-one or y4k1)"};
  }

  VerifyReport rep = verify_model(m);
  emit(report_gysin(m, Grading(lo), Grading(hi), rep, input), a.json);
  return rep.all_passed() ? 0 : 1;
}

struct BettiArgs {
  int b2plus = 0, b2minus = 0;
  bool json = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gysin-ladder models and Stein-filling obstructions"};
  app.require_subcommand(1);
  // --h is a real option below, so keep help on --help only
  app.set_help_flag("--help", "print help");

  auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  ObstructArgs ob;
  CLI::App* obstruct = add_sub(
      &app, "obstruct", "intersection-form constraints from a type classification or contact class");
  obstruct->add_option("--type", ob.type, "type classification: I or II");
  obstruct->add_option("--h", ob.h, "monopole h invariant (rational)");
  obstruct->add_option("--contact-d", ob.contact_d, "contact class grading (rational)");
  obstruct->add_option("--tower", ob.tower, "tower of the contact class: alpha, beta or gamma");
  obstruct->add_option("--C", ob.C, "embedding constant for euler-characteristic bounds");
  obstruct->add_flag("--json", ob.json, "machine-readable output");

  CatalogArgs ca;
  CLI::App* catalog = add_sub(&app, "catalog", "inspect or run the manifold catalog");
  catalog->require_subcommand(1);
  CLI::App* cat_list = add_sub(catalog, "list", "list all entries");
  CLI::App* cat_show = add_sub(catalog, "show", "print one entry");
  CLI::App* cat_run = add_sub(catalog, "run", "feed one entry to the obstruction engine");
  // entry names may start with '-' (orientation reversals), which a normal
  // positional would reject; collect them from the unmatched arguments
  cat_show->allow_extras();
  cat_run->allow_extras();
  for (CLI::App* sub : {cat_list, cat_show, cat_run}) {
    sub->add_option("--file", ca.file, "catalog file overlaying the builtin entries");
    sub->add_flag("--json", ca.json, "machine-readable output");
  }

  GysinArgs gy;
  CLI::App* gysin = add_sub(&app, "gysin", "build a Gysin ladder model and verify it");
  gysin->add_option("--model", gy.model, "s3, rank-one or y4k1")->required();
  gysin->add_option("--type", gy.type, "rank-one type: I or II");
  gysin->add_option("--h", gy.h, "rank-one h invariant (rational)");
  gysin->add_option("--k", gy.k, "y4k1 family index (k >= 1)");
  gysin->add_option("--window", gy.window, "display grading range LO:HI")->required();
  gysin->add_option("--guard", gy.guard, "guard band width (default 4)");
  gysin->add_flag("--json", gy.json, "machine-readable output");

  BettiArgs cm;
  CLI::App* cobmap = add_sub(&app, "cobmap", "bar-level map induced by a cobordism");
  cobmap->add_option("--b2plus", cm.b2plus, "b2+ of the cobordism")->required();
  cobmap->add_option("--b2minus", cm.b2minus, "b2- of the cobordism")->required();
  cobmap->add_flag("--json", cm.json, "machine-readable output");

  BettiArgs la;
  CLI::App* lattice = add_sub(&app, "lattice", "classify the even indefinite unimodular form");
  lattice->add_option("--b2plus", la.b2plus, "b2+ of the form")->required();
  lattice->add_option("--b2minus", la.b2minus, "b2- of the form")->required();
  lattice->add_flag("--json", la.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (obstruct->parsed()) return run_obstruct(ob);
    if (catalog->parsed()) {
      ca.action = cat_list->parsed() ? "list" : cat_show->parsed() ? "show" : "run";
      if (ca.action != "list") {
        CLI::App* sub = cat_show->parsed() ? cat_show : cat_run;
        std::vector<std::string> extras = sub->remaining();
        if (extras.size() != 1)
          throw UsageError{"catalog " + ca.action + " expects exactly one entry name"};
        ca.name = extras[0];
      }
      return run_catalog(ca);
    }
    if (gysin->parsed()) {
      gy.k_given = gysin->count("--k") > 0;
      return run_gysin(gy);
    }
    if (cobmap->parsed()) {
      emit(report_cobmap(cm.b2plus, cm.b2minus, hs_bar_map(cm.b2plus, cm.b2minus)), cm.json);
      return 0;
    }
    if (lattice->parsed()) {
      emit(report_lattice(la.b2plus, la.b2minus,
                          classify_even_indefinite(la.b2plus, la.b2minus)),
           la.json);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.msg << "\n";
    return 64;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}
