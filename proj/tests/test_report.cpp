#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "pin2fill/errors.hpp"
#include "pin2fill/report.hpp"

using namespace pin2fill;
using json = nlohmann::ordered_json;

namespace {

// Just enough of JSON Schema to enforce docs/report.schema.json: $ref into
// #/definitions, type (string or list), enum, const, pattern, required,
// properties, additionalProperties: false, items, oneOf.
class SchemaChecker {
 public:
  explicit SchemaChecker(json root) : root_(std::move(root)) {}

  std::vector<std::string> errors(const json& value) const {
    std::vector<std::string> errs;
    check(root_, value, "$", errs);
    return errs;
  }

 private:
  json root_;

  const json& resolve(const std::string& ref) const {
    REQUIRE(ref.rfind("#/", 0) == 0);
    const json* node = &root_;
    std::istringstream path(ref.substr(2));
    std::string seg;
    while (std::getline(path, seg, '/')) {
      REQUIRE(node->contains(seg));
      node = &(*node)[seg];
    }
    return *node;
  }

  static bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const json& schema, const json& v, const std::string& path,
             std::vector<std::string>& errs) const {
    if (schema.contains("$ref")) {
      check(resolve(schema["$ref"].get<std::string>()), v, path, errs);
      return;
    }
    if (schema.contains("oneOf")) {
      int hits = 0;
      for (const json& sub : schema["oneOf"]) {
        std::vector<std::string> sub_errs;
        check(sub, v, path, sub_errs);
        if (sub_errs.empty()) hits++;
      }
      if (hits != 1)
        errs.push_back(path + ": matched " + std::to_string(hits) + " oneOf branches");
    }
    if (schema.contains("const") && v != schema["const"])
      errs.push_back(path + ": != const " + schema["const"].dump());
    if (schema.contains("enum")) {
      bool hit = false;
      for (const json& opt : schema["enum"])
        if (v == opt) hit = true;
      if (!hit) errs.push_back(path + ": " + v.dump() + " not in enum");
    }
    if (schema.contains("type")) {
      const json& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = type_matches(t.get<std::string>(), v);
      } else {
        for (const json& opt : t) ok = ok || type_matches(opt.get<std::string>(), v);
      }
      if (!ok) {
        errs.push_back(path + ": wrong type, got " + std::string(v.type_name()));
        return;
      }
    }
    if (schema.contains("pattern") && v.is_string()) {
      std::regex re(schema["pattern"].get<std::string>());
      if (!std::regex_search(v.get<std::string>(), re))
        errs.push_back(path + ": \"" + v.get<std::string>() + "\" fails pattern");
    }
    if (v.is_object()) {
      if (schema.contains("required"))
        for (const json& key : schema["required"])
          if (!v.contains(key.get<std::string>()))
            errs.push_back(path + ": missing " + key.get<std::string>());
      const json props = schema.value("properties", json::object());
      for (const auto& item : v.items()) {
        if (props.contains(item.key())) {
          check(props[item.key()], item.value(), path + "." + item.key(), errs);
        } else if (schema.value("additionalProperties", json(true)) == json(false)) {
          errs.push_back(path + ": unexpected key " + item.key());
        }
      }
    }
    if (v.is_array() && schema.contains("items")) {
      for (std::size_t i = 0; i < v.size(); i++)
        check(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errs);
    }
  }
};

const SchemaChecker& report_schema() {
  static SchemaChecker* checker = [] {
    std::ifstream in(std::string(PIN2FILL_SOURCE_DIR) + "/docs/report.schema.json");
    REQUIRE(in.good());
    json root = json::parse(in);
    return new SchemaChecker(std::move(root));
  }();
  return *checker;
}

void check_valid(const Report& r) {
  auto errs = report_schema().errors(r.data);
  CAPTURE(r.data.dump(2));
  for (const auto& e : errs) {
    CAPTURE(e);
    CHECK(false);
  }
  CHECK(errs.empty());
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("constraint reports: text lines and schema") {
  FillingConstraint fc = theorem_main(0, TypeClass::I);
  json input;
  input["type"] = "I";
  input["h"] = "0";
  input["C"] = "-20";
  Report r = report_constraint("obstruct", input, fc, euler_bounds(fc, Rational(-20)));
  CHECK(has_line(r.text, "input: type = I, h = 0, C = -20"));
  CHECK(has_line(r.text, "scope: indefinite"));
  CHECK(has_line(r.text, "parity: even"));
  CHECK(has_line(r.text, "b2+ = 1"));
  CHECK(has_line(r.text, "b2- = 9"));
  CHECK(has_line(r.text, "lattice: H + E8(-1)"));
  CHECK(has_line(r.text, "chi (indefinite) = 11"));
  CHECK(has_line(r.text, "chi (negative definite) <= 23"));
  check_valid(r);
  CHECK(r.data["verdict"]["b2plus"] == 1);
  CHECK(r.data["euler"]["chi_negdef_max"] == 23);

  FillingConstraint al = theorem_contact({Grading(5), Tower::alpha, true});
  json input2;
  input2["contact_d"] = "5";
  input2["tower"] = "alpha";
  Report r2 = report_constraint("obstruct", input2, al, std::nullopt);
  CHECK(has_line(r2.text, "scope: negative-definite-only"));
  CHECK(r2.text.find("b2+") == std::string::npos);
  check_valid(r2);
  CHECK(r2.data["verdict"]["b2plus"].is_null());
  CHECK(!r2.data.contains("euler"));

  // Betti numbers without a lattice
  FillingConstraint frac = theorem_main(Rational(-1, 2), TypeClass::I);
  Report r3 = report_constraint("catalog-run", json::object(), frac, std::nullopt);
  CHECK(has_line(r3.text, "lattice: none"));
  CHECK(r3.text.find("note: ") != std::string::npos);
  check_valid(r3);
}

TEST_CASE("catalog reports: text lines and schema") {
  auto cat = builtin_catalog();
  Report list = report_catalog_list(cat, json::object());
  check_valid(list);
  CHECK(list.data["entries"].size() == cat.size());
  CHECK(list.text.find("Sigma(2,3,11)") != std::string::npos);
  CHECK(list.text.find("type II") != std::string::npos);
  CHECK(list.text.find("rank unknown") != std::string::npos);
  CHECK(list.text.find("contact d = 0, gamma") != std::string::npos);

  json input;
  input["name"] = "Sigma(2,3,11)";
  Report show = report_catalog_show(*find_entry(cat, "Sigma(2,3,11)"), input);
  check_valid(show);
  CHECK(has_line(show.text, "name: Sigma(2,3,11)"));
  CHECK(has_line(show.text, "h = -1"));
  CHECK(has_line(show.text, "type: II"));
  CHECK(has_line(show.text, "reduced rank: 1"));
  CHECK(has_line(show.text, "contact: none"));

  Report show2 = report_catalog_show(*find_entry(cat, "Sigma(2,11,23)"), input);
  check_valid(show2);
  CHECK(has_line(show2.text, "contact: d = 0, tower gamma, j-invariant"));
  CHECK(has_line(show2.text, "reduced rank: unknown"));
}

TEST_CASE("gysin reports: table, verification and schema") {
  Window w(Grading(-9), Grading(-1), 4);
  FloerModel m = build_s3(w);
  VerifyReport rep = verify_model(m);
  json input;
  input["model"] = "s3";
  input["window"] = "-9:-1";
  Report r = report_gysin(m, Grading(-9), Grading(-1), rep, input);
  check_valid(r);
  CHECK(has_line(r.text, "model: s3"));
  CHECK(has_line(r.text, "verification: PASS"));
  CHECK(r.data["verification"]["passed"] == true);
  CHECK(r.data["table"].size() == 9);
  CHECK(r.data["table"][0]["g"] == "-1");
  CHECK(r.data["table"][0]["hs_hat"] == 1);
  CHECK(r.data["table"][0]["column"] == 0);
  CHECK(r.data["table"][3]["g"] == "-4");
  CHECK(r.data["table"][3]["bar"] == 0);

  // corrupted model: failures listed, exit-worthy, still schema-valid
  FloerModel bad = build_s3(Window(Grading(-40), Grading(8), 4));
  bad.hat->iota.set_block(Grading(-5), F2Matrix(1, 1));
  VerifyReport badrep = verify_model(bad);
  Report rb = report_gysin(bad, Grading(-9), Grading(-1), badrep, input);
  check_valid(rb);
  CHECK(has_line(rb.text, "verification: FAIL"));
  CHECK(rb.text.find("FAIL exact") != std::string::npos);
  CHECK(rb.data["verification"]["passed"] == false);
  CHECK(rb.data["verification"]["failures"].size() > 0);

  // contact marker and absent-flavor handling
  Window wy(Grading(-8), Grading(20), 4);
  FloerModel y = build_y4k1(1, wy);
  Report ry = report_gysin(y, Grading(-4), Grading(10), verify_model(y), json::object());
  check_valid(ry);
  bool saw_star = ry.text.find("2*") != std::string::npos;
  CHECK(saw_star);
  CHECK(ry.data["table"][0]["hs_hat"].is_null());
  for (const auto& row : ry.data["table"])
    if (row["g"] == "0") CHECK(row["contact"] == true);
}

TEST_CASE("cobmap and lattice reports") {
  Report z = report_cobmap(3, 0, hs_bar_map(3, 0));
  check_valid(z);
  CHECK(has_line(z.text, "bar-level map: Zero"));
  CHECK(z.data["verdict"]["kind"] == "zero");
  CHECK(z.data["verdict"]["qpow"].is_null());

  Report m = report_cobmap(1, 9, hs_bar_map(1, 9));
  check_valid(m);
  CHECK(has_line(m.text, "bar-level map: Mono(1, 1)"));
  CHECK(has_line(m.text, "q-power = 1"));
  CHECK(has_line(m.text, "degree = 1"));
  CHECK(m.data["verdict"]["degree"] == "1");

  Report frac = report_cobmap(0, 3, hs_bar_map(0, 3));
  check_valid(frac);
  CHECK(has_line(frac.text, "degree = 3/4"));

  Report l = report_lattice(2, 10, classify_even_indefinite(2, 10));
  check_valid(l);
  CHECK(has_line(l.text, "lattice: 2H + E8(-1)"));
  CHECK(has_line(l.text, "signature = -8"));
  CHECK(has_line(l.text, "rank = 12"));
  CHECK(l.data["verdict"]["eps"] == -1);
}

TEST_CASE("json output is deterministic and the validator is not vacuous") {
  FillingConstraint fc = theorem_main(-1, TypeClass::II);
  json input;
  input["type"] = "II";
  input["h"] = "-1";
  Report a = report_constraint("obstruct", input, fc, std::nullopt);
  Report b = report_constraint("obstruct", input, fc, std::nullopt);
  CHECK(a.json_text() == b.json_text());
  CHECK(a.json_text().back() == '\n');

  // sanity: the checker actually rejects malformed reports
  json broken = a.data;
  broken["verdict"]["scope"] = "sideways";
  CHECK(!report_schema().errors(broken).empty());
  json extra = a.data;
  extra["verdict"]["surprise"] = 1;
  CHECK(!report_schema().errors(extra).empty());
  json missing = a.data;
  missing["verdict"].erase("note");
  CHECK(!report_schema().errors(missing).empty());
  json badrat = a.data;
  badrat["verdict"]["lattice"] = 17;
  CHECK(!report_schema().errors(badrat).empty());
}
