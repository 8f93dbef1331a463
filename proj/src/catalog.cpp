#include "pin2fill/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pin2fill/errors.hpp"

namespace pin2fill {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& require_field(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(where, std::string("missing required field \"") + key + "\"");
  return *it;
}

Rational rational_field(const json& v, const std::string& where) {
  if (!v.is_string())
    schema_fail(where, std::string("expected a rational string, got ") + v.type_name());
  const std::string text = v.get<std::string>();
  std::optional<Rational> r = parse_rational(text);
  if (!r) schema_fail(where, "malformed rational \"" + text + "\"");
  return *r;
}

ManifoldEntry parse_entry(const json& e, const std::string& where) {
  if (!e.is_object()) schema_fail(where, std::string("expected an object, got ") + e.type_name());
  static const std::set<std::string> known = {"name", "h",       "reduced_rank",
                                              "type", "contact", "notes"};
  for (const auto& item : e.items())
    if (!known.count(item.key())) schema_fail(where + "." + item.key(), "unknown field");

  ManifoldEntry m;

  const json& name = require_field(e, where, "name");
  if (!name.is_string() || name.get<std::string>().empty())
    schema_fail(where + ".name", "expected a nonempty string");
  m.name = name.get<std::string>();

  m.h = rational_field(require_field(e, where, "h"), where + ".h");

  const json& rr = require_field(e, where, "reduced_rank");
  if (rr.is_string()) {
    if (rr.get<std::string>() != "unknown")
      schema_fail(where + ".reduced_rank",
                  "expected a nonnegative integer or \"unknown\", got \"" +
                      rr.get<std::string>() + "\"");
    m.reduced_rank = std::nullopt;
  } else if (rr.is_number_integer()) {
    long long n = rr.get<long long>();
    if (n < 0) schema_fail(where + ".reduced_rank", "must be nonnegative");
    m.reduced_rank = Int(n);
  } else {
    schema_fail(where + ".reduced_rank",
                std::string("expected a nonnegative integer or \"unknown\", got ") +
                    rr.type_name());
  }

  const json& ty = require_field(e, where, "type");
  if (ty.is_null()) {
    m.type = std::nullopt;
  } else if (ty.is_string()) {
    m.type = type_from_string(ty.get<std::string>());
    if (!m.type)
      schema_fail(where + ".type",
                  "unknown type tag \"" + ty.get<std::string>() + "\" (expected \"I\" or \"II\")");
  } else {
    schema_fail(where + ".type", std::string("expected \"I\", \"II\" or null, got ") +
                                     ty.type_name());
  }

  const json& ct = require_field(e, where, "contact");
  if (ct.is_null()) {
    m.contact = std::nullopt;
  } else if (ct.is_object()) {
    static const std::set<std::string> ckeys = {"d", "tower", "j_invariant"};
    for (const auto& item : ct.items())
      if (!ckeys.count(item.key()))
        schema_fail(where + ".contact." + item.key(), "unknown field");
    ContactClass c;
    c.d = Grading(rational_field(require_field(ct, where + ".contact", "d"),
                                 where + ".contact.d"));
    const json& tw = require_field(ct, where + ".contact", "tower");
    if (!tw.is_string())
      schema_fail(where + ".contact.tower",
                  std::string("expected a tower tag, got ") + tw.type_name());
    std::optional<Tower> tower = tower_from_string(tw.get<std::string>());
    if (!tower)
      schema_fail(where + ".contact.tower",
                  "unknown tower tag \"" + tw.get<std::string>() +
                      "\" (expected \"alpha\", \"beta\" or \"gamma\")");
    c.tower = *tower;
    const json& ji = require_field(ct, where + ".contact", "j_invariant");
    if (!ji.is_boolean())
      schema_fail(where + ".contact.j_invariant",
                  std::string("expected a boolean, got ") + ji.type_name());
    c.j_invariant = ji.get<bool>();
    m.contact = c;
  } else {
    schema_fail(where + ".contact",
                std::string("expected an object or null, got ") + ct.type_name());
  }

  const json& notes = require_field(e, where, "notes");
  if (!notes.is_string())
    schema_fail(where + ".notes", std::string("expected a string, got ") + notes.type_name());
  m.notes = notes.get<std::string>();

  if (m.type && m.reduced_rank != std::optional<Int>(Int(1))) {
    std::string got = m.reduced_rank ? m.reduced_rank->str() : std::string("\"unknown\"");
    schema_fail(where + ".type",
                "a type classification requires reduced_rank = 1, got " + got);
  }
  return m;
}

json entry_to_json(const ManifoldEntry& m) {
  json e;
  e["name"] = m.name;
  e["h"] = rational_to_string(m.h);
  if (m.reduced_rank)
    e["reduced_rank"] = m.reduced_rank->convert_to<long long>();
  else
    e["reduced_rank"] = "unknown";
  if (m.type)
    e["type"] = to_string(*m.type);
  else
    e["type"] = nullptr;
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

// line:column of a 1-based byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); i++) {
    if (text[i] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
  }
  return {line, col};
}

std::string strip_exception_tag(const std::string& what) {
  if (!what.empty() && what.front() == '[') {
    std::size_t end = what.find("] ");
    if (end != std::string::npos) return what.substr(end + 2);
  }
  return what;
}

}  // namespace

std::vector<ManifoldEntry> builtin_catalog() {
  std::vector<ManifoldEntry> v;
  v.push_back({"Sigma(2,3,11)", Rational(-1), Int(1), TypeClass::II, std::nullopt,
               "Brieskorn sphere"});
  v.push_back({"-Sigma(2,3,11)", Rational(1), Int(1), TypeClass::I, std::nullopt,
               "orientation reversal of Sigma(2,3,11)"});
  v.push_back({"-Sigma(2,3,7)", Rational(0), Int(1), TypeClass::I, std::nullopt,
               "orientation reversal of Sigma(2,3,7); same manifold as M(-1)"});
  for (int n = -1; n >= -9; n--) {
    v.push_back({"M(" + std::to_string(n) + ")", Rational(-(n + 1), 8), Int(1), TypeClass::I,
                 std::nullopt, "integral surgery on the figure-eight knot"});
  }
  for (int k = 1; k <= 3; k++) {
    std::string name =
        "Sigma(2," + std::to_string(8 * k + 3) + "," + std::to_string(16 * k + 7) + ")";
    std::string notes = "Stein fillable contact structure with contact class at the bottom of "
                        "the gamma tower";
    if (k > 1) notes += "; reduced rank known only to exceed 1";
    v.push_back({name, Rational(0), std::nullopt, std::nullopt,
                 ContactClass{Grading(0), Tower::gamma, true}, notes});
  }
  return v;
}

std::vector<ManifoldEntry> parse_catalog(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw SchemaError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      strip_exception_tag(e.what()));
  }
  if (!doc.is_object())
    schema_fail(origin, std::string("expected a top-level object, got ") + doc.type_name());
  for (const auto& item : doc.items())
    if (item.key() != "schema_version" && item.key() != "entries")
      schema_fail(item.key(), "unknown field");
  const json& ver = require_field(doc, origin, "schema_version");
  if (!ver.is_number_integer() || ver.get<long long>() != 1)
    schema_fail("schema_version", "expected 1, got " + ver.dump());
  const json& entries = require_field(doc, origin, "entries");
  if (!entries.is_array())
    schema_fail("entries", std::string("expected an array, got ") + entries.type_name());

  std::vector<ManifoldEntry> out;
  for (std::size_t i = 0; i < entries.size(); i++)
    out.push_back(parse_entry(entries[i], "entries[" + std::to_string(i) + "]"));
  return out;
}

std::string serialize_catalog(const std::vector<ManifoldEntry>& entries) {
  json doc;
  doc["schema_version"] = 1;
  doc["entries"] = json::array();
  for (const ManifoldEntry& m : entries) doc["entries"].push_back(entry_to_json(m));
  return doc.dump(2) + "\n";
}

std::vector<ManifoldEntry> load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("catalog file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path);
}

void save_catalog(const std::vector<ManifoldEntry>& entries, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StructuralError("cannot open catalog file for writing: " + path);
  out << serialize_catalog(entries);
  if (!out) throw StructuralError("failed writing catalog file: " + path);
}

std::vector<ManifoldEntry> merge_catalog(std::vector<ManifoldEntry> base,
                                         const std::vector<ManifoldEntry>& loaded) {
  for (const ManifoldEntry& m : loaded) {
    bool replaced = false;
    for (ManifoldEntry& b : base) {
      if (b.name == m.name) {
        b = m;
        replaced = true;
        break;
      }
    }
    if (!replaced) base.push_back(m);
  }
  return base;
}

const ManifoldEntry* find_entry(const std::vector<ManifoldEntry>& entries,
                                const std::string& name) {
  for (const ManifoldEntry& m : entries)
    if (m.name == name) return &m;
  return nullptr;
}

FillingConstraint run_entry(const ManifoldEntry& entry) {
  if (entry.type) return theorem_main(entry.h, *entry.type);
  if (entry.contact) return theorem_contact(*entry.contact);
  throw HypothesisError("catalog entry \"" + entry.name +
                        "\" carries neither a type classification nor contact data");
}

}  // namespace pin2fill
