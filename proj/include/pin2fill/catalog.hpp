#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pin2fill/floer.hpp"
#include "pin2fill/obstruct.hpp"
#include "pin2fill/rational.hpp"

namespace pin2fill {

// One catalog record. `reduced_rank` is std::nullopt when the rank of the
// reduced homology is not known; a type classification is only meaningful
// (and only accepted) when the reduced rank is exactly 1.
struct ManifoldEntry {
  std::string name;
  Rational h;
  std::optional<Int> reduced_rank;
  std::optional<TypeClass> type;
  std::optional<ContactClass> contact;
  std::string notes;

  bool operator==(const ManifoldEntry&) const = default;
};

// The entries shipped with the library.
std::vector<ManifoldEntry> builtin_catalog();

// JSON round trip. Files carry {"schema_version": 1, "entries": [...]} with
// rationals serialized as strings to keep them exact. parse/serialize work on
// in-memory text; load/save add file I/O. `origin` labels diagnostics (a file
// name or similar); schema violations raise SchemaError with an
// entries[i].field location, raw JSON syntax errors with origin:line:col.
std::vector<ManifoldEntry> parse_catalog(const std::string& text, const std::string& origin);
std::string serialize_catalog(const std::vector<ManifoldEntry>& entries);
std::vector<ManifoldEntry> load_catalog(const std::string& path);
void save_catalog(const std::vector<ManifoldEntry>& entries, const std::string& path);

// Overlay `loaded` on top of `base`: same-name entries replace the base
// record, new names are appended in file order.
std::vector<ManifoldEntry> merge_catalog(std::vector<ManifoldEntry> base,
                                         const std::vector<ManifoldEntry>& loaded);

// Case-sensitive lookup by name; nullptr when absent.
const ManifoldEntry* find_entry(const std::vector<ManifoldEntry>& entries,
                                const std::string& name);

// Feed the entry through the applicable obstruction engine: the type route
// when a type classification is present, otherwise the contact route.
// Throws HypothesisError when the entry supports neither.
FillingConstraint run_entry(const ManifoldEntry& entry);

}  // namespace pin2fill
