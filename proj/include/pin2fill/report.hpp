#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pin2fill/catalog.hpp"
#include "pin2fill/cobordism.hpp"
#include "pin2fill/floer.hpp"
#include "pin2fill/lattice.hpp"
#include "pin2fill/obstruct.hpp"

namespace pin2fill {

// One command's output in both shapes. `data` uses ordered maps throughout,
// so dumping it is deterministic: the same invocation always yields the same
// bytes.
struct Report {
  std::string text;
  nlohmann::ordered_json data;

  std::string json_text() const { return data.dump(2) + "\n"; }
};

// Echo-input objects are assembled by the caller; the renderers attach them
// under "input" unchanged.
Report report_constraint(const std::string& command, nlohmann::ordered_json input,
                         const FillingConstraint& fc, const std::optional<EulerBound>& euler);

Report report_catalog_list(const std::vector<ManifoldEntry>& entries,
                           nlohmann::ordered_json input);
Report report_catalog_show(const ManifoldEntry& entry, nlohmann::ordered_json input);

// Dimension table over the display range (clipped to it; the model may have
// been built on a wider window) plus the verification summary.
Report report_gysin(const FloerModel& m, const Grading& display_lo, const Grading& display_hi,
                    const VerifyReport& verification, nlohmann::ordered_json input);

Report report_cobmap(int b2plus, int b2minus, const BarMap& map);
Report report_lattice(int b2plus, int b2minus, const LatticeForm& form);

// Shared helpers, exposed for the catalog renderers and tests.
nlohmann::ordered_json constraint_to_json(const FillingConstraint& fc);
nlohmann::ordered_json entry_summary_json(const ManifoldEntry& entry);

}  // namespace pin2fill
