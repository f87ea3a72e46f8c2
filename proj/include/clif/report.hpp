#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace clif {

/// One machine-checked fact. Status "pass" means the documented value was
/// reproduced exactly, "fail" means it was not, and "derived" marks data
/// this artifact establishes by computation where no independently
/// documented value is reproduced as stated (the payload carries the
/// details).
struct ReportEntry {
    std::string id;      // stable identifier, e.g. "5.6/stab-15"
    std::string claim;
    std::string anchor;  // source phrase the claim reproduces, if any
    std::string status;  // "pass" | "fail" | "derived"
    nlohmann::json payload;
};

/// One acceptance criterion: a titled group of report entries. A criterion
/// is met when no entry failed.
struct Criterion {
    int number = 0;
    std::string title;
    std::vector<ReportEntry> entries;

    bool passed() const;
    /// Number of entries with status "derived".
    int derived_count() const;
};

/// Runs the full verification suite (exact arithmetic throughout, fixed
/// seeds for the randomized properties).
std::vector<Criterion> run_criteria();

/// Flattened entry list, including the substitution note recording which
/// group-level statements are certified at the Lie-algebra level only.
std::vector<ReportEntry> run_report();

nlohmann::json report_json(const std::vector<ReportEntry>& entries);

}  // namespace clif
