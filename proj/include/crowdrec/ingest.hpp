#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "crowdrec/dataset.hpp"

namespace crowdrec {

// Per-worker frequency counts keyed by normalized technology / task-type
// name. Counts, not booleans; the binary indicator is count > 0.
struct IndicatorTable {
    std::map<std::string, std::map<std::string, int>> wtech;  // worker -> tech -> count
    std::map<std::string, std::map<std::string, int>> wtype;  // worker -> type -> count
    std::map<std::string, std::string> tech_display;          // normalized -> first raw spelling
    std::map<std::string, std::string> type_display;

    int tech_count(const std::string& worker, const std::string& tech_key) const;
    int type_count(const std::string& worker, const std::string& type_key) const;
};

// Loads and validates the three CSV files. ratings_path may be empty;
// workers missing a rating entry default to rating 0.
// Throws IoError on unreadable paths, ValidationError on schema or
// invariant violations (message names file, line and field).
Dataset load_dataset(const std::string& tasks_path,
                     const std::string& registrations_path,
                     const std::string& ratings_path = "");

void save_dataset(const Dataset& ds,
                  const std::string& tasks_path,
                  const std::string& registrations_path,
                  const std::string& ratings_path);

IndicatorTable derive_indicators(const Dataset& ds);

// Workers with at least one registration whose date falls in the month.
std::set<std::string> active_workers(const Dataset& ds, int month);

// worker_id,task_id edge list for external network analysis.
void export_edges(const Dataset& ds, const std::string& path);

}  // namespace crowdrec
