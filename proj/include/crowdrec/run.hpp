#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "crowdrec/success.hpp"

namespace crowdrec {

struct RunConfig {
    Date cutoff;
    int horizon_days = 14;
    double alpha = 0.30;
    double beta = 0.30;
    int min_conditions = 3;
    int k = 3;
    PvsMode pvs_mode = PvsMode::Table;
};

struct RunOutput {
    Date cutoff;
    int horizon_days = 0;
    std::set<std::string> workers_considered;  // active in the cutoff month
    std::map<std::string, std::vector<Recommendation>> recommendations;  // task_id asc
    std::map<std::string, std::vector<Recommendation>> top;             // ranked
    int degenerate_pools = 0;
};

// Full pipeline: indicators -> profiles -> collaboration index ->
// condition filter -> labels -> competitor-aware scoring -> top-k.
RunOutput run_engine(const Dataset& ds, const RunConfig& cfg);

// Canonical artifact serialization shared by the CLI and the oracle path.
void write_recommendations_jsonl(const RunOutput& run, const std::string& path);
void write_quadrant_csv(const RunOutput& run, const std::string& path);
void write_topk_csv(const RunOutput& run, const std::string& path);

}  // namespace crowdrec
