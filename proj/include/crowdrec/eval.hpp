#pragma once

#include <map>
#include <string>
#include <vector>

#include "crowdrec/run.hpp"

namespace crowdrec {

struct EvaluationReport {
    Date cutoff;
    int horizon_days = 0;
    int workers_total = 0;
    int workers_with_recommendations = 0;
    bool mre_defined = false;
    double mre = 0.0;  // mean of per-worker signed relative errors
    std::map<std::string, double> per_worker_errors;
    std::vector<std::string> zero_actual_workers;  // excluded from the ratio
    bool stats_defined = false;
    double success_mean = 0.0;
    double success_min = 0.0;
    double success_max = 0.0;
    int below_average_count = 0;  // workers whose top-1 is below the mean
    int degenerate_pool_count = 0;
};

// Per-worker signed relative error (actual - recommended) / actual,
// averaged. Workers with zero actual registrations are excluded from the
// ratio and listed separately. Throws ValidationError on an empty worker set.
EvaluationReport mre(const std::map<std::string, int>& actual,
                     const std::map<std::string, int>& recommended);

// Success-probability distribution over each worker's top-1.
EvaluationReport summarize(const RunOutput& run);

// Full report: summarize() plus MRE against the dataset's actual
// registrations inside the recommendation window.
EvaluationReport evaluate_run(const RunOutput& run, const Dataset& ds);

std::string report_to_json(const EvaluationReport& report);
void write_per_worker_errors_csv(const EvaluationReport& report, const std::string& path);

}  // namespace crowdrec
