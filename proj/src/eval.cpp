#include "crowdrec/eval.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "crowdrec/csv.hpp"
#include "crowdrec/errors.hpp"

namespace crowdrec {

EvaluationReport mre(const std::map<std::string, int>& actual,
                     const std::map<std::string, int>& recommended) {
    if (actual.empty()) throw ValidationError("mre: empty worker set");
    EvaluationReport report;
    double sum = 0.0;
    int counted = 0;
    for (const auto& [worker, n_actual] : actual) {
        auto rec = recommended.find(worker);
        const int n_recommended = rec == recommended.end() ? 0 : rec->second;
        if (n_actual == 0) {
            report.zero_actual_workers.push_back(worker);
            continue;
        }
        const double err = double(n_actual - n_recommended) / double(n_actual);
        report.per_worker_errors[worker] = err;
        sum += err;
        ++counted;
    }
    if (counted > 0) {
        report.mre = sum / double(counted);
        report.mre_defined = true;
    }
    return report;
}

EvaluationReport summarize(const RunOutput& run) {
    EvaluationReport report;
    report.cutoff = run.cutoff;
    report.horizon_days = run.horizon_days;
    report.workers_total = int(run.workers_considered.size());
    report.workers_with_recommendations = int(run.recommendations.size());
    report.degenerate_pool_count = run.degenerate_pools;

    std::vector<double> top1;
    for (const auto& [worker, recs] : run.top) {
        if (!recs.empty()) top1.push_back(recs.front().success_probability.value_or(0.0));
    }
    if (!top1.empty()) {
        report.stats_defined = true;
        double sum = 0.0;
        report.success_min = top1.front();
        report.success_max = top1.front();
        for (double v : top1) {
            sum += v;
            report.success_min = std::min(report.success_min, v);
            report.success_max = std::max(report.success_max, v);
        }
        report.success_mean = sum / double(top1.size());
        for (double v : top1) {
            if (v < report.success_mean) ++report.below_average_count;
        }
    }
    return report;
}

EvaluationReport evaluate_run(const RunOutput& run, const Dataset& ds) {
    EvaluationReport report = summarize(run);

    std::map<std::string, int> actual, recommended;
    for (const auto& worker : run.workers_considered) actual[worker] = 0;
    for (const auto& r : ds.registrations) {
        if (!run.workers_considered.contains(r.worker_id)) continue;
        if (run.cutoff <= r.registration_date &&
            r.registration_date < run.cutoff + run.horizon_days) {
            actual[r.worker_id] += 1;
        }
    }
    for (const auto& [worker, recs] : run.recommendations) {
        recommended[worker] = int(recs.size());
    }
    if (!actual.empty()) {
        EvaluationReport errors = mre(actual, recommended);
        report.mre_defined = errors.mre_defined;
        report.mre = errors.mre;
        report.per_worker_errors = std::move(errors.per_worker_errors);
        report.zero_actual_workers = std::move(errors.zero_actual_workers);
    }
    return report;
}

std::string report_to_json(const EvaluationReport& report) {
    nlohmann::ordered_json j;
    j["cutoff"] = format_date(report.cutoff);
    j["horizon_days"] = report.horizon_days;
    j["workers_total"] = report.workers_total;
    j["workers_with_recommendations"] = report.workers_with_recommendations;
    if (report.mre_defined) {
        j["mre"] = report.mre;
        j["per_worker_errors"] = report.per_worker_errors;
    } else {
        j["mre"] = nullptr;
    }
    j["zero_actual_workers"] = report.zero_actual_workers;
    if (report.stats_defined) {
        j["success_stats"] = {{"mean", report.success_mean},
                              {"min", report.success_min},
                              {"max", report.success_max},
                              {"below_average_count", report.below_average_count}};
    } else {
        j["success_stats"] = nullptr;
    }
    j["degenerate_pool_count"] = report.degenerate_pool_count;
    return j.dump(2) + "\n";
}

void write_per_worker_errors_csv(const EvaluationReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "worker_id,relative_error\n";
    for (const auto& [worker, err] : report.per_worker_errors) {
        out << csv::join_record({worker, nlohmann::json(err).dump()}) << "\n";
    }
}

}  // namespace crowdrec
