#include "crowdrec/recommender.hpp"

#include <algorithm>

#include "crowdrec/errors.hpp"

namespace crowdrec {

const char* to_string(Label l) {
    switch (l) {
        case Label::VeryStrong: return "VeryStrong";
        case Label::Strong: return "Strong";
        case Label::Recommend: return "Recommend";
        case Label::Low: return "Low";
    }
    return "Low";
}

ConditionFlags check_conditions(const WorkerProfile& worker,
                                const TaskRecord& task,
                                const RecommenderConfig& cfg) {
    ConditionFlags flags;
    flags.prize = worker.base_monetary_prize <= task.monetary_prize;
    flags.duration = worker.base_duration <= task.duration_days();
    flags.proficiency = avg_proficiency(worker, task) > cfg.alpha;
    flags.specialty = specialty(worker, task.type_key) > cfg.beta;
    return flags;
}

std::vector<Recommendation> recommend(const std::string& worker_id,
                                      const Dataset& ds,
                                      const CollaborationIndex& index,
                                      const std::map<std::string, WorkerProfile>& profiles,
                                      const RecommenderConfig& cfg,
                                      Date cutoff) {
    auto profile = profiles.find(worker_id);
    if (profile == profiles.end()) {
        throw ValidationError("worker '" + worker_id + "' has no history");
    }
    const WorkerProfile& worker = profile->second;

    std::vector<Recommendation> recs;
    for (const auto& task_id : potential_tasks(worker_id, index, cutoff, cfg.horizon_days, ds)) {
        const TaskRecord& task = ds.tasks.at(task_id);
        const ConditionFlags flags = check_conditions(worker, task, cfg);
        if (flags.count() < cfg.min_conditions) continue;
        Recommendation rec;
        rec.worker_id = worker_id;
        rec.task_id = task_id;
        rec.conditions = flags;
        rec.apl = avg_proficiency(worker, task, &rec.empty_tech_flag);
        rec.sl = specialty(worker, task.type_key);
        recs.push_back(std::move(rec));
    }
    // potential_tasks is a sorted set, so recs are already task_id ascending.
    return recs;
}

void label_recommendations(std::vector<Recommendation>& recs, double threshold) {
    if (recs.empty()) return;
    double max_apl = 0.0, max_sl = 0.0;
    for (const auto& r : recs) {
        max_apl = std::max(max_apl, r.apl);
        max_sl = std::max(max_sl, r.sl);
    }
    for (auto& r : recs) {
        r.norm_flagged = (max_apl == 0.0) || (max_sl == 0.0);
        r.norm_proficiency = max_apl > 0.0 ? r.apl / max_apl : 0.0;
        r.norm_specialty = max_sl > 0.0 ? r.sl / max_sl : 0.0;
        const bool high_prof = r.norm_proficiency > threshold;
        const bool high_spec = r.norm_specialty > threshold;
        if (high_prof && high_spec) {
            r.label = Label::VeryStrong;
        } else if (high_prof) {
            r.label = Label::Strong;
        } else if (high_spec) {
            r.label = Label::Recommend;
        } else {
            r.label = Label::Low;
        }
    }
}

}  // namespace crowdrec
