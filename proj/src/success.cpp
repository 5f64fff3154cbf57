#include "crowdrec/success.hpp"

#include <algorithm>

namespace crowdrec {

double specialty_participation_ratio(const WorkerProfile& worker,
                                     const TaskRecord& task,
                                     const CompetitorPool& pool,
                                     const std::map<std::string, WorkerProfile>& profiles) {
    auto type_count = [&](const WorkerProfile& p) {
        auto it = p.wtype.find(task.type_key);
        return it == p.wtype.end() ? 0 : it->second;
    };
    long long denom = 0;
    for (const auto& member : pool.members) denom += type_count(profiles.at(member));
    if (denom == 0) return 0.0;
    return double(type_count(worker)) / double(denom);
}

double avg_proficiency_experience_ratio(const WorkerProfile& worker,
                                        const TaskRecord& task,
                                        const CompetitorPool& pool,
                                        const std::map<std::string, WorkerProfile>& profiles) {
    if (task.tech_keys.empty()) return 0.0;
    auto tech_count = [&](const WorkerProfile& p, const std::string& key) {
        auto it = p.wtech.find(key);
        return it == p.wtech.end() ? 0 : it->second;
    };
    double sum = 0.0;
    for (const auto& key : task.tech_keys) {
        long long denom = 0;
        for (const auto& member : pool.members) denom += tech_count(profiles.at(member), key);
        if (denom > 0) sum += double(tech_count(worker, key)) / double(denom);
    }
    return sum / double(task.tech_keys.size());
}

int score_success(std::map<std::string, std::vector<Recommendation>>& recs_by_worker,
                  const Dataset& ds,
                  const std::map<std::string, WorkerProfile>& profiles,
                  PvsMode pvs_mode) {
    std::map<std::string, CompetitorPool> pools;
    for (const auto& [worker, recs] : recs_by_worker) {
        for (const auto& r : recs) {
            auto& pool = pools[r.task_id];
            pool.task_id = r.task_id;
            pool.members.push_back(worker);
        }
    }
    for (auto& [task_id, pool] : pools) {
        std::sort(pool.members.begin(), pool.members.end());
    }

    double p_vs_by_belt[5];
    for (int b = 0; b < 5; ++b) {
        p_vs_by_belt[b] = prob_valid_submission(static_cast<Belt>(b),
                                                pvs_mode == PvsMode::Empirical ? &ds : nullptr);
    }

    // numerator_i = SPR_i * APER_i * TL_i * p(VS)_i, normalized per pool.
    std::map<std::string, std::map<std::string, double>> numerators;  // task -> worker -> value
    std::map<std::string, double> pool_sums;
    int degenerate = 0;
    for (const auto& [task_id, pool] : pools) {
        const TaskRecord& task = ds.tasks.at(task_id);
        double sum = 0.0;
        for (const auto& member : pool.members) {
            const WorkerProfile& p = profiles.at(member);
            const double spr = specialty_participation_ratio(p, task, pool, profiles);
            const double aper = avg_proficiency_experience_ratio(p, task, pool, profiles);
            const double numerator =
                spr * aper * p.trustworthiness * p_vs_by_belt[static_cast<int>(p.belt)];
            numerators[task_id][member] = numerator;
            sum += numerator;
        }
        pool_sums[task_id] = sum;
        if (sum == 0.0) ++degenerate;
    }

    for (auto& [worker, recs] : recs_by_worker) {
        for (auto& r : recs) {
            const CompetitorPool& pool = pools.at(r.task_id);
            const TaskRecord& task = ds.tasks.at(r.task_id);
            const WorkerProfile& p = profiles.at(worker);
            r.spr = specialty_participation_ratio(p, task, pool, profiles);
            r.aper = avg_proficiency_experience_ratio(p, task, pool, profiles);
            r.tl = p.trustworthiness;
            r.p_vs = p_vs_by_belt[static_cast<int>(p.belt)];
            const double sum = pool_sums.at(r.task_id);
            r.success_probability = sum > 0.0 ? numerators.at(r.task_id).at(worker) / sum : 0.0;
            r.scored = true;
        }
    }
    return degenerate;
}

std::vector<Recommendation> top_k(const std::vector<Recommendation>& recs, int k) {
    std::vector<Recommendation> ordered = recs;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Recommendation& a, const Recommendation& b) {
                         const double pa = a.success_probability.value_or(0.0);
                         const double pb = b.success_probability.value_or(0.0);
                         if (pa != pb) return pa > pb;
                         return a.task_id < b.task_id;
                     });
    if (k >= 0 && ordered.size() > std::size_t(k)) ordered.resize(std::size_t(k));
    return ordered;
}

}  // namespace crowdrec
