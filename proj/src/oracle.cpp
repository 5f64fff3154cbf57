#include "crowdrec/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "crowdrec/errors.hpp"

// Naive reimplementation of the full pipeline, written straight-line on
// purpose: it recomputes everything from the raw dataset and calls none of
// the engine modules, so it can serve as an independent cross-check.

namespace crowdrec {

namespace {

std::string oracle_normalize(const std::string& raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    for (std::size_t i = b; i < e; ++i) {
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i])));
    }
    return out;
}

std::vector<std::string> oracle_task_techs(const TaskRecord& task) {
    std::vector<std::string> keys;
    for (const auto& t : task.technologies) {
        std::string k = oracle_normalize(t);
        if (!k.empty()) keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

int oracle_month(Date d) {
    const CivilDate c = civil_of(d);
    return c.year * 12 + int(c.month) - 1;
}

}  // namespace

RunOutput oracle_recommend(const Dataset& ds, const RunConfig& cfg) {
    std::set<std::string> all_workers;
    for (const auto& r : ds.registrations) all_workers.insert(r.worker_id);
    if (int(all_workers.size()) > kOracleMaxWorkers || int(ds.tasks.size()) > kOracleMaxTasks) {
        throw ValidationError("oracle scale guard exceeded (" +
                              std::to_string(all_workers.size()) + " workers, " +
                              std::to_string(ds.tasks.size()) + " tasks)");
    }

    RunOutput out;
    out.cutoff = cfg.cutoff;
    out.horizon_days = cfg.horizon_days;

    for (const auto& r : ds.registrations) {
        if (oracle_month(r.registration_date) == oracle_month(cfg.cutoff)) {
            out.workers_considered.insert(r.worker_id);
        }
    }

    // Per-worker raw material, recomputed from scratch.
    struct OracleWorker {
        std::set<std::string> tasks;
        std::map<std::string, int> wtech, wtype;
        double min_prize = 0.0;
        int base_duration = 0;
        double trust = 0.0;
        int belt = 0;  // 0 Gray .. 4 Red
    };
    std::map<std::string, OracleWorker> workers;
    for (const auto& worker : all_workers) {
        OracleWorker w;
        std::vector<const RegistrationRecord*> regs;
        for (const auto& r : ds.registrations) {
            if (r.worker_id == worker) regs.push_back(&r);
        }
        bool first = true;
        bool any_submission = false;
        int min_span = 0;
        int min_task_duration = 0;
        bool first_task_duration = true;
        for (const auto* r : regs) {
            const TaskRecord& task = ds.tasks.at(r->task_id);
            w.tasks.insert(r->task_id);
            for (const auto& key : oracle_task_techs(task)) w.wtech[key] += 1;
            const std::string type_key = oracle_normalize(task.task_type);
            if (!type_key.empty()) w.wtype[type_key] += 1;
            if (first || task.monetary_prize < w.min_prize) w.min_prize = task.monetary_prize;
            first = false;
            const int task_duration = task.submission_end - task.registration_start;
            if (first_task_duration || task_duration < min_task_duration) {
                min_task_duration = task_duration;
            }
            first_task_duration = false;
            if (r->submission_date) {
                const int span = *r->submission_date - r->registration_date;
                if (!any_submission || span < min_span) min_span = span;
                any_submission = true;
            }
        }
        w.base_duration = any_submission ? min_span : min_task_duration;

        std::sort(regs.begin(), regs.end(),
                  [](const RegistrationRecord* a, const RegistrationRecord* b) {
                      if (a->registration_date != b->registration_date) {
                          return a->registration_date < b->registration_date;
                      }
                      return a->task_id < b->task_id;
                  });
        std::size_t window = regs.size() < 15 ? regs.size() : 15;
        int valid = 0;
        for (std::size_t i = regs.size() - window; i < regs.size(); ++i) {
            if (regs[i]->valid_submission) ++valid;
        }
        w.trust = window ? double(valid) / double(window) : 0.0;

        int rating = 0;
        if (auto it = ds.ratings.find(worker); it != ds.ratings.end()) rating = it->second;
        if (rating < 900) {
            w.belt = 0;
        } else if (rating < 1200) {
            w.belt = 1;
        } else if (rating < 1500) {
            w.belt = 2;
        } else if (rating < 2200) {
            w.belt = 3;
        } else {
            w.belt = 4;
        }
        workers.emplace(worker, std::move(w));
    }

    const double table_pvs[5] = {0.25, 0.45, 0.39, 0.6, 0.6};
    double pvs_by_belt[5];
    for (int b = 0; b < 5; ++b) pvs_by_belt[b] = table_pvs[b];
    if (cfg.pvs_mode == PvsMode::Empirical) {
        long long regs_per_belt[5] = {0, 0, 0, 0, 0};
        long long valid_per_belt[5] = {0, 0, 0, 0, 0};
        for (const auto& r : ds.registrations) {
            const int belt = workers.at(r.worker_id).belt;
            regs_per_belt[belt] += 1;
            if (r.valid_submission) valid_per_belt[belt] += 1;
        }
        for (int b = 0; b < 5; ++b) {
            if (regs_per_belt[b] > 0) {
                pvs_by_belt[b] = double(valid_per_belt[b]) / double(regs_per_belt[b]);
            }
        }
    }

    auto proficiency_of = [](const OracleWorker& w, const std::string& tech_key) {
        long long total = 0;
        for (const auto& [k, c] : w.wtech) total += c;
        if (total == 0) return 0.0;
        auto it = w.wtech.find(tech_key);
        return it == w.wtech.end() ? 0.0 : double(it->second) / double(total);
    };
    auto apl_of = [&](const OracleWorker& w, const TaskRecord& task) {
        const auto keys = oracle_task_techs(task);
        if (keys.empty()) return 0.0;
        double sum = 0.0;
        for (const auto& k : keys) sum += proficiency_of(w, k);
        return sum / double(keys.size());
    };
    auto sl_of = [](const OracleWorker& w, const std::string& type_key) {
        long long total = 0;
        for (const auto& [k, c] : w.wtype) total += c;
        if (total == 0) return 0.0;
        auto it = w.wtype.find(type_key);
        return it == w.wtype.end() ? 0.0 : double(it->second) / double(total);
    };

    for (const auto& worker : out.workers_considered) {
        const OracleWorker& me = workers.at(worker);

        std::set<std::string> collaborators;
        for (const auto& [other, w] : workers) {
            if (other == worker) continue;
            for (const auto& t : w.tasks) {
                if (me.tasks.contains(t)) {
                    collaborators.insert(other);
                    break;
                }
            }
        }
        std::set<std::string> candidates;
        for (const auto& k : collaborators) {
            for (const auto& t : workers.at(k).tasks) {
                if (me.tasks.contains(t)) continue;
                const TaskRecord& task = ds.tasks.at(t);
                if (task.registration_start.serial < cfg.cutoff.serial + cfg.horizon_days &&
                    cfg.cutoff.serial <= task.submission_end.serial) {
                    candidates.insert(t);
                }
            }
        }

        std::vector<Recommendation> recs;
        for (const auto& task_id : candidates) {
            const TaskRecord& task = ds.tasks.at(task_id);
            const double apl = apl_of(me, task);
            const double sl = sl_of(me, oracle_normalize(task.task_type));
            ConditionFlags flags;
            flags.prize = me.min_prize <= task.monetary_prize;
            flags.duration = me.base_duration <= task.submission_end - task.registration_start;
            flags.proficiency = apl > cfg.alpha;
            flags.specialty = sl > cfg.beta;
            int cnt = 0;
            if (flags.prize) ++cnt;
            if (flags.duration) ++cnt;
            if (flags.proficiency) ++cnt;
            if (flags.specialty) ++cnt;
            if (cnt < cfg.min_conditions) continue;
            Recommendation rec;
            rec.worker_id = worker;
            rec.task_id = task_id;
            rec.conditions = flags;
            rec.apl = apl;
            rec.sl = sl;
            rec.empty_tech_flag = oracle_task_techs(task).empty();
            recs.push_back(std::move(rec));
        }
        if (recs.empty()) continue;

        double max_apl = 0.0, max_sl = 0.0;
        for (const auto& r : recs) {
            if (r.apl > max_apl) max_apl = r.apl;
            if (r.sl > max_sl) max_sl = r.sl;
        }
        for (auto& r : recs) {
            r.norm_flagged = max_apl == 0.0 || max_sl == 0.0;
            r.norm_proficiency = max_apl > 0.0 ? r.apl / max_apl : 0.0;
            r.norm_specialty = max_sl > 0.0 ? r.sl / max_sl : 0.0;
            if (r.norm_proficiency > 0.5 && r.norm_specialty > 0.5) {
                r.label = Label::VeryStrong;
            } else if (r.norm_proficiency > 0.5) {
                r.label = Label::Strong;
            } else if (r.norm_specialty > 0.5) {
                r.label = Label::Recommend;
            } else {
                r.label = Label::Low;
            }
        }
        out.recommendations.emplace(worker, std::move(recs));
    }

    // Pool per task: everyone the task was recommended to in this run.
    std::map<std::string, std::vector<std::string>> pools;
    for (const auto& [worker, recs] : out.recommendations) {
        for (const auto& r : recs) pools[r.task_id].push_back(worker);
    }
    for (auto& [task_id, members] : pools) std::sort(members.begin(), members.end());

    std::map<std::string, std::map<std::string, double>> numerators;
    std::map<std::string, double> pool_sums;
    for (const auto& [task_id, members] : pools) {
        const TaskRecord& task = ds.tasks.at(task_id);
        const std::string type_key = oracle_normalize(task.task_type);
        const auto tech_keys = oracle_task_techs(task);

        long long sp_total = 0;
        for (const auto& m : members) {
            auto it = workers.at(m).wtype.find(type_key);
            sp_total += it == workers.at(m).wtype.end() ? 0 : it->second;
        }
        std::map<std::string, long long> tech_totals;
        for (const auto& key : tech_keys) {
            long long total = 0;
            for (const auto& m : members) {
                auto it = workers.at(m).wtech.find(key);
                total += it == workers.at(m).wtech.end() ? 0 : it->second;
            }
            tech_totals[key] = total;
        }

        double sum = 0.0;
        for (const auto& m : members) {
            const OracleWorker& w = workers.at(m);
            double spr = 0.0;
            if (sp_total > 0) {
                auto it = w.wtype.find(type_key);
                spr = double(it == w.wtype.end() ? 0 : it->second) / double(sp_total);
            }
            double aper = 0.0;
            if (!tech_keys.empty()) {
                double per_sum = 0.0;
                for (const auto& key : tech_keys) {
                    const long long total = tech_totals.at(key);
                    if (total > 0) {
                        auto it = w.wtech.find(key);
                        per_sum += double(it == w.wtech.end() ? 0 : it->second) / double(total);
                    }
                }
                aper = per_sum / double(tech_keys.size());
            }
            const double numerator = spr * aper * w.trust * pvs_by_belt[w.belt];
            numerators[task_id][m] = numerator;
            sum += numerator;
        }
        pool_sums[task_id] = sum;
        if (sum == 0.0) ++out.degenerate_pools;
    }

    for (auto& [worker, recs] : out.recommendations) {
        for (auto& r : recs) {
            const auto& members = pools.at(r.task_id);
            const TaskRecord& task = ds.tasks.at(r.task_id);
            const OracleWorker& w = workers.at(worker);
            const std::string type_key = oracle_normalize(task.task_type);
            long long sp_total = 0;
            for (const auto& m : members) {
                auto it = workers.at(m).wtype.find(type_key);
                sp_total += it == workers.at(m).wtype.end() ? 0 : it->second;
            }
            double spr = 0.0;
            if (sp_total > 0) {
                auto it = w.wtype.find(type_key);
                spr = double(it == w.wtype.end() ? 0 : it->second) / double(sp_total);
            }
            const auto tech_keys = oracle_task_techs(task);
            double aper = 0.0;
            if (!tech_keys.empty()) {
                double per_sum = 0.0;
                for (const auto& key : tech_keys) {
                    long long total = 0;
                    for (const auto& m : members) {
                        auto it = workers.at(m).wtech.find(key);
                        total += it == workers.at(m).wtech.end() ? 0 : it->second;
                    }
                    if (total > 0) {
                        auto it = w.wtech.find(key);
                        per_sum += double(it == w.wtech.end() ? 0 : it->second) / double(total);
                    }
                }
                aper = per_sum / double(tech_keys.size());
            }
            r.spr = spr;
            r.aper = aper;
            r.tl = w.trust;
            r.p_vs = pvs_by_belt[w.belt];
            const double sum = pool_sums.at(r.task_id);
            r.success_probability = sum > 0.0 ? numerators.at(r.task_id).at(worker) / sum : 0.0;
            r.scored = true;
        }
    }

    for (const auto& [worker, recs] : out.recommendations) {
        std::vector<Recommendation> ordered = recs;
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const Recommendation& a, const Recommendation& b) {
                             const double pa = a.success_probability.value_or(0.0);
                             const double pb = b.success_probability.value_or(0.0);
                             if (pa != pb) return pa > pb;
                             return a.task_id < b.task_id;
                         });
        if (ordered.size() > std::size_t(cfg.k)) ordered.resize(std::size_t(cfg.k));
        out.top.emplace(worker, std::move(ordered));
    }
    return out;
}

}  // namespace crowdrec
