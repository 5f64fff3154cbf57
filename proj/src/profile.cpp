#include "crowdrec/profile.hpp"

#include <algorithm>
#include <limits>

#include "crowdrec/errors.hpp"

namespace crowdrec {

const char* to_string(Belt b) {
    switch (b) {
        case Belt::Gray: return "Gray";
        case Belt::Green: return "Green";
        case Belt::Blue: return "Blue";
        case Belt::Yellow: return "Yellow";
        case Belt::Red: return "Red";
    }
    return "Gray";
}

Belt belt_of(int rating) {
    if (rating < 900) return Belt::Gray;
    if (rating < 1200) return Belt::Green;
    if (rating < 1500) return Belt::Blue;
    if (rating < 2200) return Belt::Yellow;
    return Belt::Red;
}

double default_p_vs(Belt b) {
    switch (b) {
        case Belt::Gray: return 0.25;
        case Belt::Green: return 0.45;
        case Belt::Blue: return 0.39;
        case Belt::Yellow: return 0.6;
        case Belt::Red: return 0.6;
    }
    return 0.25;
}

std::map<std::string, WorkerProfile> build_profiles(const Dataset& ds,
                                                    const IndicatorTable& indicators) {
    // Per-worker registrations ordered by (registration_date, task_id) so
    // the "last 15" window is deterministic under date ties.
    std::map<std::string, std::vector<const RegistrationRecord*>> by_worker;
    for (const auto& r : ds.registrations) by_worker[r.worker_id].push_back(&r);

    std::map<std::string, WorkerProfile> profiles;
    for (auto& [worker_id, regs] : by_worker) {
        std::sort(regs.begin(), regs.end(),
                  [](const RegistrationRecord* a, const RegistrationRecord* b) {
                      return std::tie(a->registration_date, a->task_id) <
                             std::tie(b->registration_date, b->task_id);
                  });

        WorkerProfile p;
        p.worker_id = worker_id;
        auto rating = ds.ratings.find(worker_id);
        p.belt = belt_of(rating == ds.ratings.end() ? 0 : rating->second);

        double min_prize = std::numeric_limits<double>::infinity();
        int min_span = std::numeric_limits<int>::max();
        int min_task_duration = std::numeric_limits<int>::max();
        bool any_submission = false;
        for (const auto* r : regs) {
            const TaskRecord& task = ds.tasks.at(r->task_id);
            min_prize = std::min(min_prize, task.monetary_prize);
            min_task_duration = std::min(min_task_duration, task.duration_days());
            if (r->submission_date) {
                any_submission = true;
                min_span = std::min(min_span, *r->submission_date - r->registration_date);
            }
            p.registration_count += 1;
            p.submission_count += r->submitted ? 1 : 0;
            p.valid_submission_count += r->valid_submission ? 1 : 0;
        }
        p.base_monetary_prize = min_prize;
        if (any_submission) {
            p.base_duration = min_span;
        } else {
            p.base_duration = min_task_duration;
            p.duration_fallback = true;
        }

        const std::size_t window = std::min<std::size_t>(15, regs.size());
        int valid_in_window = 0;
        for (std::size_t i = regs.size() - window; i < regs.size(); ++i) {
            if (regs[i]->valid_submission) ++valid_in_window;
        }
        p.trustworthiness = window ? double(valid_in_window) / double(window) : 0.0;

        if (auto it = indicators.wtech.find(worker_id); it != indicators.wtech.end()) {
            p.wtech = it->second;
        }
        if (auto it = indicators.wtype.find(worker_id); it != indicators.wtype.end()) {
            p.wtype = it->second;
        }
        profiles.emplace(worker_id, std::move(p));
    }
    return profiles;
}

double proficiency(const WorkerProfile& worker, const std::string& tech_key) {
    long long total = 0;
    for (const auto& [tech, count] : worker.wtech) total += count;
    if (total == 0) return 0.0;
    auto it = worker.wtech.find(tech_key);
    if (it == worker.wtech.end()) return 0.0;
    return double(it->second) / double(total);
}

double avg_proficiency(const WorkerProfile& worker, const TaskRecord& task, bool* empty_flag) {
    if (empty_flag) *empty_flag = task.tech_keys.empty();
    if (task.tech_keys.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& key : task.tech_keys) sum += proficiency(worker, key);
    return sum / double(task.tech_keys.size());
}

double specialty(const WorkerProfile& worker, const std::string& type_key) {
    long long total = 0;
    for (const auto& [type, count] : worker.wtype) total += count;
    if (total == 0) return 0.0;
    auto it = worker.wtype.find(type_key);
    if (it == worker.wtype.end()) return 0.0;
    return double(it->second) / double(total);
}

double prob_valid_submission(Belt belt, const Dataset* ds) {
    if (!ds) return default_p_vs(belt);
    long long registrations = 0, valid = 0;
    for (const auto& r : ds->registrations) {
        auto rating = ds->ratings.find(r.worker_id);
        const Belt b = belt_of(rating == ds->ratings.end() ? 0 : rating->second);
        if (b != belt) continue;
        registrations += 1;
        valid += r.valid_submission ? 1 : 0;
    }
    if (registrations == 0) return default_p_vs(belt);
    return double(valid) / double(registrations);
}

}  // namespace crowdrec
