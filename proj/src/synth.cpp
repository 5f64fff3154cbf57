#include "crowdrec/synth.hpp"

#include <random>
#include <set>
#include <vector>

#include "crowdrec/errors.hpp"
#include "crowdrec/profile.hpp"

namespace crowdrec {

namespace {

// Thin wrapper so the draw sequence is pinned to mt19937_64 output alone;
// std::uniform_*_distribution is implementation-defined and would break
// cross-toolchain reproducibility.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
    int range(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }
    double unit() { return double(gen() >> 11) * (1.0 / 9007199254740992.0); }
};

const char* kTypeNames[] = {"First2Finish", "Code", "Assembly Competition",
                            "UI Prototype Competition", "Design", "Bug Hunt",
                            "Test Suites", "Architecture"};
const char* kTechNames[] = {"Java", "HTML", "JavaScript", "SQL", "Python", "CSS",
                            "Android", "IOS", "Node.js", ".NET", "Apex", "MongoDB"};

std::string nth_name(const char* const* base, std::size_t base_count,
                     const char* prefix, int i) {
    if (std::size_t(i) < base_count) return base[i];
    return std::string(prefix) + std::to_string(i + 1);
}

}  // namespace

Date synth_history_start() { return make_date(2014, 1, 1); }

Date synth_history_end(const SynthParams& params) {
    return synth_history_start() + params.months * 30;
}

Dataset synth_generate(const SynthParams& params) {
    if (params.n_workers <= 0 || params.n_tasks <= 0 || params.n_techs <= 0 ||
        params.n_types <= 0 || params.months <= 0) {
        throw ConfigError("synth: all sizes must be positive");
    }
    Rng rng(params.seed);
    Dataset ds;

    const Date start = synth_history_start();
    const int total_days = params.months * 30;

    std::vector<std::string> types, techs;
    for (int i = 0; i < params.n_types; ++i) {
        types.push_back(nth_name(kTypeNames, std::size(kTypeNames), "Type ", i));
    }
    for (int i = 0; i < params.n_techs; ++i) {
        techs.push_back(nth_name(kTechNames, std::size(kTechNames), "Tech ", i));
    }

    std::vector<std::string> task_ids;
    for (int i = 0; i < params.n_tasks; ++i) {
        TaskRecord t;
        t.task_id = "T" + std::to_string(10000 + i);
        t.task_type = types[rng.below(types.size())];
        const int n_req = rng.range(1, 3);
        std::set<std::string> picked;
        while (int(picked.size()) < n_req && int(picked.size()) < params.n_techs) {
            picked.insert(techs[rng.below(techs.size())]);
        }
        t.technologies.assign(picked.begin(), picked.end());
        t.monetary_prize = double(rng.range(2, 50) * 50);  // 100..2500 USD
        t.registration_start = start + int(rng.below(std::uint64_t(total_days)));
        t.submission_end = t.registration_start + rng.range(3, 30);
        const double roll = rng.unit();
        t.status = roll < 0.6 ? TaskStatus::Completed
                              : (roll < 0.85 ? TaskStatus::Failed : TaskStatus::Open);
        t.derive_keys();
        task_ids.push_back(t.task_id);
        ds.tasks.emplace(t.task_id, std::move(t));
    }

    for (int i = 0; i < params.n_workers; ++i) {
        const std::string worker_id = "W" + std::to_string(10000 + i);

        // Belt shares from the platform-wide distribution:
        // Gray 90.02, Green 2.88, Blue 5.39, Yellow 1.54, Red 0.16 (%).
        const double u = rng.unit();
        int rating;
        if (u < 0.9002) {
            rating = rng.range(0, 899);
        } else if (u < 0.9290) {
            rating = rng.range(900, 1199);
        } else if (u < 0.9829) {
            rating = rng.range(1200, 1499);
        } else if (u < 0.9983) {
            rating = rng.range(1500, 2199);
        } else {
            rating = rng.range(2200, 3000);
        }
        ds.ratings[worker_id] = rating;
        const double p_valid = default_p_vs(belt_of(rating));

        const int n_regs = rng.range(3, std::min(20, params.n_tasks));
        std::set<std::string> chosen;
        while (int(chosen.size()) < n_regs) {
            chosen.insert(task_ids[rng.below(task_ids.size())]);
        }
        for (const auto& task_id : chosen) {
            const TaskRecord& task = ds.tasks.at(task_id);
            RegistrationRecord r;
            r.worker_id = worker_id;
            r.task_id = task_id;
            const int window = task.submission_end - task.registration_start;
            r.registration_date = task.registration_start + rng.range(0, window);
            r.valid_submission = rng.unit() < p_valid;
            r.submitted = r.valid_submission || rng.unit() < 0.35;
            if (r.submitted) {
                r.submission_date =
                    r.registration_date +
                    rng.range(0, task.submission_end - r.registration_date);
            }
            ds.registrations.push_back(std::move(r));
        }
    }

    return ds;
}

}  // namespace crowdrec
