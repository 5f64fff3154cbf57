#pragma once

#include <map>
#include <string>

#include "crowdrec/dataset.hpp"
#include "crowdrec/ingest.hpp"

namespace crowdrec {

enum class Belt { Gray, Green, Blue, Yellow, Red };

const char* to_string(Belt b);

// Rating tiers as half-open intervals closed on the left:
// X<900 Gray, [900,1200) Green, [1200,1500) Blue, [1500,2200) Yellow, >=2200 Red.
Belt belt_of(int rating);

// Platform-wide valid-submission probability per belt:
// Gray 0.25, Green 0.45, Blue 0.39, Yellow 0.6, Red 0.6.
double default_p_vs(Belt b);

struct WorkerProfile {
    std::string worker_id;
    Belt belt = Belt::Gray;
    double base_monetary_prize = 0.0;  // min prize over registered tasks
    int base_duration = 0;             // min registration-to-submission span, days
    bool duration_fallback = false;    // no submitted records, fell back to task durations
    std::map<std::string, int> wtech;  // normalized tech -> count
    std::map<std::string, int> wtype;  // normalized type -> count
    double trustworthiness = 0.0;      // valid ratio over last <=15 registrations
    int registration_count = 0;
    int submission_count = 0;
    int valid_submission_count = 0;
};

// One profile per worker appearing in the registration log.
std::map<std::string, WorkerProfile> build_profiles(const Dataset& ds,
                                                    const IndicatorTable& indicators);

// PL: worker's participation share in one technology (normalized key).
double proficiency(const WorkerProfile& worker, const std::string& tech_key);

// APL: mean PL over the task's required technologies; 0 when the task
// lists none (empty_flag set).
double avg_proficiency(const WorkerProfile& worker, const TaskRecord& task,
                       bool* empty_flag = nullptr);

// SL: worker's registration share in one task type (normalized key).
double specialty(const WorkerProfile& worker, const std::string& type_key);

// Belt-level p(VS). With a dataset, the empirical ratio sum(VS)/sum(R)
// over the belt's workers, falling back to the default when the belt has
// no registrations.
double prob_valid_submission(Belt belt, const Dataset* ds = nullptr);

}  // namespace crowdrec
