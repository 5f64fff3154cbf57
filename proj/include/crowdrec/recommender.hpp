#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crowdrec/collab.hpp"
#include "crowdrec/profile.hpp"

namespace crowdrec {

struct RecommenderConfig {
    double alpha = 0.30;          // proficiency threshold, strict >
    double beta = 0.30;           // specialty threshold, strict >
    int min_conditions = 3;       // of the 4 conditions
    double label_threshold = 0.5; // quadrant split on normalized scores
    int horizon_days = 14;
};

struct ConditionFlags {
    bool prize = false;        // worker's base prize <= task prize
    bool duration = false;     // worker's base duration <= task duration
    bool proficiency = false;  // APL > alpha
    bool specialty = false;    // SL > beta

    int count() const {
        return int(prize) + int(duration) + int(proficiency) + int(specialty);
    }
};

enum class Label { VeryStrong, Strong, Recommend, Low };

const char* to_string(Label l);

struct Recommendation {
    std::string worker_id;
    std::string task_id;
    ConditionFlags conditions;
    double apl = 0.0;
    double sl = 0.0;
    bool empty_tech_flag = false;   // task listed no technologies
    double norm_proficiency = 0.0;  // apl / worker's max apl in the list
    double norm_specialty = 0.0;
    bool norm_flagged = false;      // a per-worker maximum was zero
    Label label = Label::Low;

    // Filled by the success predictor.
    bool scored = false;
    double spr = 0.0;
    double aper = 0.0;
    double tl = 0.0;
    double p_vs = 0.0;
    std::optional<double> success_probability;
};

ConditionFlags check_conditions(const WorkerProfile& worker,
                                const TaskRecord& task,
                                const RecommenderConfig& cfg);

// Potential tasks surviving the condition filter, task_id ascending,
// unlabeled. Throws ValidationError for a worker with no history.
std::vector<Recommendation> recommend(const std::string& worker_id,
                                      const Dataset& ds,
                                      const CollaborationIndex& index,
                                      const std::map<std::string, WorkerProfile>& profiles,
                                      const RecommenderConfig& cfg,
                                      Date cutoff);

// Max-normalizes APL and SL over one worker's list and assigns the
// quadrant label. All entries must share one worker_id.
void label_recommendations(std::vector<Recommendation>& recs,
                           double threshold = 0.5);

}  // namespace crowdrec
