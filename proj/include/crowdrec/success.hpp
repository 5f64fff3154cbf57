#pragma once

#include <map>
#include <string>
#include <vector>

#include "crowdrec/recommender.hpp"

namespace crowdrec {

enum class PvsMode { Table, Empirical };

// Everyone the task was recommended to in the current run.
struct CompetitorPool {
    std::string task_id;
    std::vector<std::string> members;  // sorted worker ids
};

// SP_i / sum of SP over the pool; 0 when no member ever did this type.
double specialty_participation_ratio(const WorkerProfile& worker,
                                     const TaskRecord& task,
                                     const CompetitorPool& pool,
                                     const std::map<std::string, WorkerProfile>& profiles);

// Mean over the task's technologies of the worker's share of the pool's
// usage of that technology; 0 per technology on a zero denominator.
double avg_proficiency_experience_ratio(const WorkerProfile& worker,
                                        const TaskRecord& task,
                                        const CompetitorPool& pool,
                                        const std::map<std::string, WorkerProfile>& profiles);

// Fills spr/aper/tl/p_vs/success_probability on every recommendation.
// Pools are derived from the recommendation lists themselves. Returns the
// number of degenerate pools (every member's numerator zero).
int score_success(std::map<std::string, std::vector<Recommendation>>& recs_by_worker,
                  const Dataset& ds,
                  const std::map<std::string, WorkerProfile>& profiles,
                  PvsMode pvs_mode);

// Top-k by success probability descending, ties broken by task_id.
std::vector<Recommendation> top_k(const std::vector<Recommendation>& recs, int k = 3);

}  // namespace crowdrec
