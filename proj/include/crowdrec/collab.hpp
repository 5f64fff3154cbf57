#pragma once

#include <map>
#include <set>
#include <string>

#include "crowdrec/dataset.hpp"

namespace crowdrec {

// Bipartite worker-task registration network. Two workers collaborate
// when they registered for at least one task in common.
struct CollaborationIndex {
    std::map<std::string, std::set<std::string>> worker_tasks;
    std::map<std::string, std::set<std::string>> task_workers;
    std::map<std::string, std::set<std::string>> collaborators;
};

CollaborationIndex build_index(const Dataset& ds);

// Union over collaborators k of (tasks of k minus tasks of the worker),
// restricted to tasks whose registration window overlaps
// [cutoff, cutoff + horizon_days). Throws std::out_of_range for a worker
// absent from the index.
std::set<std::string> potential_tasks(const std::string& worker_id,
                                      const CollaborationIndex& index,
                                      Date cutoff, int horizon_days,
                                      const Dataset& ds);

// True when the task's registration window overlaps [cutoff, cutoff+horizon).
bool task_open_in_window(const TaskRecord& task, Date cutoff, int horizon_days);

}  // namespace crowdrec
