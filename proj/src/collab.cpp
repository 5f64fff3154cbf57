#include "crowdrec/collab.hpp"

#include <stdexcept>

namespace crowdrec {

CollaborationIndex build_index(const Dataset& ds) {
    CollaborationIndex index;
    for (const auto& r : ds.registrations) {
        index.worker_tasks[r.worker_id].insert(r.task_id);
        index.task_workers[r.task_id].insert(r.worker_id);
    }
    for (const auto& [worker, tasks] : index.worker_tasks) {
        auto& collabs = index.collaborators[worker];
        for (const auto& task : tasks) {
            for (const auto& other : index.task_workers.at(task)) {
                if (other != worker) collabs.insert(other);
            }
        }
    }
    return index;
}

bool task_open_in_window(const TaskRecord& task, Date cutoff, int horizon_days) {
    return task.registration_start < cutoff + horizon_days && cutoff <= task.submission_end;
}

std::set<std::string> potential_tasks(const std::string& worker_id,
                                      const CollaborationIndex& index,
                                      Date cutoff, int horizon_days,
                                      const Dataset& ds) {
    auto own = index.worker_tasks.find(worker_id);
    if (own == index.worker_tasks.end()) {
        throw std::out_of_range("unknown worker '" + worker_id + "'");
    }
    std::set<std::string> pool;
    auto collabs = index.collaborators.find(worker_id);
    if (collabs == index.collaborators.end()) return pool;
    for (const auto& k : collabs->second) {
        for (const auto& task_id : index.worker_tasks.at(k)) {
            if (own->second.contains(task_id)) continue;
            if (!task_open_in_window(ds.tasks.at(task_id), cutoff, horizon_days)) continue;
            pool.insert(task_id);
        }
    }
    return pool;
}

}  // namespace crowdrec
