#pragma once

#include <string>
#include <vector>

#include "crowdrec/dataset.hpp"

namespace crowdrec::testing {

inline TaskRecord make_task(std::string id, std::string type,
                            std::vector<std::string> techs, double prize,
                            Date start, int duration_days,
                            TaskStatus status = TaskStatus::Open) {
    TaskRecord t;
    t.task_id = std::move(id);
    t.task_type = std::move(type);
    t.technologies = std::move(techs);
    t.monetary_prize = prize;
    t.registration_start = start;
    t.submission_end = start + duration_days;
    t.status = status;
    t.derive_keys();
    return t;
}

inline RegistrationRecord make_reg(std::string worker, std::string task, Date date,
                                   bool submitted = false, bool valid = false,
                                   int submit_after_days = 0) {
    RegistrationRecord r;
    r.worker_id = std::move(worker);
    r.task_id = std::move(task);
    r.registration_date = date;
    r.submitted = submitted;
    r.valid_submission = valid;
    if (submitted) r.submission_date = date + submit_after_days;
    return r;
}

inline void add_task(Dataset& ds, TaskRecord task) {
    ds.tasks.emplace(task.task_id, std::move(task));
}

}  // namespace crowdrec::testing
