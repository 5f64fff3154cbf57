#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crowdrec/date.hpp"

namespace crowdrec {

enum class TaskStatus { Completed, Failed, Open };

const char* to_string(TaskStatus s);
std::optional<TaskStatus> parse_task_status(const std::string& text);

// Trim + ASCII case-fold, used for technology and task-type matching.
std::string normalize_name(const std::string& raw);

struct TaskRecord {
    std::string task_id;
    std::string task_type;                    // raw, as ingested
    std::vector<std::string> technologies;    // raw, as ingested
    double monetary_prize = 0.0;
    Date registration_start;
    Date submission_end;
    TaskStatus status = TaskStatus::Open;

    // Normalized + sorted + deduplicated, derived at load time.
    std::string type_key;
    std::vector<std::string> tech_keys;

    int duration_days() const { return submission_end - registration_start; }
    void derive_keys();
};

struct RegistrationRecord {
    std::string worker_id;
    std::string task_id;
    Date registration_date;
    std::optional<Date> submission_date;
    bool submitted = false;
    bool valid_submission = false;
};

struct Dataset {
    std::map<std::string, TaskRecord> tasks;      // keyed by task_id
    std::vector<RegistrationRecord> registrations;
    std::map<std::string, int> ratings;           // worker_id -> rating

    std::set<std::string> worker_ids() const;
};

}  // namespace crowdrec
