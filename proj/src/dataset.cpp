#include "crowdrec/dataset.hpp"

#include <algorithm>
#include <cctype>

namespace crowdrec {

const char* to_string(TaskStatus s) {
    switch (s) {
        case TaskStatus::Completed: return "completed";
        case TaskStatus::Failed: return "failed";
        case TaskStatus::Open: return "open";
    }
    return "open";
}

std::optional<TaskStatus> parse_task_status(const std::string& text) {
    const std::string key = normalize_name(text);
    if (key == "completed") return TaskStatus::Completed;
    if (key == "failed") return TaskStatus::Failed;
    if (key == "open") return TaskStatus::Open;
    return std::nullopt;
}

std::string normalize_name(const std::string& raw) {
    std::size_t begin = 0, end = raw.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    std::string out = raw.substr(begin, end - begin);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void TaskRecord::derive_keys() {
    type_key = normalize_name(task_type);
    tech_keys.clear();
    for (const auto& t : technologies) {
        std::string key = normalize_name(t);
        if (!key.empty()) tech_keys.push_back(std::move(key));
    }
    std::sort(tech_keys.begin(), tech_keys.end());
    tech_keys.erase(std::unique(tech_keys.begin(), tech_keys.end()), tech_keys.end());
}

std::set<std::string> Dataset::worker_ids() const {
    std::set<std::string> ids;
    for (const auto& r : registrations) ids.insert(r.worker_id);
    return ids;
}

}  // namespace crowdrec
