#include "crowdrec/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "crowdrec/csv.hpp"
#include "crowdrec/errors.hpp"

namespace crowdrec {

namespace {

std::string row_error(const std::string& file, int line, const std::string& field,
                      const std::string& what) {
    std::ostringstream os;
    os << file << ":" << line << ": field '" << field << "': " << what;
    return os.str();
}

Date parse_date_field(const std::string& file, int line, const std::string& field,
                      const std::string& value) {
    auto d = parse_date(value);
    if (!d) throw ValidationError(row_error(file, line, field, "bad date '" + value + "'"));
    return *d;
}

bool parse_bool_field(const std::string& file, int line, const std::string& field,
                      const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ValidationError(row_error(file, line, field, "expected true/false, got '" + value + "'"));
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}

void expect_header(std::ifstream& in, const std::string& path, const std::string& expected) {
    std::string line;
    if (!csv::read_line(in, line)) throw ValidationError(path + ": empty file, expected header");
    if (line != expected) {
        throw ValidationError(path + ": bad header '" + line + "', expected '" + expected + "'");
    }
}

std::vector<std::string> split_technologies(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(joined);
    while (std::getline(is, cur, ';')) {
        if (!normalize_name(cur).empty()) out.push_back(cur);
    }
    return out;
}

std::string join_technologies(const std::vector<std::string>& techs) {
    std::string out;
    for (std::size_t i = 0; i < techs.size(); ++i) {
        if (i) out += ';';
        out += techs[i];
    }
    return out;
}

std::string format_prize(double prize) {
    if (prize == std::floor(prize) && std::abs(prize) < 1e15) {
        return std::to_string(static_cast<long long>(prize));
    }
    std::ostringstream os;
    os.precision(17);
    os << prize;
    return os.str();
}

}  // namespace

int IndicatorTable::tech_count(const std::string& worker, const std::string& tech_key) const {
    auto w = wtech.find(worker);
    if (w == wtech.end()) return 0;
    auto t = w->second.find(tech_key);
    return t == w->second.end() ? 0 : t->second;
}

int IndicatorTable::type_count(const std::string& worker, const std::string& type_key) const {
    auto w = wtype.find(worker);
    if (w == wtype.end()) return 0;
    auto t = w->second.find(type_key);
    return t == w->second.end() ? 0 : t->second;
}

Dataset load_dataset(const std::string& tasks_path,
                     const std::string& registrations_path,
                     const std::string& ratings_path) {
    Dataset ds;

    {
        auto in = open_or_throw(tasks_path);
        expect_header(in, tasks_path,
                      "task_id,task_type,technologies,monetary_prize,"
                      "registration_start,submission_end,status");
        std::string line;
        int lineno = 1;
        while (csv::read_line(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            auto f = csv::split_record(line);
            if (f.size() != 7) {
                throw ValidationError(row_error(tasks_path, lineno, "*",
                                                "expected 7 fields, got " + std::to_string(f.size())));
            }
            TaskRecord t;
            t.task_id = f[0];
            if (t.task_id.empty())
                throw ValidationError(row_error(tasks_path, lineno, "task_id", "empty"));
            t.task_type = f[1];
            t.technologies = split_technologies(f[2]);
            try {
                std::size_t pos = 0;
                t.monetary_prize = std::stod(f[3], &pos);
                if (pos != f[3].size()) throw std::invalid_argument("trailing chars");
            } catch (const std::exception&) {
                throw ValidationError(row_error(tasks_path, lineno, "monetary_prize",
                                                "bad number '" + f[3] + "'"));
            }
            if (t.monetary_prize < 0) {
                throw ValidationError(row_error(tasks_path, lineno, "monetary_prize", "negative"));
            }
            t.registration_start = parse_date_field(tasks_path, lineno, "registration_start", f[4]);
            t.submission_end = parse_date_field(tasks_path, lineno, "submission_end", f[5]);
            if (t.submission_end < t.registration_start) {
                throw ValidationError(row_error(tasks_path, lineno, "submission_end",
                                                "precedes registration_start"));
            }
            auto status = parse_task_status(f[6]);
            if (!status)
                throw ValidationError(row_error(tasks_path, lineno, "status",
                                                "unknown status '" + f[6] + "'"));
            t.status = *status;
            t.derive_keys();
            if (!ds.tasks.emplace(t.task_id, std::move(t)).second) {
                throw ValidationError(row_error(tasks_path, lineno, "task_id",
                                                "duplicate task_id '" + f[0] + "'"));
            }
        }
    }

    {
        auto in = open_or_throw(registrations_path);
        expect_header(in, registrations_path,
                      "worker_id,task_id,registration_date,submission_date,"
                      "submitted,valid_submission");
        std::string line;
        int lineno = 1;
        std::set<std::pair<std::string, std::string>> seen;
        std::vector<std::string> dangling;
        while (csv::read_line(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            auto f = csv::split_record(line);
            if (f.size() != 6) {
                throw ValidationError(row_error(registrations_path, lineno, "*",
                                                "expected 6 fields, got " + std::to_string(f.size())));
            }
            RegistrationRecord r;
            r.worker_id = f[0];
            r.task_id = f[1];
            if (r.worker_id.empty())
                throw ValidationError(row_error(registrations_path, lineno, "worker_id", "empty"));
            r.registration_date =
                parse_date_field(registrations_path, lineno, "registration_date", f[2]);
            r.submitted = parse_bool_field(registrations_path, lineno, "submitted", f[4]);
            r.valid_submission =
                parse_bool_field(registrations_path, lineno, "valid_submission", f[5]);
            if (f[3].empty()) {
                if (r.submitted) {
                    throw ValidationError(row_error(registrations_path, lineno, "submission_date",
                                                    "missing although submitted=true"));
                }
            } else {
                if (!r.submitted) {
                    throw ValidationError(row_error(registrations_path, lineno, "submission_date",
                                                    "present although submitted=false"));
                }
                r.submission_date =
                    parse_date_field(registrations_path, lineno, "submission_date", f[3]);
                if (*r.submission_date < r.registration_date) {
                    throw ValidationError(row_error(registrations_path, lineno, "submission_date",
                                                    "precedes registration_date"));
                }
            }
            if (r.valid_submission && !r.submitted) {
                throw ValidationError(row_error(registrations_path, lineno, "valid_submission",
                                                "true although submitted=false"));
            }
            if (!seen.emplace(r.worker_id, r.task_id).second) {
                throw ValidationError(row_error(registrations_path, lineno, "worker_id",
                                                "duplicate (worker, task) pair (" + r.worker_id +
                                                    ", " + r.task_id + ")"));
            }
            if (!ds.tasks.contains(r.task_id)) {
                dangling.push_back(registrations_path + ":" + std::to_string(lineno) +
                                   ": unknown task '" + r.task_id + "'");
            }
            ds.registrations.push_back(std::move(r));
        }
        if (!dangling.empty()) {
            std::string msg = "dangling task references:";
            for (const auto& d : dangling) msg += "\n  " + d;
            throw ValidationError(msg);
        }
    }

    if (!ratings_path.empty()) {
        auto in = open_or_throw(ratings_path);
        expect_header(in, ratings_path, "worker_id,rating");
        std::string line;
        int lineno = 1;
        while (csv::read_line(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            auto f = csv::split_record(line);
            if (f.size() != 2) {
                throw ValidationError(row_error(ratings_path, lineno, "*",
                                                "expected 2 fields, got " + std::to_string(f.size())));
            }
            int rating = 0;
            auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), rating);
            if (ec != std::errc{} || ptr != f[1].data() + f[1].size()) {
                throw ValidationError(row_error(ratings_path, lineno, "rating",
                                                "bad integer '" + f[1] + "'"));
            }
            ds.ratings[f[0]] = rating;
        }
    }

    // Workers absent from the ratings file land in the lowest tier.
    for (const auto& r : ds.registrations) {
        ds.ratings.try_emplace(r.worker_id, 0);
    }

    return ds;
}

void save_dataset(const Dataset& ds,
                  const std::string& tasks_path,
                  const std::string& registrations_path,
                  const std::string& ratings_path) {
    {
        std::ofstream out(tasks_path);
        if (!out) throw IoError("cannot write " + tasks_path);
        out << "task_id,task_type,technologies,monetary_prize,"
               "registration_start,submission_end,status\n";
        for (const auto& [id, t] : ds.tasks) {
            out << csv::join_record({id, t.task_type, join_technologies(t.technologies),
                                     format_prize(t.monetary_prize),
                                     format_date(t.registration_start),
                                     format_date(t.submission_end), to_string(t.status)})
                << "\n";
        }
    }
    {
        std::ofstream out(registrations_path);
        if (!out) throw IoError("cannot write " + registrations_path);
        out << "worker_id,task_id,registration_date,submission_date,submitted,valid_submission\n";
        for (const auto& r : ds.registrations) {
            out << csv::join_record({r.worker_id, r.task_id, format_date(r.registration_date),
                                     r.submission_date ? format_date(*r.submission_date) : "",
                                     r.submitted ? "true" : "false",
                                     r.valid_submission ? "true" : "false"})
                << "\n";
        }
    }
    {
        std::ofstream out(ratings_path);
        if (!out) throw IoError("cannot write " + ratings_path);
        out << "worker_id,rating\n";
        for (const auto& [worker, rating] : ds.ratings) {
            out << csv::join_record({worker, std::to_string(rating)}) << "\n";
        }
    }
}

IndicatorTable derive_indicators(const Dataset& ds) {
    IndicatorTable table;
    for (const auto& r : ds.registrations) {
        const TaskRecord& task = ds.tasks.at(r.task_id);
        // A multi-technology task increments every one of its technologies.
        for (const auto& key : task.tech_keys) {
            table.wtech[r.worker_id][key] += 1;
        }
        if (!task.type_key.empty()) {
            table.wtype[r.worker_id][task.type_key] += 1;
        }
        table.wtech.try_emplace(r.worker_id);
        table.wtype.try_emplace(r.worker_id);
    }
    for (const auto& [id, t] : ds.tasks) {
        for (std::size_t i = 0; i < t.technologies.size(); ++i) {
            table.tech_display.try_emplace(normalize_name(t.technologies[i]), t.technologies[i]);
        }
        if (!t.type_key.empty()) table.type_display.try_emplace(t.type_key, t.task_type);
    }
    return table;
}

std::set<std::string> active_workers(const Dataset& ds, int month) {
    std::set<std::string> active;
    for (const auto& r : ds.registrations) {
        if (month_key(r.registration_date) == month) active.insert(r.worker_id);
    }
    return active;
}

void export_edges(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "worker_id,task_id\n";
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& r : ds.registrations) edges.emplace(r.worker_id, r.task_id);
    for (const auto& [w, t] : edges) out << csv::join_record({w, t}) << "\n";
}

}  // namespace crowdrec
