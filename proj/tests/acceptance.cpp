// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crowdrec/eval.hpp"
#include "crowdrec/oracle.hpp"
#include "crowdrec/profile.hpp"
#include "crowdrec/run.hpp"
#include "crowdrec/synth.hpp"

namespace fs = std::filesystem;
using namespace crowdrec;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SynthParams desk_scale_params(int seed) {
    SynthParams params;
    params.seed = std::uint64_t(seed);
    params.n_workers = 20 + seed % 31;        // <= 50
    params.n_tasks = 60 + (seed * 7) % 141;   // <= 200
    params.n_techs = 6 + seed % 5;
    params.n_types = 3 + seed % 4;
    params.months = 6;
    return params;
}

RunConfig desk_scale_config(const SynthParams& params) {
    RunConfig cfg;
    cfg.cutoff = synth_history_end(params) + (-20);
    return cfg;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_worked_proficiency() {
    const auto t0 = Clock::now();
    WorkerProfile p;
    p.wtech = {{"java", 100}, {"sql", 67}, {"apex", 67}, {"android", 60}, {".net", 32}};
    const double pl = proficiency(p, "java");
    const bool value_ok = std::abs(pl - 0.307) <= 0.0005 && pl == 100.0 / 326.0;
    const double dt = elapsed_s(t0);
    report("worked proficiency value (100/326 ~ 0.307, <1s)", value_ok && dt < 1.0,
           "pl=" + std::to_string(pl) + " t=" + std::to_string(dt));
}

void criterion_worked_trustworthiness() {
    Dataset ds;
    for (int i = 0; i < 15; ++i) {
        TaskRecord t;
        t.task_id = "T" + std::to_string(100 + i);
        t.task_type = "Code";
        t.technologies = {"Java"};
        t.monetary_prize = 100;
        t.registration_start = make_date(2014, 1, 1);
        t.submission_end = make_date(2014, 3, 1);
        t.derive_keys();
        ds.tasks.emplace(t.task_id, t);
        RegistrationRecord r;
        r.worker_id = "A";
        r.task_id = t.task_id;
        r.registration_date = make_date(2014, 1, 1) + i;
        const bool valid = i != 4;  // 14 of 15 valid
        r.submitted = valid;
        r.valid_submission = valid;
        if (valid) r.submission_date = r.registration_date + 1;
        ds.registrations.push_back(r);
    }
    ds.ratings["A"] = 0;
    const auto profiles = build_profiles(ds, derive_indicators(ds));
    const double tl = profiles.at("A").trustworthiness;
    report("worked trustworthiness value (14/15 ~ 0.933)", std::abs(tl - 0.933) <= 0.001,
           "tl=" + std::to_string(tl));
}

void criterion_belt_mapping() {
    bool ok = belt_of(899) == Belt::Gray && belt_of(1500) == Belt::Yellow &&
              belt_of(2500) == Belt::Red && belt_of(900) == Belt::Green &&
              belt_of(1200) == Belt::Blue && belt_of(2200) == Belt::Red &&
              belt_of(1199) == Belt::Green && belt_of(1499) == Belt::Blue &&
              belt_of(2199) == Belt::Yellow && belt_of(0) == Belt::Gray;
    auto round2 = [](double v) { return std::round(v * 100.0) / 100.0; };
    ok = ok && round2(default_p_vs(Belt::Gray)) == 0.25 &&
         round2(default_p_vs(Belt::Green)) == 0.45 &&
         round2(default_p_vs(Belt::Blue)) == 0.39 &&
         round2(default_p_vs(Belt::Yellow)) == 0.60 &&
         round2(default_p_vs(Belt::Red)) == 0.60;
    report("belt mapping and default p(VS) table", ok);
}

bool runs_equal(const RunOutput& a, const RunOutput& b, std::string& why) {
    if (a.workers_considered != b.workers_considered) {
        why = "active worker sets differ";
        return false;
    }
    if (a.degenerate_pools != b.degenerate_pools) {
        why = "degenerate pool counts differ";
        return false;
    }
    if (a.recommendations.size() != b.recommendations.size()) {
        why = "recommended worker sets differ";
        return false;
    }
    for (const auto& [worker, recs] : a.recommendations) {
        auto it = b.recommendations.find(worker);
        if (it == b.recommendations.end() || it->second.size() != recs.size()) {
            why = "recommendation set differs for " + worker;
            return false;
        }
        for (std::size_t i = 0; i < recs.size(); ++i) {
            const auto& x = recs[i];
            const auto& y = it->second[i];
            if (x.task_id != y.task_id || x.label != y.label) {
                why = "task/label mismatch for " + worker;
                return false;
            }
            if (std::abs(x.success_probability.value_or(0) -
                         y.success_probability.value_or(0)) > 1e-9) {
                why = "p_success mismatch for " + worker + "/" + x.task_id;
                return false;
            }
        }
    }
    for (const auto& [worker, top] : a.top) {
        auto it = b.top.find(worker);
        if (it == b.top.end() || it->second.size() != top.size()) {
            why = "top-k size mismatch for " + worker;
            return false;
        }
        for (std::size_t i = 0; i < top.size(); ++i) {
            if (top[i].task_id != it->second[i].task_id) {
                why = "top-k ordering mismatch for " + worker;
                return false;
            }
        }
    }
    return true;
}

void criterion_oracle_equivalence() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 100 && ok; ++seed) {
        const SynthParams params = desk_scale_params(seed);
        const Dataset ds = synth_generate(params);
        const RunConfig cfg = desk_scale_config(params);
        const RunOutput engine = run_engine(ds, cfg);
        const RunOutput oracle = oracle_recommend(ds, cfg);
        std::string why;
        if (!runs_equal(engine, oracle, why)) {
            ok = false;
            detail = "seed " + std::to_string(seed) + ": " + why;
        }
    }
    const double dt = elapsed_s(t0);
    if (ok && dt >= 60.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s";
    }
    report("oracle equivalence on 100 seeded datasets (<60s)", ok, detail);
}

void criterion_normalization() {
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 10 && ok; ++seed) {
        const SynthParams params = desk_scale_params(seed);
        const Dataset ds = synth_generate(params);
        const RunOutput run = run_engine(ds, desk_scale_config(params));

        std::map<std::string, double> pool_sums;
        for (const auto& [worker, recs] : run.recommendations) {
            for (const auto& r : recs) {
                pool_sums[r.task_id] += r.success_probability.value_or(0);
            }
        }
        for (const auto& [task, sum] : pool_sums) {
            if (sum != 0.0 && std::abs(sum - 1.0) > 1e-9) {
                ok = false;
                detail = "pool " + task + " sums to " + std::to_string(sum);
            }
        }

        const auto profiles = build_profiles(ds, derive_indicators(ds));
        for (const auto& [worker, p] : profiles) {
            if (!p.wtech.empty()) {
                double sum = 0.0;
                for (const auto& [tech, n] : p.wtech) sum += proficiency(p, tech);
                if (std::abs(sum - 1.0) > 1e-9) {
                    ok = false;
                    detail = "proficiency vector of " + worker;
                }
            }
            if (!p.wtype.empty()) {
                double sum = 0.0;
                for (const auto& [type, n] : p.wtype) sum += specialty(p, type);
                if (std::abs(sum - 1.0) > 1e-9) {
                    ok = false;
                    detail = "specialty vector of " + worker;
                }
            }
        }
    }
    report("normalization suite (pool p_success, PL and SL vectors)", ok, detail);
}

void criterion_label_partition() {
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 10 && ok; ++seed) {
        const SynthParams params = desk_scale_params(seed);
        const Dataset ds = synth_generate(params);
        const RunOutput run = run_engine(ds, desk_scale_config(params));
        for (const auto& [worker, recs] : run.recommendations) {
            int by_label[4] = {0, 0, 0, 0};
            const Recommendation* best = nullptr;
            bool strict = false;
            for (const auto& r : recs) {
                by_label[int(r.label)] += 1;
                // Recompute the quadrant from the normalized scores.
                Label expected;
                if (r.norm_proficiency > 0.5 && r.norm_specialty > 0.5) {
                    expected = Label::VeryStrong;
                } else if (r.norm_proficiency > 0.5) {
                    expected = Label::Strong;
                } else if (r.norm_specialty > 0.5) {
                    expected = Label::Recommend;
                } else {
                    expected = Label::Low;
                }
                if (r.label != expected) {
                    ok = false;
                    detail = "label inconsistent for " + worker + "/" + r.task_id;
                }
            }
            if (by_label[0] + by_label[1] + by_label[2] + by_label[3] != int(recs.size())) {
                ok = false;
                detail = "labels do not partition for " + worker;
            }
            // A strict maximum on both APL and SL must be VeryStrong.
            for (const auto& r : recs) {
                bool max_both = true;
                for (const auto& other : recs) {
                    if (&other == &r) continue;
                    if (other.apl >= r.apl || other.sl >= r.sl) {
                        max_both = false;
                        break;
                    }
                }
                if (max_both && recs.size() > 1) {
                    best = &r;
                    strict = true;
                }
            }
            if (strict && best->label != Label::VeryStrong) {
                ok = false;
                detail = "strict-max rec not VeryStrong for " + worker;
            }
        }
    }
    report("label partition and strict-max VeryStrong", ok, detail);
}

void criterion_mre() {
    bool ok = true;
    std::string detail;
    const auto self = mre({{"A", 3}, {"B", 7}}, {{"A", 3}, {"B", 7}});
    if (!(self.mre_defined && self.mre == 0.0)) {
        ok = false;
        detail = "self-consistency";
    }
    const auto under = mre({{"A", 4}}, {{"A", 3}});
    if (under.mre != 0.25) {
        ok = false;
        detail = "4->3 expected 0.25, got " + std::to_string(under.mre);
    }
    const auto over = mre({{"A", 2}}, {{"A", 3}});
    if (over.mre != -0.5) {
        ok = false;
        detail = "2->3 expected -0.5, got " + std::to_string(over.mre);
    }

    // A real run scored against its own recommendation counts.
    const SynthParams params = desk_scale_params(5);
    const Dataset ds = synth_generate(params);
    const RunOutput run = run_engine(ds, desk_scale_config(params));
    std::map<std::string, int> counts;
    for (const auto& [worker, recs] : run.recommendations) counts[worker] = int(recs.size());
    if (!counts.empty()) {
        const auto report_self = mre(counts, counts);
        if (report_self.mre != 0.0) {
            ok = false;
            detail = "run self-MRE nonzero";
        }
    }
    report("MRE self-consistency and hand fixtures", ok, detail);
}

void criterion_determinism() {
    const char* cli = CROWDREC_CLI_PATH;
    const fs::path base = fs::temp_directory_path() / "crowdrec_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    const fs::path data = base / "data";
    const fs::path run1 = base / "run1";
    const fs::path run2 = base / "run2";

    auto run_cmd = [&](const std::string& cmd) {
        return std::system((cmd + " > /dev/null 2>&1").c_str()) == 0;
    };
    const std::string quoted_cli = std::string("\"") + cli + "\"";
    bool ok = run_cmd(quoted_cli + " synth --seed 42 --workers 40 --tasks 120 --out " +
                      data.string());
    const std::string common =
        " recommend --tasks " + (data / "tasks.csv").string() + " --registrations " +
        (data / "registrations.csv").string() + " --ratings " + (data / "ratings.csv").string() +
        " --cutoff 2014-05-25 --horizon 14 --k 3 --out ";
    ok = ok && run_cmd(quoted_cli + common + run1.string());
    ok = ok && run_cmd(quoted_cli + common + run2.string());

    std::string detail;
    if (ok) {
        for (const char* name : {"recommendations.jsonl", "quadrant.csv", "topk.csv",
                                 "evaluation.json", "per_worker_errors.csv"}) {
            if (read_file(run1 / name) != read_file(run2 / name)) {
                ok = false;
                detail = std::string(name) + " differs between runs";
            }
            if (read_file(run1 / name).empty() && std::string(name) == "evaluation.json") {
                ok = false;
                detail = "evaluation.json empty";
            }
        }
    } else {
        detail = "CLI invocation failed";
    }
    fs::remove_all(base);
    report("determinism: repeated cmd_recommend is byte-identical", ok, detail);
}

void criterion_synth_calibration() {
    SynthParams params;
    params.seed = 9;
    params.n_workers = 1000;
    params.n_tasks = 400;
    const Dataset ds = synth_generate(params);

    int gray = 0;
    for (const auto& [worker, rating] : ds.ratings) {
        if (belt_of(rating) == Belt::Gray) ++gray;
    }
    const double gray_share = double(gray) / double(params.n_workers);

    long long gray_regs = 0, gray_valid = 0;
    for (const auto& r : ds.registrations) {
        if (belt_of(ds.ratings.at(r.worker_id)) != Belt::Gray) continue;
        gray_regs += 1;
        gray_valid += r.valid_submission ? 1 : 0;
    }
    const double gray_rate = gray_regs ? double(gray_valid) / double(gray_regs) : 0.0;

    const bool ok = std::abs(gray_share - 0.9002) <= 0.03 && std::abs(gray_rate - 0.25) <= 0.05;
    report("synthetic generator calibration (Gray share, Gray p(VS))", ok,
           "share=" + std::to_string(gray_share) + " rate=" + std::to_string(gray_rate));
}

}  // namespace

int main() {
    criterion_worked_proficiency();
    criterion_worked_trustworthiness();
    criterion_belt_mapping();
    criterion_oracle_equivalence();
    criterion_normalization();
    criterion_label_partition();
    criterion_mre();
    criterion_determinism();
    criterion_synth_calibration();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
