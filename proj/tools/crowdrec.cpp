#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crowdrec/csv.hpp"
#include "crowdrec/errors.hpp"
#include "crowdrec/eval.hpp"
#include "crowdrec/ingest.hpp"
#include "crowdrec/oracle.hpp"
#include "crowdrec/run.hpp"
#include "crowdrec/synth.hpp"

namespace fs = std::filesystem;
using namespace crowdrec;

namespace {

struct CliOptions {
    std::string tasks_path, registrations_path, ratings_path;
    std::string out = ".";
    std::string cutoff_text;
    int horizon = 14;
    double alpha = 0.30;
    double beta = 0.30;
    int min_conditions = 3;
    int k = 3;
    std::string pvs_mode = "table";
    std::uint64_t seed = 1;
};

Date parse_cutoff(const std::string& text) {
    auto d = parse_date(text);
    if (!d) throw ConfigError("bad --cutoff '" + text + "', expected YYYY-MM-DD");
    return *d;
}

RunConfig make_run_config(const CliOptions& opt) {
    RunConfig cfg;
    cfg.cutoff = parse_cutoff(opt.cutoff_text);
    cfg.horizon_days = opt.horizon;
    cfg.alpha = opt.alpha;
    cfg.beta = opt.beta;
    cfg.min_conditions = opt.min_conditions;
    cfg.k = opt.k;
    if (opt.pvs_mode == "table") {
        cfg.pvs_mode = PvsMode::Table;
    } else if (opt.pvs_mode == "empirical") {
        cfg.pvs_mode = PvsMode::Empirical;
    } else {
        throw ConfigError("bad --pvs-mode '" + opt.pvs_mode + "', expected table|empirical");
    }
    if (cfg.alpha < 0 || cfg.alpha > 1 || cfg.beta < 0 || cfg.beta > 1) {
        throw ConfigError("--alpha/--beta must be in [0,1]");
    }
    if (cfg.min_conditions < 1 || cfg.min_conditions > 4) {
        throw ConfigError("--min-conditions must be in [1,4]");
    }
    if (cfg.horizon_days <= 0) throw ConfigError("--horizon must be positive");
    return cfg;
}

Dataset load(const CliOptions& opt) {
    if (opt.tasks_path.empty() || opt.registrations_path.empty()) {
        throw ConfigError("--tasks and --registrations are required");
    }
    return load_dataset(opt.tasks_path, opt.registrations_path, opt.ratings_path);
}

void warn_if_outside_range(const Dataset& ds, const RunConfig& cfg) {
    Date lo{INT32_MAX}, hi{INT32_MIN};
    for (const auto& r : ds.registrations) {
        lo = std::min(lo, r.registration_date);
        hi = std::max(hi, r.registration_date);
    }
    if (!ds.registrations.empty() && (cfg.cutoff < lo || hi < cfg.cutoff)) {
        std::cerr << "warning: cutoff " << format_date(cfg.cutoff)
                  << " is outside the dataset's registration range ["
                  << format_date(lo) << ", " << format_date(hi)
                  << "]; proceeding with an empty window\n";
    }
}

void write_run_artifacts(const RunOutput& run, const Dataset& ds, const std::string& out_dir) {
    fs::create_directories(out_dir);
    write_recommendations_jsonl(run, out_dir + "/recommendations.jsonl");
    write_quadrant_csv(run, out_dir + "/quadrant.csv");
    write_topk_csv(run, out_dir + "/topk.csv");
    const EvaluationReport report = evaluate_run(run, ds);
    std::ofstream ev(out_dir + "/evaluation.json");
    if (!ev) throw IoError("cannot write " + out_dir + "/evaluation.json");
    ev << report_to_json(report);
    write_per_worker_errors_csv(report, out_dir + "/per_worker_errors.csv");
}

std::map<std::string, int> load_counts_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!csv::read_line(in, line) || line != "worker_id,count") {
        throw ValidationError(path + ": expected header 'worker_id,count'");
    }
    std::map<std::string, int> counts;
    int lineno = 1;
    while (csv::read_line(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = csv::split_record(line);
        if (f.size() != 2) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": expected 2 fields");
        }
        counts[f[0]] = std::stoi(f[1]);
    }
    return counts;
}

void add_dataset_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--tasks", opt.tasks_path, "tasks.csv path");
    cmd->add_option("--registrations", opt.registrations_path, "registrations.csv path");
    cmd->add_option("--ratings", opt.ratings_path, "ratings.csv path (optional)");
}

void add_run_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--cutoff", opt.cutoff_text, "recommendation window start, YYYY-MM-DD")
        ->required();
    cmd->add_option("--horizon", opt.horizon, "window length in days");
    cmd->add_option("--alpha", opt.alpha, "proficiency threshold");
    cmd->add_option("--beta", opt.beta, "specialty threshold");
    cmd->add_option("--min-conditions", opt.min_conditions, "conditions required, of 4");
    cmd->add_option("--k", opt.k, "top-k size");
    cmd->add_option("--pvs-mode", opt.pvs_mode, "table|empirical");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crowdrec: collaborative market-aware task recommendation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI config file; flags win");

    CliOptions opt;
    std::string edges_path, actual_path, recommended_path, errors_out;
    int synth_workers = 50, synth_tasks = 200, synth_techs = 10, synth_types = 5,
        synth_months = 6;

    auto* ingest = app.add_subcommand("ingest", "load and validate a dataset");
    ingest->configurable()->fallthrough();
    add_dataset_options(ingest, opt);
    ingest->add_option("--edges", edges_path, "export worker-task edge list CSV");

    auto* profile = app.add_subcommand("profile", "dump per-worker profiles as JSON lines");
    profile->configurable()->fallthrough();
    add_dataset_options(profile, opt);
    profile->add_option("--out", opt.out, "output file (default stdout)")->default_val("");

    auto* recommend = app.add_subcommand("recommend", "run the full recommendation pipeline");
    recommend->configurable()->fallthrough();
    add_dataset_options(recommend, opt);
    add_run_options(recommend, opt);
    recommend->add_option("--out", opt.out, "output directory");

    auto* oracle = app.add_subcommand("oracle", "run the brute-force oracle pipeline");
    oracle->configurable()->fallthrough();
    add_dataset_options(oracle, opt);
    add_run_options(oracle, opt);
    oracle->add_option("--out", opt.out, "output directory");

    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic dataset");
    synth->configurable()->fallthrough();
    synth->add_option("--seed", opt.seed, "RNG seed");
    synth->add_option("--workers", synth_workers, "number of workers");
    synth->add_option("--tasks", synth_tasks, "number of tasks");
    synth->add_option("--techs", synth_techs, "number of technologies");
    synth->add_option("--types", synth_types, "number of task types");
    synth->add_option("--months", synth_months, "history length in months");
    synth->add_option("--out", opt.out, "output directory");

    auto* eval = app.add_subcommand("eval", "MRE between actual and recommended counts");
    eval->configurable()->fallthrough();
    eval->add_option("--actual", actual_path, "worker_id,count CSV of actual registrations")
        ->required();
    eval->add_option("--recommended", recommended_path,
                     "worker_id,count CSV of recommended tasks")
        ->required();
    eval->add_option("--errors-out", errors_out, "per-worker errors CSV path");

    auto* quadrant = app.add_subcommand("quadrant", "emit only the magic-quadrant CSV");
    quadrant->configurable()->fallthrough();
    add_dataset_options(quadrant, opt);
    add_run_options(quadrant, opt);
    quadrant->add_option("--out", opt.out, "output CSV path")->default_val("quadrant.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 3;
    }

    try {
        if (*ingest) {
            const Dataset ds = load(opt);
            std::cout << "tasks: " << ds.tasks.size() << "\n"
                      << "registrations: " << ds.registrations.size() << "\n"
                      << "workers: " << ds.worker_ids().size() << "\n"
                      << "ratings: " << ds.ratings.size() << "\n";
            if (!edges_path.empty()) export_edges(ds, edges_path);
        } else if (*profile) {
            const Dataset ds = load(opt);
            const auto indicators = derive_indicators(ds);
            const auto profiles = build_profiles(ds, indicators);
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!opt.out.empty()) {
                file.open(opt.out);
                if (!file) throw IoError("cannot write " + opt.out);
                out = &file;
            }
            for (const auto& [worker, p] : profiles) {
                nlohmann::ordered_json j;
                j["worker_id"] = p.worker_id;
                j["belt"] = to_string(p.belt);
                j["base_monetary_prize"] = p.base_monetary_prize;
                j["base_duration"] = p.base_duration;
                j["duration_fallback"] = p.duration_fallback;
                j["wtech"] = p.wtech;
                j["wtype"] = p.wtype;
                j["trustworthiness"] = p.trustworthiness;
                j["registration_count"] = p.registration_count;
                j["submission_count"] = p.submission_count;
                j["valid_submission_count"] = p.valid_submission_count;
                *out << j.dump() << "\n";
            }
        } else if (*recommend || *oracle) {
            const Dataset ds = load(opt);
            const RunConfig cfg = make_run_config(opt);
            warn_if_outside_range(ds, cfg);
            const RunOutput run = *recommend ? run_engine(ds, cfg) : oracle_recommend(ds, cfg);
            write_run_artifacts(run, ds, opt.out);
            std::cout << "workers considered: " << run.workers_considered.size() << "\n"
                      << "workers with recommendations: " << run.recommendations.size() << "\n"
                      << "degenerate pools: " << run.degenerate_pools << "\n"
                      << "artifacts written to " << opt.out << "\n";
        } else if (*synth) {
            SynthParams params;
            params.seed = opt.seed;
            params.n_workers = synth_workers;
            params.n_tasks = synth_tasks;
            params.n_techs = synth_techs;
            params.n_types = synth_types;
            params.months = synth_months;
            const Dataset ds = synth_generate(params);
            fs::create_directories(opt.out);
            save_dataset(ds, opt.out + "/tasks.csv", opt.out + "/registrations.csv",
                         opt.out + "/ratings.csv");
            std::cout << "generated " << ds.tasks.size() << " tasks, "
                      << ds.registrations.size() << " registrations under " << opt.out << "\n";
        } else if (*eval) {
            const auto actual = load_counts_csv(actual_path);
            const auto recommended = load_counts_csv(recommended_path);
            const EvaluationReport report = mre(actual, recommended);
            nlohmann::ordered_json j;
            j["mre"] = report.mre_defined ? nlohmann::json(report.mre) : nlohmann::json(nullptr);
            j["workers_counted"] = report.per_worker_errors.size();
            j["zero_actual_workers"] = report.zero_actual_workers;
            std::cout << j.dump(2) << "\n";
            if (!errors_out.empty()) write_per_worker_errors_csv(report, errors_out);
        } else if (*quadrant) {
            const Dataset ds = load(opt);
            const RunConfig cfg = make_run_config(opt);
            warn_if_outside_range(ds, cfg);
            const RunOutput run = run_engine(ds, cfg);
            write_quadrant_csv(run, opt.out);
            std::cout << "quadrant CSV written to " << opt.out << "\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
