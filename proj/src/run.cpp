#include "crowdrec/run.hpp"

#include <fstream>

#include <json.hpp>

#include "crowdrec/csv.hpp"
#include "crowdrec/errors.hpp"

namespace crowdrec {

RunOutput run_engine(const Dataset& ds, const RunConfig& cfg) {
    const IndicatorTable indicators = derive_indicators(ds);
    const auto profiles = build_profiles(ds, indicators);
    const CollaborationIndex index = build_index(ds);

    RecommenderConfig rec_cfg;
    rec_cfg.alpha = cfg.alpha;
    rec_cfg.beta = cfg.beta;
    rec_cfg.min_conditions = cfg.min_conditions;
    rec_cfg.horizon_days = cfg.horizon_days;

    RunOutput out;
    out.cutoff = cfg.cutoff;
    out.horizon_days = cfg.horizon_days;
    out.workers_considered = active_workers(ds, month_key(cfg.cutoff));

    for (const auto& worker : out.workers_considered) {
        auto recs = recommend(worker, ds, index, profiles, rec_cfg, cfg.cutoff);
        if (recs.empty()) continue;
        label_recommendations(recs, rec_cfg.label_threshold);
        out.recommendations.emplace(worker, std::move(recs));
    }

    out.degenerate_pools = score_success(out.recommendations, ds, profiles, cfg.pvs_mode);

    for (const auto& [worker, recs] : out.recommendations) {
        out.top.emplace(worker, top_k(recs, cfg.k));
    }
    return out;
}

namespace {

nlohmann::ordered_json rec_to_json(const Recommendation& r) {
    nlohmann::ordered_json j;
    j["worker_id"] = r.worker_id;
    j["task_id"] = r.task_id;
    j["conditions"] = {{"prize", r.conditions.prize},
                       {"duration", r.conditions.duration},
                       {"proficiency", r.conditions.proficiency},
                       {"specialty", r.conditions.specialty}};
    j["apl"] = r.apl;
    j["sl"] = r.sl;
    j["norm_proficiency"] = r.norm_proficiency;
    j["norm_specialty"] = r.norm_specialty;
    j["label"] = to_string(r.label);
    if (r.empty_tech_flag) j["empty_tech_flag"] = true;
    if (r.norm_flagged) j["norm_flagged"] = true;
    if (r.scored) {
        j["spr"] = r.spr;
        j["aper"] = r.aper;
        j["tl"] = r.tl;
        j["p_vs"] = r.p_vs;
        j["p_success"] = r.success_probability.value_or(0.0);
    }
    return j;
}

std::string format_ratio(double v) {
    return nlohmann::json(v).dump();
}

}  // namespace

void write_recommendations_jsonl(const RunOutput& run, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    for (const auto& [worker, recs] : run.recommendations) {
        for (const auto& r : recs) out << rec_to_json(r).dump() << "\n";
    }
}

void write_quadrant_csv(const RunOutput& run, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "worker_id,task_id,norm_proficiency,norm_specialty,label\n";
    for (const auto& [worker, recs] : run.recommendations) {
        for (const auto& r : recs) {
            out << csv::join_record({r.worker_id, r.task_id, format_ratio(r.norm_proficiency),
                                     format_ratio(r.norm_specialty), to_string(r.label)})
                << "\n";
        }
    }
}

void write_topk_csv(const RunOutput& run, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "worker_id,rank,task_id,label,p_success\n";
    for (const auto& [worker, recs] : run.top) {
        int rank = 0;
        for (const auto& r : recs) {
            out << csv::join_record({r.worker_id, std::to_string(++rank), r.task_id,
                                     to_string(r.label),
                                     format_ratio(r.success_probability.value_or(0.0))})
                << "\n";
        }
    }
}

}  // namespace crowdrec
