#pragma once

#include "crowdrec/run.hpp"

namespace crowdrec {

inline constexpr int kOracleMaxWorkers = 50;
inline constexpr int kOracleMaxTasks = 200;

// Independent straight-line reimplementation of the whole pipeline for
// cross-checking the engine. Recomputes indicators, profiles, collaborators,
// conditions, labels, pools and probabilities from the raw dataset without
// calling any engine module. Throws ValidationError beyond the scale guard
// (50 workers / 200 tasks).
RunOutput oracle_recommend(const Dataset& ds, const RunConfig& cfg);

}  // namespace crowdrec
