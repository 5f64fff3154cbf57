#pragma once

#include <cstdint>

#include "crowdrec/dataset.hpp"

namespace crowdrec {

struct SynthParams {
    std::uint64_t seed = 1;
    int n_workers = 50;
    int n_tasks = 200;
    int n_techs = 10;
    int n_types = 5;
    int months = 6;  // history length starting 2014-01-01
};

// Reproducible synthetic dataset: ratings drawn to match the platform's
// belt shares, valid-submission rates near each belt's p(VS), prizes and
// durations over realistic ranges. Same seed, same dataset.
// Throws ConfigError on non-positive sizes.
Dataset synth_generate(const SynthParams& params);

// First day after the generated history; a natural recommendation cutoff
// sits a couple of weeks before this.
Date synth_history_start();
Date synth_history_end(const SynthParams& params);

}  // namespace crowdrec
