#pragma once

#include "rbg/hybrid.hpp"

#include <nlohmann/json.hpp>

namespace rbg {

/// Wall-clock comparison of the full and reduced models on one schedule.
struct BenchReport {
    double full_seconds = 0.0;    // median over repeats
    double hybrid_seconds = 0.0;  // median over repeats
    double speedup = 0.0;
    Index full_state_count = 0;
    Index primary_state_count = 0;
    Index step_count = 0;  // identical for both runs by construction
    int repeats = 0;

    nlohmann::json to_json() const;
};

/// Runs both models `repeats` times each (after one untimed warmup) on the
/// identical schedule and reports median timings. Timed runs execute
/// sequentially; parallelizing them would corrupt the measurement.
BenchReport benchmark_speedup(const DaeModel& model, const HybridArtifact& artifact,
                              const InputSchedule& schedule, double t_end,
                              const IntegrateOptions& opts, int repeats);

} // namespace rbg
