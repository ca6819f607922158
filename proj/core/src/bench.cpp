#include "rbg/bench.hpp"

#include "rbg/error.hpp"

#include <algorithm>
#include <chrono>

namespace rbg {

nlohmann::json BenchReport::to_json() const {
    return nlohmann::json{
        {"schema_version", 1},
        {"full_seconds", full_seconds},
        {"hybrid_seconds", hybrid_seconds},
        {"speedup", speedup},
        {"full_state_count", full_state_count},
        {"primary_state_count", primary_state_count},
        {"step_count", step_count},
        {"repeats", repeats},
    };
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

BenchReport benchmark_speedup(const DaeModel& model, const HybridArtifact& artifact,
                              const InputSchedule& schedule, double t_end,
                              const IntegrateOptions& opts, int repeats) {
    if (repeats < 3) throw validation_error("repeats must be >= 3", {{"repeats", repeats}});

    Index steps = 0;
    auto run_full = [&] { steps = integrate(model, schedule, t_end, opts).step_count(); };
    auto run_hybrid = [&] {
        Index s = integrate_hybrid(artifact, schedule, t_end, opts).step_count();
        if (steps != 0 && s != steps)
            throw validation_error("full and reduced runs disagree on step count");
    };

    run_full();
    run_hybrid();  // warmup both, and fail early if either run cannot complete

    std::vector<double> full_times, hybrid_times;
    full_times.reserve(static_cast<size_t>(repeats));
    hybrid_times.reserve(static_cast<size_t>(repeats));
    for (int r = 0; r < repeats; ++r) full_times.push_back(timed(run_full));
    for (int r = 0; r < repeats; ++r) hybrid_times.push_back(timed(run_hybrid));

    BenchReport rep;
    rep.full_seconds = median(full_times);
    rep.hybrid_seconds = median(hybrid_times);
    rep.speedup = rep.full_seconds / rep.hybrid_seconds;
    rep.full_state_count = model.diff_count();
    rep.primary_state_count = static_cast<Index>(artifact.partition.primary_diff.size());
    rep.step_count = steps;
    rep.repeats = repeats;
    return rep;
}

} // namespace rbg
