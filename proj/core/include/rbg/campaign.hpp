#pragma once

#include "rbg/doe.hpp"
#include "rbg/integrate.hpp"

namespace rbg {

struct CampaignOptions {
    IntegrateOptions integrate;
    int threads = 0;  // 0 = hardware concurrency, 1 = sequential
};

/// One trajectory per retained plan point, in plan order. Points are
/// independent and run concurrently; results are merged by plan index, so
/// concurrent and sequential execution produce identical output.
std::vector<Trajectory> run_campaign(DaeModelPtr model, const DoePlan& plan,
                                     const InputSchedule& base_schedule, double t_end,
                                     const CampaignOptions& opts = {});

} // namespace rbg
