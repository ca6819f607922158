#include "rbg/campaign.hpp"

#include "rbg/error.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace rbg {

std::vector<Trajectory> run_campaign(DaeModelPtr model, const DoePlan& plan,
                                     const InputSchedule& base_schedule, double t_end,
                                     const CampaignOptions& opts) {
    const Index n = plan.retained();
    if (n == 0)
        throw Error("empty_plan", "campaign plan holds no retained points");

    std::vector<Trajectory> out(static_cast<size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));

    auto run_point = [&](Index k) {
        try {
            auto overrides = plan.point_map(k);
            Trajectory tr =
                integrate(*model, base_schedule.overridden(overrides), t_end, opts.integrate);
            tr.point = overrides;
            out[static_cast<size_t>(k)] = std::move(tr);
        } catch (const Error& e) {
            nlohmann::json details = e.details();
            details["point_index"] = k;
            details["point"] = plan.point_map(k);
            errors[static_cast<size_t>(k)] =
                std::make_exception_ptr(Error(e.code(), e.what(), details));
        } catch (...) {
            errors[static_cast<size_t>(k)] = std::current_exception();
        }
    };

    unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (Index k = 0; k < n; ++k) run_point(k);
    } else {
        std::atomic<Index> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (Index k = next.fetch_add(1); k < n; k = next.fetch_add(1)) run_point(k);
            });
        for (auto& th : pool) th.join();
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace rbg
