#include "rbg/metrics.hpp"

#include "rbg/error.hpp"

#include <cmath>

namespace rbg {

nlohmann::json ErrorReport::to_json() const {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : variables)
        vars.push_back({{"name", v.name}, {"mae", v.mae}, {"max_ae", v.max_ae}});
    return nlohmann::json{
        {"schema_version", 1},
        {"mae", mae},
        {"max_ae", max_ae},
        {"max_variable", max_variable},
        {"max_time_index", max_time_index},
        {"max_point_index", max_point_index},
        {"step_count", step_count},
        {"point_count", point_count},
        {"variables", vars},
    };
}

ErrorReport compare_trajectories(const std::vector<Trajectory>& reference,
                                 const std::vector<Trajectory>& approx,
                                 const std::vector<std::string>& variables) {
    if (reference.empty() || reference.size() != approx.size())
        throw validation_error("trajectory sets must be non-empty and pair up one-to-one",
                               {{"reference", reference.size()}, {"approx", approx.size()}});
    if (variables.empty()) throw validation_error("no variables selected for comparison");

    const Index m = reference.front().step_count();
    for (size_t p = 0; p < reference.size(); ++p) {
        if (reference[p].time.size() != approx[p].time.size() ||
            (reference[p].time - approx[p].time).lpNorm<Eigen::Infinity>() > 1e-12)
            throw validation_error("time grids of the two sets differ", {{"point", p}});
        if (reference[p].step_count() != m)
            throw validation_error("trajectories must share one grid across points",
                                   {{"point", p}});
    }

    ErrorReport rep;
    rep.step_count = m;
    rep.point_count = static_cast<Index>(reference.size());
    rep.variables.reserve(variables.size());

    double total = 0.0;
    for (const auto& name : variables) {
        ErrorReport::PerVariable pv;
        pv.name = name;
        double sum = 0.0;
        for (size_t p = 0; p < reference.size(); ++p) {
            Vector r = reference[p].series(name);
            Vector a = approx[p].series(name);
            for (Index k = 1; k <= m; ++k) {
                const double err = std::abs(r[k] - a[k]);
                sum += err;
                if (err > pv.max_ae) pv.max_ae = err;
                if (err > rep.max_ae) {
                    rep.max_ae = err;
                    rep.max_variable = name;
                    rep.max_time_index = k;
                    rep.max_point_index = static_cast<Index>(p);
                }
            }
        }
        pv.mae = sum / (static_cast<double>(m) * static_cast<double>(reference.size()));
        total += sum;
        rep.variables.push_back(std::move(pv));
    }
    rep.mae = total / (static_cast<double>(variables.size()) * static_cast<double>(m) *
                       static_cast<double>(reference.size()));
    return rep;
}

double mae(const std::vector<Trajectory>& reference, const std::vector<Trajectory>& approx,
           const std::vector<std::string>& variables) {
    return compare_trajectories(reference, approx, variables).mae;
}

double max_ae(const std::vector<Trajectory>& reference, const std::vector<Trajectory>& approx,
              const std::vector<std::string>& variables) {
    return compare_trajectories(reference, approx, variables).max_ae;
}

} // namespace rbg
