#include "rbg/doe.hpp"

#include "rbg/error.hpp"
#include "rbg/humid_air.hpp"

#include <algorithm>
#include <random>

namespace rbg {

void ParamSpace::validate() const {
    for (const auto& d : dims)
        if (!(d.lower < d.upper))
            throw validation_error("parameter bounds must satisfy lower < upper",
                                   {{"name", d.name}, {"lower", d.lower}, {"upper", d.upper}});
}

std::map<std::string, double> DoePlan::point_map(Index k) const {
    std::map<std::string, double> m;
    const Vector& p = points.at(static_cast<size_t>(k));
    for (size_t i = 0; i < names.size(); ++i) m[names[i]] = p[static_cast<Index>(i)];
    return m;
}

namespace {

// uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

DoePlan sample_doe(const ParamSpace& space, Index n, std::uint64_t seed) {
    space.validate();
    if (n < 1) throw validation_error("sample count must be >= 1", {{"n", n}});

    std::mt19937_64 rng(seed);
    const Index d = space.dim_count();

    DoePlan plan;
    plan.seed = seed;
    plan.requested = n;
    for (const auto& dim : space.dims) plan.names.push_back(dim.name);
    plan.points.assign(static_cast<size_t>(n), Vector(d));

    for (Index j = 0; j < d; ++j) {
        std::vector<Index> bins(static_cast<size_t>(n));
        for (Index k = 0; k < n; ++k) bins[static_cast<size_t>(k)] = k;
        for (Index k = n - 1; k > 0; --k) {
            Index r = static_cast<Index>(rng() % static_cast<std::uint64_t>(k + 1));
            std::swap(bins[static_cast<size_t>(k)], bins[static_cast<size_t>(r)]);
        }
        const auto& dim = space.dims[static_cast<size_t>(j)];
        const double width = (dim.upper - dim.lower) / static_cast<double>(n);
        for (Index k = 0; k < n; ++k) {
            double u = unit_double(rng);
            plan.points[static_cast<size_t>(k)][j] =
                dim.lower + (static_cast<double>(bins[static_cast<size_t>(k)]) + u) * width;
        }
    }
    return plan;
}

DoePlan filter_constraints(const DoePlan& plan, double pressure_pa) {
    auto index_of = [&](const std::string& name) {
        auto it = std::find(plan.names.begin(), plan.names.end(), name);
        if (it == plan.names.end())
            throw Error("missing_channel",
                        "DOE plan lacks channel '" + name + "' required by the humidity "
                        "constraint",
                        {{"channel", name}});
        return static_cast<Index>(it - plan.names.begin());
    };
    const Index t_ext = index_of("T_ext");
    const Index r_ext = index_of("r_ext");
    const Index t_in = index_of("T_inlet");
    const Index r_in = index_of("r_inlet");

    DoePlan out;
    out.names = plan.names;
    out.seed = plan.seed;
    out.requested = plan.requested;
    for (const Vector& p : plan.points) {
        const double x_ext = absolute_humidity(p[t_ext], p[r_ext] / 100.0, pressure_pa);
        const double x_in = absolute_humidity(p[t_in], p[r_in] / 100.0, pressure_pa);
        if (x_in <= x_ext) out.points.push_back(p);
    }
    return out;
}

} // namespace rbg
