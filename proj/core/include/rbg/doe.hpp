#pragma once

#include "rbg/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rbg {

/// Bounded box of input channels to sample over.
struct ParamSpace {
    struct Dimension {
        std::string name;
        double lower = 0.0;
        double upper = 1.0;
    };
    std::vector<Dimension> dims;

    void validate() const;
    Index dim_count() const { return static_cast<Index>(dims.size()); }
};

/// A list of sampled parameter points plus the bookkeeping needed to
/// reproduce and audit the sampling.
struct DoePlan {
    std::vector<std::string> names;
    std::vector<Vector> points;          // each of length names.size()
    std::uint64_t seed = 0;
    Index requested = 0;                 // points drawn before filtering
    Index retained() const { return static_cast<Index>(points.size()); }

    std::map<std::string, double> point_map(Index k) const;
};

/// Latin hypercube sample: each dimension is stratified into n equal bins
/// with exactly one point per bin. Reproducible for a fixed seed across
/// platforms (no distribution objects involved).
DoePlan sample_doe(const ParamSpace& space, Index n, std::uint64_t seed);

/// Keeps exactly the points whose inlet air absolute humidity does not
/// exceed the ambient absolute humidity (air conditioning dries the inlet).
/// Expects channels T_ext, r_ext, T_inlet, r_inlet with relative humidities
/// in percent. `pressure_pa` is the shared ambient pressure.
DoePlan filter_constraints(const DoePlan& plan, double pressure_pa);

} // namespace rbg
