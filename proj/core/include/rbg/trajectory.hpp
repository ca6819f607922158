#pragma once

#include "rbg/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace rbg {

/// Time-sampled states, algebraic values and inputs for one parameter point.
/// Column 0 holds the initial condition; the grid is uniform with step dt().
struct Trajectory {
    Vector time;                           // m+1 samples
    Matrix state;                          // state_names.size() x (m+1)
    Matrix alg;                            // alg_names.size() x (m+1)
    Matrix inputs;                         // input_names.size() x (m+1)
    std::vector<std::string> state_names;
    std::vector<std::string> alg_names;
    std::vector<std::string> input_names;
    std::map<std::string, double> point;   // DOE coordinates, if any

    Index sample_count() const { return time.size(); }
    Index step_count() const { return time.size() > 0 ? time.size() - 1 : 0; }
    double dt() const { return time.size() > 1 ? time[1] - time[0] : 0.0; }

    /// Row index of a named column across state/alg/input blocks.
    /// Returns block ('s', 'a', 'i') and row, or throws.
    std::pair<char, Index> locate(const std::string& name) const;
    bool has_series(const std::string& name) const;
    /// Copy of one named row (state, algebraic or input).
    Vector series(const std::string& name) const;
};

} // namespace rbg
