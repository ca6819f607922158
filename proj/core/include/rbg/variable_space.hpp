#pragma once

#include "rbg/types.hpp"

#include <string>
#include <vector>

namespace rbg {

/// Names, initial values and per-variable scale factors of a DAE state.
///
/// Differential variables are stored in absolute physical units; offset and
/// scaled coordinates are formed only at snapshot assembly and layer
/// evaluation. Scale factors homogenize mixed-physics states (e.g. specific
/// enthalpies divided by 1000, humidities multiplied by 1000) and default
/// to one.
struct VariableSpace {
    std::vector<std::string> diff_names;
    std::vector<std::string> alg_names;
    Vector initial_diff;   // length diff_count()
    Vector diff_scale;     // length diff_count(), strictly positive

    Index diff_count() const { return static_cast<Index>(diff_names.size()); }
    Index alg_count() const { return static_cast<Index>(alg_names.size()); }

    /// Throws rbg::Error on duplicate names, size mismatch or non-positive scales.
    void validate() const;

    static VariableSpace make(std::vector<std::string> diff_names,
                              std::vector<std::string> alg_names,
                              Vector initial_diff,
                              Vector diff_scale = Vector());
};

} // namespace rbg
