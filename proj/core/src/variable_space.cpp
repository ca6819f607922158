#include "rbg/variable_space.hpp"

#include "rbg/error.hpp"

#include <unordered_set>

namespace rbg {

void VariableSpace::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& n : diff_names)
        if (!seen.insert(n).second)
            throw validation_error("duplicate variable name '" + n + "'");
    for (const auto& n : alg_names)
        if (!seen.insert(n).second)
            throw validation_error("duplicate variable name '" + n + "'");
    if (initial_diff.size() != diff_count())
        throw dimension_error("initial_diff", diff_count(), initial_diff.size());
    if (diff_scale.size() != diff_count())
        throw dimension_error("diff_scale", diff_count(), diff_scale.size());
    for (Index i = 0; i < diff_scale.size(); ++i)
        if (!(diff_scale[i] > 0.0))
            throw validation_error("scale factor for '" + diff_names[static_cast<size_t>(i)] +
                                   "' must be strictly positive");
}

VariableSpace VariableSpace::make(std::vector<std::string> diff_names,
                                  std::vector<std::string> alg_names,
                                  Vector initial_diff,
                                  Vector diff_scale) {
    VariableSpace s;
    s.diff_names = std::move(diff_names);
    s.alg_names = std::move(alg_names);
    s.initial_diff = std::move(initial_diff);
    s.diff_scale = diff_scale.size() == 0 ? Vector::Ones(s.diff_count()) : std::move(diff_scale);
    s.validate();
    return s;
}

} // namespace rbg
