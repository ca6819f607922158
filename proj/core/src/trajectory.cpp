#include "rbg/trajectory.hpp"

#include "rbg/error.hpp"

#include <algorithm>

namespace rbg {

std::pair<char, Index> Trajectory::locate(const std::string& name) const {
    auto find = [&](const std::vector<std::string>& names) -> Index {
        auto it = std::find(names.begin(), names.end(), name);
        return it == names.end() ? Index(-1) : static_cast<Index>(it - names.begin());
    };
    if (Index r = find(state_names); r >= 0) return {'s', r};
    if (Index r = find(alg_names); r >= 0) return {'a', r};
    if (Index r = find(input_names); r >= 0) return {'i', r};
    throw Error("missing_column", "trajectory has no column named '" + name + "'",
                {{"column", name}});
}

bool Trajectory::has_series(const std::string& name) const {
    auto in = [&](const std::vector<std::string>& names) {
        return std::find(names.begin(), names.end(), name) != names.end();
    };
    return in(state_names) || in(alg_names) || in(input_names);
}

Vector Trajectory::series(const std::string& name) const {
    auto [block, row] = locate(name);
    switch (block) {
    case 's': return state.row(row);
    case 'a': return alg.row(row);
    default: return inputs.row(row);
    }
}

} // namespace rbg
