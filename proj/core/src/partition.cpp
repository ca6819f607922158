#include "rbg/partition.hpp"

#include "rbg/error.hpp"

#include <algorithm>

namespace rbg {

namespace {

void check_cover(const std::vector<const IndexList*>& sets, Index count, const char* what) {
    std::vector<int> seen(static_cast<size_t>(count), 0);
    for (const IndexList* s : sets) {
        if (!std::is_sorted(s->begin(), s->end()))
            throw validation_error(std::string(what) + " partition sets must be sorted");
        for (Index i : *s) {
            if (i < 0 || i >= count)
                throw validation_error(std::string(what) + " partition index out of range",
                                       {{"index", i}, {"count", count}});
            if (seen[static_cast<size_t>(i)]++)
                throw validation_error(std::string(what) + " partition sets overlap",
                                       {{"index", i}});
        }
    }
    for (Index i = 0; i < count; ++i)
        if (!seen[static_cast<size_t>(i)])
            throw validation_error(std::string(what) + " partition sets do not cover all variables",
                                   {{"index", i}});
}

} // namespace

void Partition::validate(Index diff_count, Index alg_count) const {
    check_cover({&primary_diff, &secondary_diff, &tertiary_diff}, diff_count, "differential");
    check_cover({&primary_alg, &tertiary_alg}, alg_count, "algebraic");
}

} // namespace rbg
