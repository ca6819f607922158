#include "rbg/classify.hpp"

#include "rbg/error.hpp"

#include <algorithm>

namespace rbg {

Partition classify_variables(const DaeModel& model, const IndexList& primary_diff) {
    const Index nd = model.diff_count();
    const Index na = model.alg_count();
    const Incidence& inc = model.incidence();

    std::vector<bool> is_primary_diff(static_cast<size_t>(nd), false);
    for (Index i : primary_diff) {
        if (i < 0 || i >= nd)
            throw validation_error("primary differential index out of range",
                                   {{"index", i}, {"count", nd}});
        is_primary_diff[static_cast<size_t>(i)] = true;
    }

    // primary algebraic: read by a retained derivative row, or mixed-coupled
    // to a retained differential variable
    std::vector<bool> is_primary_alg(static_cast<size_t>(na), false);
    for (Index j = 0; j < nd; ++j) {
        if (!is_primary_diff[static_cast<size_t>(j)]) continue;
        for (Index a = 0; a < na; ++a)
            if (inc.alg_in_deriv(j, a)) is_primary_alg[static_cast<size_t>(a)] = true;
    }
    for (const MixedPair& m : inc.mixed_pairs())
        if (is_primary_diff[static_cast<size_t>(m.diff)])
            is_primary_alg[static_cast<size_t>(m.alg)] = true;

    Partition p;
    for (Index i = 0; i < nd; ++i)
        if (is_primary_diff[static_cast<size_t>(i)]) p.primary_diff.push_back(i);
    for (Index a = 0; a < na; ++a)
        if (is_primary_alg[static_cast<size_t>(a)]) p.primary_alg.push_back(a);

    // differential variables read by no retained row are tertiary; the rest
    // are secondary
    for (Index i = 0; i < nd; ++i) {
        if (is_primary_diff[static_cast<size_t>(i)]) continue;
        bool read = false;
        for (Index j : p.primary_diff)
            if (inc.diff_in_deriv(j, i)) { read = true; break; }
        if (!read)
            for (Index k : p.primary_alg)
                if (inc.diff_in_resid(k, i)) { read = true; break; }
        (read ? p.secondary_diff : p.tertiary_diff).push_back(i);
    }

    // algebraic variables read by a retained row must already be primary; any
    // other coupled algebraic variable means the model needs a secondary
    // algebraic set, which this method excludes by assumption
    for (Index a = 0; a < na; ++a) {
        if (is_primary_alg[static_cast<size_t>(a)]) continue;
        bool read = false;
        for (Index j : p.primary_diff)
            if (inc.alg_in_deriv(j, a)) { read = true; break; }
        if (!read)
            for (Index k : p.primary_alg)
                if (k != a && inc.alg_in_resid(k, a)) { read = true; break; }
        if (read)
            throw Error("secondary_algebraic",
                        "algebraic variable '" +
                            model.space().alg_names[static_cast<size_t>(a)] +
                            "' is read by a retained algebraic equation but is not "
                            "directly coupled to a primary differential variable; the "
                            "reduction method requires that no such variable exists",
                        {{"alg_index", a}});
        p.tertiary_alg.push_back(a);
    }

    p.validate(nd, na);
    return p;
}

} // namespace rbg
