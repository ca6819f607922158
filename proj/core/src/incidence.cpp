#include "rbg/incidence.hpp"

#include "rbg/error.hpp"

namespace rbg {

Incidence::Incidence(Index diff_count, Index alg_count) {
    alg_in_deriv_ = BoolMatrix::Constant(diff_count, alg_count, false);
    diff_in_deriv_ = BoolMatrix::Constant(diff_count, diff_count, false);
    diff_in_resid_ = BoolMatrix::Constant(alg_count, diff_count, false);
    alg_in_resid_ = BoolMatrix::Constant(alg_count, alg_count, false);
    for (Index k = 0; k < alg_count; ++k) alg_in_resid_(k, k) = true;
}

void Incidence::add_mixed(Index resid_row, Index alg, Index diff) {
    mixed_.push_back(MixedPair{resid_row, alg, diff});
}

void Incidence::validate() const {
    for (Index k = 0; k < alg_count(); ++k)
        if (!alg_in_resid_(k, k))
            throw validation_error("residual row must structurally involve the algebraic "
                                   "variable it defines",
                                   {{"row", k}});
    for (const auto& m : mixed_) {
        if (m.resid_row < 0 || m.resid_row >= alg_count() || m.alg < 0 || m.alg >= alg_count() ||
            m.diff < 0 || m.diff >= diff_count())
            throw validation_error("mixed pair index out of range",
                                   {{"row", m.resid_row}, {"alg", m.alg}, {"diff", m.diff}});
        if (!alg_in_resid_(m.resid_row, m.alg) || !diff_in_resid_(m.resid_row, m.diff))
            throw validation_error(
                "mixed pair must sit where both first-order couplings are declared",
                {{"row", m.resid_row}, {"alg", m.alg}, {"diff", m.diff}});
    }
}

} // namespace rbg
