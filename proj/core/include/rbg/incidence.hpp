#pragma once

#include "rbg/types.hpp"

#include <tuple>
#include <vector>

namespace rbg {

/// Structurally nonzero second derivative of residual row k with respect to
/// algebraic variable i and differential variable j. Used by classification
/// to pull algebraic variables into the retained set when the coupling is
/// multiplicative rather than additive.
struct MixedPair {
    Index resid_row;  // k
    Index alg;        // i
    Index diff;       // j
    friend bool operator==(const MixedPair&, const MixedPair&) = default;
};

/// Boolean structural coupling of a semi-explicit DAE, declared by model
/// builders and checkable by finite-difference probes.
///
/// Conventions: derivative rows are indexed by differential variable,
/// residual rows by the algebraic variable they causally define. The
/// residual diagonal is therefore always structurally true.
class Incidence {
public:
    using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

    Incidence() = default;
    Incidence(Index diff_count, Index alg_count);

    Index diff_count() const { return alg_in_deriv_.rows(); }
    Index alg_count() const { return alg_in_deriv_.cols(); }

    // declaration (builder side)
    void deriv_reads_alg(Index row, Index alg) { alg_in_deriv_(row, alg) = true; }
    void deriv_reads_diff(Index row, Index diff) { diff_in_deriv_(row, diff) = true; }
    void resid_reads_diff(Index row, Index diff) { diff_in_resid_(row, diff) = true; }
    void resid_reads_alg(Index row, Index alg) { alg_in_resid_(row, alg) = true; }
    void add_mixed(Index resid_row, Index alg, Index diff);

    // queries (classification side)
    bool alg_in_deriv(Index row, Index alg) const { return alg_in_deriv_(row, alg); }
    bool diff_in_deriv(Index row, Index diff) const { return diff_in_deriv_(row, diff); }
    bool diff_in_resid(Index row, Index diff) const { return diff_in_resid_(row, diff); }
    bool alg_in_resid(Index row, Index alg) const { return alg_in_resid_(row, alg); }
    const std::vector<MixedPair>& mixed_pairs() const { return mixed_; }

    /// Diagonal of the residual relation must be true; each mixed pair must sit
    /// on positions where both first-order couplings are declared.
    void validate() const;

private:
    BoolMatrix alg_in_deriv_;   // diff_count x alg_count
    BoolMatrix diff_in_deriv_;  // diff_count x diff_count
    BoolMatrix diff_in_resid_;  // alg_count x diff_count
    BoolMatrix alg_in_resid_;   // alg_count x alg_count
    std::vector<MixedPair> mixed_;
};

} // namespace rbg
