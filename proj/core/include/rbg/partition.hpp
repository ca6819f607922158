#pragma once

#include "rbg/types.hpp"

namespace rbg {

/// Disjoint split of the differential and algebraic variables into primary
/// (retained), secondary (supplied by the coupling layer) and tertiary
/// (reconstructed post hoc) sets. Index lists are sorted ascending, 0-based.
/// There is never a secondary algebraic set; classification rejects models
/// that would need one.
struct Partition {
    IndexList primary_diff;
    IndexList secondary_diff;
    IndexList tertiary_diff;
    IndexList primary_alg;
    IndexList tertiary_alg;

    /// Checks sortedness and that the diff/alg sets are pairwise disjoint and
    /// cover 0..diff_count-1 and 0..alg_count-1 exactly.
    void validate(Index diff_count, Index alg_count) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

} // namespace rbg
