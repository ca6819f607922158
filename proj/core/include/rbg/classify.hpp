#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/partition.hpp"

namespace rbg {

/// Classifies all variables given the retained differential set.
///
/// - primary algebraic: structurally read by a retained derivative row, or
///   tied to a retained differential variable through a declared mixed pair;
/// - tertiary: variables no retained row reads at all;
/// - secondary differential: the rest, to be supplied by the coupling layer.
///
/// A model where some algebraic variable is read by a retained residual row
/// without being primary falls outside the method's assumptions and raises
/// an error (it would need a secondary algebraic set).
Partition classify_variables(const DaeModel& model, const IndexList& primary_diff);

} // namespace rbg
