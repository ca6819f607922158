#pragma once

#include "rbg/reduced_basis.hpp"

namespace rbg {

enum class Activation { Identity, Relu };

/// One-layer fully connected map from scaled primary state offsets to scaled
/// offsets of the listed output variables. Layers calibrated here always
/// carry a zero bias; it is kept as a field because the wire format has one.
///
/// With Relu activation the clamp applies to the scaled physical value, not
/// the raw offset: output_offset = max(0, initial + W u + b) - initial. The
/// physical output can then never go negative while offsets remain free to
/// drop below zero (e.g. air drying below its initial humidity).
struct LinearLayer {
    Matrix weights;       // outputs.size() x primary count
    Vector bias;          // zero for calibrated layers
    Activation activation = Activation::Identity;
    IndexList outputs;    // indices of the output variables in the full state
    Index modes_used = 0;

    Index output_count() const { return weights.rows(); }
    Index input_count() const { return weights.cols(); }

    /// Maps primary offsets to output offsets. `output_initial` holds the
    /// scaled initial values of the outputs; it is only read by the Relu
    /// clamp and may be empty for identity layers.
    Vector forward(const Vector& primary_offsets, const Vector& output_initial) const;
};

/// Closed-form calibration against the reduced basis:
///   W = V[targets, 1..n] (V[primary, 1..n]^T V[primary, 1..n])^-1 V[primary, 1..n]^T
/// which collapses to V[targets, :] V[primary, :]^-1 when n equals the mode
/// count and the primary block is square. Throws when the normal-equations
/// matrix is singular beyond a 1e-12 conditioning threshold (use fewer
/// modes).
LinearLayer calibrate_layer(const ReducedBasis& basis, const IndexList& primary,
                            const IndexList& targets, Index modes_used,
                            Activation activation = Activation::Identity);

/// Picks the mode count whose calibrated layers best predict held-out data:
/// for each candidate count, secondary and tertiary rows of the validation
/// snapshots are predicted from their primary rows and the max absolute
/// error (in scaled units) is minimized.
Index select_mode_count(const ReducedBasis& basis, const IndexList& primary,
                        const IndexList& secondary, const IndexList& tertiary,
                        const SnapshotMatrix& validation);

} // namespace rbg
