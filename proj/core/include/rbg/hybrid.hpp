#pragma once

#include "rbg/integrate.hpp"
#include "rbg/linear_layer.hpp"
#include "rbg/restricted_model.hpp"

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace rbg {

/// Everything needed to run the reduced model: the retained DAE rows, the
/// calibrated coupling and reconstruction layers, scaling, and provenance.
/// Immutable after construction; independent runs may share one artifact.
struct HybridArtifact {
    DaeModelPtr model;
    nlohmann::ordered_json model_doc;  // builder document; empty when built in memory
    std::string model_hash;
    Partition partition;
    ReducedBasis basis;
    LinearLayer coupling;        // outputs: secondary differential variables
    LinearLayer reconstruction;  // outputs: tertiary differential variables
    IndexList interpolation_order;
    IntegrateOptions defaults;
    std::uint64_t seed = 0;
    std::vector<std::string> training_labels;

    RestrictedModel restricted() const { return RestrictedModel(model, partition); }

    std::vector<std::string> primary_names() const;
    std::vector<std::string> secondary_names() const;
    std::vector<std::string> tertiary_names() const;
};

/// Assembles and validates an artifact: layer shapes must match the
/// partition cardinalities and the basis must fit the model.
HybridArtifact build_hybrid(DaeModelPtr model, ReducedBasis basis, Partition partition,
                            LinearLayer coupling, LinearLayer reconstruction,
                            nlohmann::ordered_json model_doc = {},
                            IntegrateOptions defaults = {});

/// Recurrent explicit stepping of the reduced model: per internal step the
/// retained algebraic rows are solved at the current instant, the primary
/// state advances by explicit Euler, and the coupling layer refreshes the
/// secondary state from the new primary offsets (in scaled coordinates; the
/// retained DAE always sees physical units). Tertiary variables are never
/// touched. Output columns: primary then secondary states, retained
/// algebraic variables, inputs.
Trajectory integrate_hybrid(const HybridArtifact& artifact, const InputSchedule& schedule,
                            double t_end, std::optional<IntegrateOptions> opts = {});

/// Post-processing pass over a trajectory produced by integrate_hybrid:
/// fills in the tertiary states through the reconstruction layer and returns
/// a full-state trajectory in model variable order. With `with_alg` the
/// whole algebraic vector is re-evaluated from the reconstructed states, so
/// tertiary fluxes become available too.
Trajectory reconstruct_tertiary(const HybridArtifact& artifact, const Trajectory& reduced,
                                bool with_alg = true);

} // namespace rbg
