#pragma once

#include "rbg/hybrid.hpp"
#include "rbg/io/json_util.hpp"

namespace rbg::io {

/// Versioned wire format of a hybrid artifact: model document, partition
/// sets (sorted, 1-based), dense layer matrices, basis with scaling and
/// provenance. Serialization round-trips bit-exactly.
Json artifact_to_json(const HybridArtifact& artifact);

/// Rebuilds the artifact, reconstructing the model from the embedded
/// document and checking its hash.
HybridArtifact artifact_from_json(const Json& doc);

std::string artifact_hash(const Json& doc);

} // namespace rbg::io
