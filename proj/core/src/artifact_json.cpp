#include "rbg/io/artifact_json.hpp"

#include "rbg/error.hpp"
#include "rbg/io/model_json.hpp"

namespace rbg::io {

namespace {

Json layer_to_json(const LinearLayer& layer) {
    return Json{
        {"weights", matrix_to_json(layer.weights)},
        {"bias", vector_to_json(layer.bias)},
        {"activation", layer.activation == Activation::Relu ? "relu" : "identity"},
        {"outputs", indices_to_json(layer.outputs)},
        {"modes_used", layer.modes_used},
    };
}

LinearLayer layer_from_json(const Json& j) {
    LinearLayer layer;
    layer.weights = matrix_from_json(j.at("weights"));
    layer.bias = vector_from_json(j.at("bias"));
    const std::string act = j.at("activation").get<std::string>();
    if (act == "relu")
        layer.activation = Activation::Relu;
    else if (act == "identity")
        layer.activation = Activation::Identity;
    else
        throw validation_error("activation must be 'identity' or 'relu'", {{"value", act}});
    layer.outputs = indices_from_json(j.at("outputs"));
    layer.modes_used = j.at("modes_used").get<Index>();
    return layer;
}

Json truncation_to_json(const TruncationRule& rule) {
    if (rule.kind == TruncationRule::Kind::FixedCount)
        return Json{{"rule", "fixed"}, {"mode_count", rule.mode_count}};
    return Json{{"rule", "residual"}, {"residual_tol", rule.residual_tol}};
}

TruncationRule truncation_from_json(const Json& j) {
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "fixed") return TruncationRule::fixed(j.at("mode_count").get<Index>());
    if (rule == "residual") return TruncationRule::residual(j.at("residual_tol").get<double>());
    throw validation_error("truncation rule must be 'fixed' or 'residual'", {{"value", rule}});
}

} // namespace

Json artifact_to_json(const HybridArtifact& artifact) {
    if (artifact.model_doc.is_null() || artifact.model_doc.empty())
        throw validation_error("artifact carries no model document; build it from one to "
                               "serialize");
    Json labels = Json::array();
    for (const auto& l : artifact.training_labels) labels.push_back(l);
    return Json{
        {"schema_version", 1},
        {"model_hash", artifact.model_hash},
        {"model", artifact.model_doc},
        {"partition",
         Json{{"primary_diff", indices_to_json(artifact.partition.primary_diff)},
              {"secondary_diff", indices_to_json(artifact.partition.secondary_diff)},
              {"tertiary_diff", indices_to_json(artifact.partition.tertiary_diff)},
              {"primary_alg", indices_to_json(artifact.partition.primary_alg)},
              {"tertiary_alg", indices_to_json(artifact.partition.tertiary_alg)}}},
        {"interpolation_order", indices_to_json(artifact.interpolation_order)},
        {"basis",
         Json{{"modes", matrix_to_json(artifact.basis.modes)},
              {"singular_values", vector_to_json(artifact.basis.singular_values)},
              {"spectrum", vector_to_json(artifact.basis.spectrum)},
              {"truncation", truncation_to_json(artifact.basis.rule)},
              {"scale", vector_to_json(artifact.basis.scale)},
              {"initial", vector_to_json(artifact.basis.initial)}}},
        {"coupling", layer_to_json(artifact.coupling)},
        {"reconstruction", layer_to_json(artifact.reconstruction)},
        {"integration",
         Json{{"dt", artifact.defaults.dt},
              {"substeps", artifact.defaults.substeps},
              {"alg_tol", artifact.defaults.alg_tol}}},
        {"provenance", Json{{"seed", artifact.seed}, {"trajectories", std::move(labels)}}},
    };
}

HybridArtifact artifact_from_json(const Json& doc) {
    if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != 1)
        throw validation_error("unsupported artifact schema version");

    const Json& model_doc = doc.at("model");
    DaeModelPtr model = model_from_json(model_doc);
    const std::string hash = model_hash(model_doc);
    if (doc.contains("model_hash") && doc.at("model_hash").get<std::string>() != hash)
        throw validation_error("artifact model hash does not match the embedded document",
                               {{"stored", doc.at("model_hash").get<std::string>()},
                                {"computed", hash}});

    Partition part;
    const Json& pj = doc.at("partition");
    part.primary_diff = indices_from_json(pj.at("primary_diff"));
    part.secondary_diff = indices_from_json(pj.at("secondary_diff"));
    part.tertiary_diff = indices_from_json(pj.at("tertiary_diff"));
    part.primary_alg = indices_from_json(pj.at("primary_alg"));
    part.tertiary_alg = indices_from_json(pj.at("tertiary_alg"));

    ReducedBasis basis;
    const Json& bj = doc.at("basis");
    basis.modes = matrix_from_json(bj.at("modes"));
    basis.singular_values = vector_from_json(bj.at("singular_values"));
    basis.spectrum = vector_from_json(bj.at("spectrum"));
    basis.rule = truncation_from_json(bj.at("truncation"));
    basis.scale = vector_from_json(bj.at("scale"));
    basis.initial = vector_from_json(bj.at("initial"));

    IntegrateOptions defaults;
    const Json& ij = doc.at("integration");
    defaults.dt = ij.at("dt").get<double>();
    defaults.substeps = ij.at("substeps").get<int>();
    defaults.alg_tol = ij.at("alg_tol").get<double>();

    HybridArtifact art =
        build_hybrid(std::move(model), std::move(basis), std::move(part),
                     layer_from_json(doc.at("coupling")),
                     layer_from_json(doc.at("reconstruction")), model_doc, defaults);
    art.model_hash = hash;
    art.interpolation_order = indices_from_json(doc.at("interpolation_order"));
    if (doc.contains("provenance")) {
        const Json& prov = doc.at("provenance");
        art.seed = prov.value("seed", std::uint64_t{0});
        if (prov.contains("trajectories"))
            for (const auto& l : prov.at("trajectories"))
                art.training_labels.push_back(l.get<std::string>());
    }
    return art;
}

std::string artifact_hash(const Json& doc) { return fnv1a_hex(doc.dump()); }

} // namespace rbg::io
