#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/input_schedule.hpp"
#include "rbg/io/json_util.hpp"
#include "rbg/thermal/illustrative.hpp"
#include "rbg/thermal/multizone.hpp"

namespace rbg::io {

/// Builders known to the model document format.
inline constexpr const char* kIllustrativeBuilder = "illustrative_cabin";
inline constexpr const char* kMultizoneBuilder = "multizone_demo";

Json illustrative_params_to_json(const thermal::IllustrativeParams& p);
thermal::IllustrativeParams illustrative_params_from_json(const Json& j);

Json multizone_config_to_json(const thermal::MultizoneConfig& c);
thermal::MultizoneConfig multizone_config_from_json(const Json& j);

/// Model document: schema_version, builder, parameters, plus the derived
/// structure block (names, initial values, scaling, incidence) for
/// inspection. The structure is regenerated on load, never trusted.
Json model_to_json(const std::string& builder, const Json& parameters);

/// Rebuilds the model named by the document. `overrides` patches scalar
/// parameters (dotted keys are not supported; the documents are flat).
DaeModelPtr model_from_json(const Json& doc);

/// The document with overrides applied to its parameters block.
Json apply_parameter_overrides(Json doc, const std::map<std::string, double>& overrides);

/// Default constant input schedule for a model document.
InputSchedule default_schedule_for(const Json& doc);

/// Canonical hash of a model document (over its compact dump).
std::string model_hash(const Json& doc);

} // namespace rbg::io
