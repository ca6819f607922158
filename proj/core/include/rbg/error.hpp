#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace rbg {

/// Exception carrying a stable error code plus machine-readable details.
/// The CLI forwards `to_json()` to stderr, so messages should stay factual.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, nlohmann::json details = {})
        : std::runtime_error(message), code_(std::move(code)), details_(std::move(details)) {}

    const std::string& code() const noexcept { return code_; }
    const nlohmann::json& details() const noexcept { return details_; }

    nlohmann::json to_json() const {
        nlohmann::json j{{"type", code_}, {"message", what()}};
        if (!details_.is_null() && !details_.empty()) j["details"] = details_;
        return nlohmann::json{{"error", j}};
    }

private:
    std::string code_;
    nlohmann::json details_;
};

inline Error dimension_error(const std::string& vector_name, long expected, long actual) {
    return Error("dimension_mismatch",
                 "vector '" + vector_name + "' has length " + std::to_string(actual) +
                     ", expected " + std::to_string(expected),
                 {{"vector", vector_name}, {"expected", expected}, {"actual", actual}});
}

inline Error validation_error(const std::string& message, nlohmann::json details = {}) {
    return Error("validation", message, std::move(details));
}

} // namespace rbg
