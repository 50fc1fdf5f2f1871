#pragma once

#include <string>

#include <json.hpp>

#include "ddosml/errors.hpp"

namespace ddosml::hyper {

inline std::size_t count_at_least(const nlohmann::json& h, const std::string& key,
                                  std::size_t fallback, std::size_t minimum) {
    if (!h.contains(key)) return fallback;
    const auto v = h.at(key).get<long long>();
    if (v < static_cast<long long>(minimum))
        throw ValidationError("hyperparameters." + key,
                              "must be >= " + std::to_string(minimum));
    return static_cast<std::size_t>(v);
}

inline double positive_real(const nlohmann::json& h, const std::string& key, double fallback) {
    if (!h.contains(key)) return fallback;
    const double v = h.at(key).get<double>();
    if (!(v > 0.0)) throw ValidationError("hyperparameters." + key, "must be > 0");
    return v;
}

inline double nonnegative_real(const nlohmann::json& h, const std::string& key,
                               double fallback) {
    if (!h.contains(key)) return fallback;
    const double v = h.at(key).get<double>();
    if (v < 0.0) throw ValidationError("hyperparameters." + key, "must be >= 0");
    return v;
}

inline bool boolean(const nlohmann::json& h, const std::string& key, bool fallback) {
    return h.contains(key) ? h.at(key).get<bool>() : fallback;
}

}  // namespace ddosml::hyper
