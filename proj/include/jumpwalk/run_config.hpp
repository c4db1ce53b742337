#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumpwalk/error.hpp"
#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/rational.hpp"

namespace jumpwalk {

/// One run description, read from a JSON document. Probabilities stay as
/// strings ("3/10", "0.25", "1") so a config round-trips byte-for-byte and
/// the exactness of the input survives serialization.
struct RunConfig {
    std::vector<std::string> probs;
    std::size_t j = 0;
    std::vector<std::size_t> n_values;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> paths;
    std::string output;  // empty means standard output

    bool operator==(const RunConfig&) const = default;

    JumpDistribution distribution() const {
        std::vector<Rational> raw;
        raw.reserve(probs.size());
        for (const auto& s : probs) raw.push_back(rational_from_string(s));
        return JumpDistribution::validate(std::move(raw));
    }
};

inline const std::vector<std::size_t>& default_n_grid() {
    static const std::vector<std::size_t> grid = {10, 20, 50, 100, 200, 400};
    return grid;
}

inline RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::CONFIG_INVALID, "config must be a JSON object");
    RunConfig cfg;

    if (!doc.contains("probs") || !doc["probs"].is_array() || doc["probs"].empty())
        throw Error(ErrorCode::CONFIG_INVALID, "field \"probs\" must be a non-empty array");
    for (const auto& item : doc["probs"]) {
        if (item.is_string())
            cfg.probs.push_back(item.get<std::string>());
        else if (item.is_number_integer())
            cfg.probs.push_back(std::to_string(item.get<long long>()));
        else
            throw Error(ErrorCode::CONFIG_INVALID,
                        "\"probs\" entries must be strings like \"3/10\" (floats lose exactness)");
    }

    if (doc.contains("j")) {
        if (!doc["j"].is_number_integer() || doc["j"].get<long long>() < 0)
            throw Error(ErrorCode::CONFIG_INVALID, "field \"j\" must be a nonnegative integer");
        cfg.j = doc["j"].get<std::size_t>();
    }

    if (doc.contains("n_values")) {
        if (!doc["n_values"].is_array() || doc["n_values"].empty())
            throw Error(ErrorCode::CONFIG_INVALID, "field \"n_values\" must be a non-empty array");
        long long prev = -1;
        for (const auto& item : doc["n_values"]) {
            if (!item.is_number_integer() || item.get<long long>() <= 0)
                throw Error(ErrorCode::CONFIG_INVALID, "\"n_values\" entries must be positive");
            long long n = item.get<long long>();
            if (n <= prev)
                throw Error(ErrorCode::CONFIG_INVALID, "\"n_values\" must be strictly increasing");
            prev = n;
            cfg.n_values.push_back(static_cast<std::size_t>(n));
        }
    } else {
        cfg.n_values = default_n_grid();
    }

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
            throw Error(ErrorCode::CONFIG_INVALID, "field \"seed\" must be an integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("paths")) {
        if (!doc["paths"].is_number_integer() || doc["paths"].get<long long>() <= 0)
            throw Error(ErrorCode::CONFIG_INVALID, "field \"paths\" must be a positive integer");
        cfg.paths = doc["paths"].get<std::uint64_t>();
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string())
            throw Error(ErrorCode::CONFIG_INVALID, "field \"output\" must be a string");
        cfg.output = doc["output"].get<std::string>();
    }

    cfg.distribution();  // validate probabilities eagerly for early diagnostics
    return cfg;
}

inline RunConfig parse_config_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::CONFIG_INVALID, std::string("JSON parse error: ") + e.what());
    }
    return parse_config(doc);
}

inline nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json doc;
    doc["probs"] = cfg.probs;
    doc["j"] = cfg.j;
    doc["n_values"] = cfg.n_values;
    if (cfg.seed) doc["seed"] = *cfg.seed;
    if (cfg.paths) doc["paths"] = *cfg.paths;
    if (!cfg.output.empty()) doc["output"] = cfg.output;
    return doc;
}

}  // namespace jumpwalk
