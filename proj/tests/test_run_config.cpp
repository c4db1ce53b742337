#include <catch2/catch_amalgamated.hpp>

#include "jumpwalk/run_config.hpp"

using namespace jumpwalk;

TEST_CASE("config parsing") {
    RunConfig cfg = parse_config_text(R"({
        "probs": ["3/10", "1/10", "1/10", "1/2"],
        "j": 5,
        "n_values": [10, 20, 50],
        "seed": 42,
        "paths": 1000,
        "output": "table.csv"
    })");
    CHECK(cfg.j == 5);
    CHECK(cfg.n_values == std::vector<std::size_t>{10, 20, 50});
    CHECK(cfg.seed == 42);
    CHECK(cfg.paths == 1000);
    CHECK(cfg.output == "table.csv");
    CHECK(cfg.distribution().max_jump() == 3);
}

TEST_CASE("missing n_values falls back to the standard grid") {
    RunConfig cfg = parse_config_text(R"({"probs": ["1"]})");
    CHECK(cfg.n_values == std::vector<std::size_t>{10, 20, 50, 100, 200, 400});
    CHECK(cfg.j == 0);
    CHECK_FALSE(cfg.seed.has_value());
}

TEST_CASE("config round-trips through JSON") {
    RunConfig cfg = parse_config_text(R"({
        "probs": ["0.3", "1/10", "1/10", "1/2"],
        "j": 2,
        "n_values": [5, 9],
        "paths": 77
    })");
    RunConfig again = parse_config(to_json(cfg));
    CHECK(cfg == again);
}

TEST_CASE("config diagnostics") {
    auto code_of = [](const char* text) {
        try {
            parse_config_text(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::NO_CONVERGENCE;  // marker for "did not throw"
    };

    CHECK(code_of(R"({"j": 1})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": []})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": [0.3, 0.7]})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": ["1"], "n_values": [5, 5]})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": ["1"], "n_values": [0]})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": ["1"], "j": -3})") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of("not json") == ErrorCode::CONFIG_INVALID);
    CHECK(code_of(R"({"probs": ["1/2", "1/4"]})") == ErrorCode::SUM_NOT_ONE);
}
