#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "levyarea/holding.hpp"
#include "levyarea/process.hpp"

namespace levyarea {

// {"drift": -1.0, "sigma2": 0.0, "jump_rate": 1.0,
//  "jump_dist": {"kind": "exponential", "rate": 2.0}}
ProcessSpec process_from_json(const nlohmann::json& j);
nlohmann::json process_to_json(const ProcessSpec& spec);

JumpDistribution jump_distribution_from_json(const nlohmann::json& j);
nlohmann::json jump_distribution_to_json(const JumpDistribution& dist);

// {"kind": "power", "c": 1.0, "gamma": 1.0}
// {"kind": "piecewise_linear", "knots": [[0.0, 0.0], [1.0, 2.0]]}
HoldingFunction holding_from_json(const nlohmann::json& j);
nlohmann::json holding_to_json(const HoldingFunction& h);

struct InventoryConfig {
    double setup_cost = 0.0;
    double reward = 0.0;
    std::vector<double> class_costs;
};

/// Parsed run configuration; every field except `process` may be given on
/// the command line instead.
struct RunConfig {
    ProcessSpec process;
    HoldingFunction holding = HoldingFunction::linear(1.0);
    std::optional<double> x;
    std::optional<std::string> alpha_grid;
    std::optional<int> n;
    std::optional<std::uint64_t> reps;
    std::optional<std::uint64_t> seed;
    std::optional<double> horizon;
    std::optional<double> scale;
    std::optional<double> dt;
    std::optional<InventoryConfig> inventory;
};

/// Throws ConfigError on unknown keys, wrong types or invalid values.
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// `start:stop:count`, inclusive endpoints; count 1 yields {start}.
std::vector<double> parse_grid(const std::string& text);

} // namespace levyarea
