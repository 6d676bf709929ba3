#include "levyarea/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "levyarea/errors.hpp"

namespace levyarea {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& what, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : j.items()) {
        if (!keys.contains(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + what);
    }
}

double number(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw ConfigError(what + " is missing '" + key + "'");
    if (!j.at(key).is_number()) throw ConfigError(what + "." + key + " must be a number");
    return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& what) {
    return j.contains(key) ? number(j, key, what) : fallback;
}

std::string kind_of(const json& j, const std::string& what) {
    if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError(what + " needs a string 'kind'");
    return j.at("kind").get<std::string>();
}

template <class F>
auto wrap(F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(e.what());
    }
}

} // namespace

JumpDistribution jump_distribution_from_json(const json& j) {
    const std::string what = "jump_dist";
    const std::string kind = kind_of(j, what);
    return wrap([&] {
        if (kind == "exponential") {
            require_object(j, what, {"kind", "rate"});
            return JumpDistribution::exponential(number(j, "rate", what));
        }
        if (kind == "deterministic") {
            require_object(j, what, {"kind", "size"});
            return JumpDistribution::deterministic(number(j, "size", what));
        }
        if (kind == "gamma") {
            require_object(j, what, {"kind", "shape", "scale"});
            return JumpDistribution::gamma(number(j, "shape", what), number(j, "scale", what));
        }
        if (kind == "uniform") {
            require_object(j, what, {"kind", "upper"});
            return JumpDistribution::uniform(number(j, "upper", what));
        }
        throw ConfigError("unknown jump_dist kind '" + kind + "'");
    });
}

json jump_distribution_to_json(const JumpDistribution& dist) {
    return std::visit(
        [](const auto& law) -> json {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                return {{"kind", "exponential"}, {"rate", law.rate}};
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                return {{"kind", "deterministic"}, {"size", law.size}};
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                return {{"kind", "gamma"}, {"shape", law.shape}, {"scale", law.scale}};
            } else {
                return {{"kind", "uniform"}, {"upper", law.upper}};
            }
        },
        dist.kind());
}

ProcessSpec process_from_json(const json& j) {
    const std::string what = "process";
    require_object(j, what, {"drift", "sigma2", "jump_rate", "jump_dist"});
    ProcessSpec spec;
    spec.drift = number(j, "drift", what);
    spec.sigma2 = number_or(j, "sigma2", 0.0, what);
    spec.jump_rate = number_or(j, "jump_rate", 0.0, what);
    if (j.contains("jump_dist") && !j.at("jump_dist").is_null()) {
        spec.jumps = jump_distribution_from_json(j.at("jump_dist"));
    }
    wrap([&] {
        spec.validate();
        return 0;
    });
    return spec;
}

json process_to_json(const ProcessSpec& spec) {
    json j{{"drift", spec.drift}, {"sigma2", spec.sigma2}, {"jump_rate", spec.jump_rate}};
    if (spec.jumps) j["jump_dist"] = jump_distribution_to_json(*spec.jumps);
    return j;
}

HoldingFunction holding_from_json(const json& j) {
    const std::string what = "holding";
    const std::string kind = kind_of(j, what);
    return wrap([&] {
        if (kind == "constant") {
            require_object(j, what, {"kind", "c"});
            return HoldingFunction::constant(number(j, "c", what));
        }
        if (kind == "linear") {
            require_object(j, what, {"kind", "c"});
            return HoldingFunction::linear(number_or(j, "c", 1.0, what));
        }
        if (kind == "power") {
            require_object(j, what, {"kind", "c", "gamma"});
            return HoldingFunction::power(number_or(j, "c", 1.0, what), number(j, "gamma", what));
        }
        if (kind == "piecewise_linear") {
            require_object(j, what, {"kind", "knots"});
            std::vector<std::pair<double, double>> knots;
            if (!j.contains("knots") || !j.at("knots").is_array()) throw ConfigError("knots must be an array");
            for (const auto& k : j.at("knots")) {
                if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
                    throw ConfigError("each knot must be [t, value]");
                }
                knots.emplace_back(k[0].get<double>(), k[1].get<double>());
            }
            return HoldingFunction::piecewise_linear(std::move(knots));
        }
        throw ConfigError("unknown holding kind '" + kind + "'");
    });
}

json holding_to_json(const HoldingFunction& h) {
    return std::visit(
        [](const auto& k) -> json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, HoldingFunction::Constant>) {
                return {{"kind", "constant"}, {"c", k.c}};
            } else if constexpr (std::is_same_v<T, HoldingFunction::Linear>) {
                return {{"kind", "linear"}, {"c", k.c}};
            } else if constexpr (std::is_same_v<T, HoldingFunction::Power>) {
                return {{"kind", "power"}, {"c", k.c}, {"gamma", k.gamma}};
            } else {
                json knots = json::array();
                for (const auto& [t, v] : k.knots) knots.push_back({t, v});
                return {{"kind", "piecewise_linear"}, {"knots", knots}};
            }
        },
        h.kind());
}

RunConfig run_config_from_json(const json& j) {
    require_object(j, "config",
                   {"process", "holding", "x", "alpha_grid", "n", "reps", "seed", "horizon", "scale", "dt",
                    "inventory"});
    if (!j.contains("process")) throw ConfigError("config is missing 'process'");
    RunConfig cfg;
    cfg.process = process_from_json(j.at("process"));
    if (j.contains("holding")) cfg.holding = holding_from_json(j.at("holding"));
    const std::string what = "config";
    if (j.contains("x")) cfg.x = number(j, "x", what);
    if (j.contains("horizon")) cfg.horizon = number(j, "horizon", what);
    if (j.contains("scale")) cfg.scale = number(j, "scale", what);
    if (j.contains("dt")) cfg.dt = number(j, "dt", what);
    if (j.contains("alpha_grid")) {
        if (!j.at("alpha_grid").is_string()) throw ConfigError("alpha_grid must be a 'start:stop:count' string");
        cfg.alpha_grid = j.at("alpha_grid").get<std::string>();
        parse_grid(*cfg.alpha_grid);
    }
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) throw ConfigError("n must be an integer");
        cfg.n = j.at("n").get<int>();
    }
    for (const char* key : {"reps", "seed"}) {
        if (!j.contains(key)) continue;
        if (!j.at(key).is_number_unsigned()) throw ConfigError(std::string(key) + " must be a non-negative integer");
        (std::string(key) == "reps" ? cfg.reps : cfg.seed) = j.at(key).get<std::uint64_t>();
    }
    if (j.contains("inventory")) {
        const json& inv = j.at("inventory");
        require_object(inv, "inventory", {"K", "r", "class_costs"});
        InventoryConfig ic;
        ic.setup_cost = number(inv, "K", "inventory");
        ic.reward = number_or(inv, "r", 0.0, "inventory");
        if (inv.contains("class_costs")) {
            if (!inv.at("class_costs").is_array()) throw ConfigError("class_costs must be an array");
            for (const auto& c : inv.at("class_costs")) {
                if (!c.is_number()) throw ConfigError("class_costs must hold numbers");
                ic.class_costs.push_back(c.get<double>());
            }
        }
        if (!(ic.setup_cost > 0.0)) throw ConfigError("inventory.K must be > 0");
        cfg.inventory = ic;
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return run_config_from_json(j);
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw ConfigError("grid must look like start:stop:count, got '" + text + "'");
    double start = 0.0, stop = 0.0;
    long count = 0;
    try {
        std::size_t used = 0;
        start = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("start");
        stop = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("stop");
        count = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("count");
    } catch (const std::logic_error&) {
        throw ConfigError("malformed grid '" + text + "'");
    }
    if (count < 1) throw ConfigError("grid count must be >= 1");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        grid.push_back(start);
        return grid;
    }
    for (long i = 0; i < count; ++i) {
        grid.push_back(i == count - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1));
    }
    return grid;
}

} // namespace levyarea
