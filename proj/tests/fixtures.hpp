#pragma once

#include "levyarea/exponent.hpp"
#include "levyarea/holding.hpp"
#include "levyarea/process.hpp"

namespace fixtures {

using namespace levyarea;

// phi(a) = a + a^2 / 2
inline ProcessSpec brownian() {
    ProcessSpec s;
    s.drift = -1.0;
    s.sigma2 = 1.0;
    return s;
}

// phi(a) = a - a / (2 + a)
inline ProcessSpec mm1() {
    ProcessSpec s;
    s.drift = -1.0;
    s.jump_rate = 1.0;
    s.jumps = JumpDistribution::exponential(2.0);
    return s;
}

// phi(a) = a + exp(-a / 2) - 1
inline ProcessSpec deterministic() {
    ProcessSpec s;
    s.drift = -1.0;
    s.jump_rate = 1.0;
    s.jumps = JumpDistribution::deterministic(0.5);
    return s;
}

inline ProcessSpec gamma_jumps() {
    ProcessSpec s;
    s.drift = -2.0;
    s.jump_rate = 1.0;
    s.jumps = JumpDistribution::gamma(2.0, 0.5);
    return s;
}

inline ProcessSpec uniform_jumps() {
    ProcessSpec s;
    s.drift = -1.0;
    s.jump_rate = 2.0;
    s.jumps = JumpDistribution::uniform(0.6);
    return s;
}

inline ProcessSpec drift_only(double d = -1.0) {
    ProcessSpec s;
    s.drift = d;
    return s;
}

inline std::vector<ProcessSpec> catalog() {
    ProcessSpec mixed = mm1();
    mixed.sigma2 = 0.3;
    return {brownian(), mm1(), deterministic(), gamma_jumps(), uniform_jumps(), drift_only(), mixed};
}

} // namespace fixtures
