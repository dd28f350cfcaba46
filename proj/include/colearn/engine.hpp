#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "colearn/belief.hpp"
#include "colearn/random.hpp"
#include "colearn/smallworld.hpp"

namespace colearn {

struct SimulationConfig {
    std::size_t num_agents = 100;
    std::size_t num_propositions = 100;
    std::size_t k = 10;
    double rho = 0.0;
    double evidence_rate = 0.05;   // r, in (0, 1]
    double noise = 0.0;            // epsilon, in [0, 0.5]
    std::size_t max_steps = 10000;
    std::size_t convergence_window = 100;
    std::uint64_t seed = 1;
    bool record_trajectory = false;

    NetworkParams network() const { return {num_agents, k, rho}; }

    // Throws std::invalid_argument naming the offending field.
    void check() const;
};

struct RunState {
    std::size_t t = 0;
    std::vector<Belief> beliefs;
    WorldState world;
    Network network;
    std::size_t unchanged_interactions = 0;
    std::size_t interactions = 0;  // total events so far, for diagnostics
};

struct RunResult {
    bool converged = false;
    std::size_t steps = 0;
    double final_average_error = 0.0;
    std::vector<double> trajectory;  // error after each step, if recorded

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

// World all-true, every agent all-Unknown, network drawn from rng.
RunState init_run(const SimulationConfig& config, Rng& rng);

// One timestep: evidence phase over agents in ascending order, then one
// fusion on a uniformly drawn edge, then t += 1.
void step(RunState& state, const SimulationConfig& config, Rng& rng);

// Steps until the convergence window is reached or max_steps elapse. The
// random stream is seeded from config.seed and shared by network generation
// and the dynamics.
RunResult run(const SimulationConfig& config);

} // namespace colearn
