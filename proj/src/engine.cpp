#include "colearn/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace colearn {

void SimulationConfig::check() const {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("simulation config: " + what);
    };
    if (num_agents < 2) fail("agents must be >= 2, got " + std::to_string(num_agents));
    if (num_propositions < 1) fail("props must be >= 1, got " + std::to_string(num_propositions));
    if (!(evidence_rate > 0.0 && evidence_rate <= 1.0)) {
        fail("evidence rate r must be in (0, 1], got " + std::to_string(evidence_rate));
    }
    if (!(noise >= 0.0 && noise <= 0.5)) {
        fail("noise epsilon must be in [0, 0.5], got " + std::to_string(noise));
    }
    if (max_steps < 1) fail("max steps must be >= 1");
    if (convergence_window < 1) fail("convergence window must be >= 1");
    network().check();
}

RunState init_run(const SimulationConfig& config, Rng& rng) {
    config.check();
    Network network = generate(config.network(), rng);
    return RunState{
        .t = 0,
        .beliefs = std::vector<Belief>(config.num_agents, Belief(config.num_propositions)),
        .world = WorldState::all_true(config.num_propositions),
        .network = std::move(network),
        .unchanged_interactions = 0,
        .interactions = 0,
    };
}

namespace {

bool has_unknown(const Belief& b) {
    const auto v = b.values();
    return std::find(v.begin(), v.end(), TruthValue::Unknown) != v.end();
}

} // namespace

void step(RunState& state, const SimulationConfig& config, Rng& rng) {
    if (state.t >= config.max_steps) {
        throw std::logic_error("step: run already at max_steps");
    }

    auto record = [&state](bool changed) {
        ++state.interactions;
        if (changed) {
            state.unchanged_interactions = 0;
        } else {
            ++state.unchanged_interactions;
        }
    };

    // Evidence phase. Fully certain agents no longer look for evidence; a
    // failed draw is not an interaction.
    for (Belief& belief : state.beliefs) {
        if (!has_unknown(belief)) continue;
        if (!bernoulli(rng, config.evidence_rate)) continue;
        const auto target = select_investigation(belief, rng);
        if (!target) continue;
        const Evidence e = draw_evidence(state.world, *target, config.noise, rng);
        record(apply_evidence_inplace(belief, e));
    }

    // Fusion phase: both endpoints adopt the fused belief.
    const Edge edge = random_edge(state.network, rng);
    Belief& a = state.beliefs[edge.u];
    Belief& b = state.beliefs[edge.v];
    if (a == b) {
        record(false);
    } else {
        Belief fused = fuse_beliefs(a, b);
        a = fused;
        b = std::move(fused);
        record(true);
    }

    ++state.t;
}

RunResult run(const SimulationConfig& config) {
    Rng rng(config.seed);
    RunState state = init_run(config, rng);

    RunResult result;
    if (config.record_trajectory) result.trajectory.reserve(config.max_steps);
    while (state.t < config.max_steps) {
        step(state, config, rng);
        if (config.record_trajectory) {
            result.trajectory.push_back(average_error(state.beliefs, state.world));
        }
        if (state.unchanged_interactions >= config.convergence_window) {
            result.converged = true;
            break;
        }
    }
    result.steps = state.t;
    result.final_average_error = average_error(state.beliefs, state.world);
    return result;
}

} // namespace colearn
