#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "colearn/engine.hpp"
#include "colearn/harness.hpp"
#include "colearn/smallworld.hpp"

namespace colearn::cli {

namespace {

void add_network_flags(CLI::App& cmd, SimulationConfig& c) {
    cmd.add_option("--agents", c.num_agents, "Number of agents m")->capture_default_str();
    cmd.add_option("--k", c.k, "Nearest neighbours per node (k = agents-1: complete graph)")
        ->capture_default_str();
    cmd.add_option("--rho", c.rho, "Rewiring probability in [0, 1]")->capture_default_str();
    cmd.add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

std::string default_output_dir() {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return "results";
}

int do_simulate(SimulationConfig config, const std::string& trajectory_path, std::ostream& out) {
    config.record_trajectory = !trajectory_path.empty();
    config.check();
    const RunResult result = run(config);

    RunRecord record{{config.noise, config.evidence_rate, config.k, config.rho}, 0, config.seed,
                     result};
    write_raw_csv(std::span(&record, 1), out);

    if (!trajectory_path.empty()) {
        std::ofstream traj(trajectory_path);
        if (!traj) throw IoError("cannot open trajectory file " + trajectory_path);
        traj << "step,avg_error\n";
        char buf[64];
        for (std::size_t t = 0; t < result.trajectory.size(); ++t) {
            std::snprintf(buf, sizeof buf, "%zu,%.6f\n", t + 1, result.trajectory[t]);
            traj << buf;
        }
        if (!traj) throw IoError("write failed: " + trajectory_path);
    }
    return kOk;
}

int do_sweep(const std::string& spec_path, const std::string& out_dir, unsigned threads,
             std::size_t runs_override, std::ostream& out) {
    SweepSpec spec = load_sweep_spec(spec_path);
    if (runs_override > 0) spec.runs_per_cell = runs_override;
    const auto outcomes = run_sweep(spec, threads);
    const auto summaries = summaries_of(outcomes);
    const auto records = records_of(outcomes);
    write_results(summaries, records, out_dir);
    out << "wrote " << summaries.size() << " cells, " << records.size() << " runs to " << out_dir
        << "\n";
    return kOk;
}

int do_gen_network(const SimulationConfig& c, const std::string& path, std::ostream& out) {
    Rng rng(c.seed);
    const Network net = generate(c.network(), rng);
    if (path.empty() || path == "-") {
        write_edge_list(net, out);
        return kOk;
    }
    std::ofstream file(path);
    if (!file) throw IoError("cannot open " + path + " for writing");
    write_edge_list(net, file);
    if (!file) throw IoError("write failed: " + path);
    return kOk;
}

} // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"Collective learning on small-world networks", "colearn"};
    app.require_subcommand(1);

    SimulationConfig sim;
    std::string trajectory_path;
    auto* simulate = app.add_subcommand("simulate", "Run one seeded simulation, print a CSV row");
    add_network_flags(*simulate, sim);
    simulate->add_option("--props", sim.num_propositions, "Number of propositions n")
        ->capture_default_str();
    simulate->add_option("--evidence-rate", sim.evidence_rate, "Evidence rate r in (0, 1]")
        ->capture_default_str();
    simulate->add_option("--noise", sim.noise, "Evidence noise epsilon in [0, 0.5]")
        ->capture_default_str();
    simulate->add_option("--max-steps", sim.max_steps, "Step cap")->capture_default_str();
    simulate->add_option("--window", sim.convergence_window,
                         "Unchanged interactions required for convergence")
        ->capture_default_str();
    simulate->add_option("--trajectory", trajectory_path,
                         "Write per-step average error to this CSV file");

    std::string spec_path;
    std::string out_dir = default_output_dir();
    unsigned threads = 0;
    std::size_t runs_override = 0;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a spec file");
    sweep->add_option("--spec", spec_path, "Sweep specification file")->required();
    sweep->add_option("--out", out_dir, "Output directory (default $COLEARN_OUTPUT_DIR or results)")
        ->capture_default_str();
    sweep->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();
    sweep->add_option("--runs", runs_override, "Override runs_per_cell (spec default 100)");

    SimulationConfig net_cfg;
    std::string net_out;
    auto* gen = app.add_subcommand("gen-network", "Write a generated network as an edge list");
    add_network_flags(*gen, net_cfg);
    gen->add_option("--out", net_out, "Edge-list file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg_out, msg_err;
        const int code = app.exit(e, msg_out, msg_err);
        out << msg_out.str();
        err << msg_err.str();
        return code == 0 ? kOk : kValidationError;
    }

    try {
        if (*simulate) return do_simulate(sim, trajectory_path, out);
        if (*sweep) return do_sweep(spec_path, out_dir, threads, runs_override, out);
        if (*gen) return do_gen_network(net_cfg, net_out, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
    return kValidationError;
}

} // namespace colearn::cli
