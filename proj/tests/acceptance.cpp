// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Monte Carlo criteria use 100 runs per cell from sweeps
// with base seed 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "colearn/belief.hpp"
#include "colearn/engine.hpp"
#include "colearn/harness.hpp"
#include "colearn/smallworld.hpp"
#include "stat_oracles.hpp"

using namespace colearn;

namespace {

constexpr std::uint64_t kBaseSeed = 1;
constexpr std::size_t kRuns = 100;
constexpr double kConfidence = 0.99;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Runs a regular sweep and indexes the outcomes by cell.
class Cells {
public:
    Cells(std::vector<std::size_t> ks, std::vector<double> rhos, std::vector<double> rs,
          std::vector<double> eps) {
        SweepSpec spec;
        spec.k_values = std::move(ks);
        spec.rho_values = std::move(rhos);
        spec.r_values = std::move(rs);
        spec.epsilon_values = std::move(eps);
        spec.runs_per_cell = kRuns;
        spec.base_seed = kBaseSeed;
        for (auto& o : run_sweep(spec)) by_cell_.emplace(o.summary.cell, std::move(o));
    }

    const CellOutcome& at(double eps, double r, std::size_t k, double rho) const {
        return by_cell_.at(CellParams{eps, r, k, rho});
    }

    static std::vector<double> errors(const CellOutcome& o) {
        std::vector<double> out;
        for (const auto& rec : o.runs) out.push_back(rec.result.final_average_error);
        return out;
    }

private:
    std::map<CellParams, CellOutcome> by_cell_;
};

Verdict fusion_table() {
    using TV = TruthValue;
    const TV vals[3] = {TV::False, TV::Unknown, TV::True};
    const TV table[3][3] = {{TV::False, TV::False, TV::Unknown},
                            {TV::False, TV::Unknown, TV::True},
                            {TV::Unknown, TV::True, TV::True}};
    Verdict v;
    int ok = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const bool cell = fuse_value(vals[i], vals[j]) == table[i][j];
            ok += cell;
            v.require(cell, fmt("cell (%d,%d) wrong", i, j));
        }
    if (v.pass) v.detail = fmt("%d/9 cells", ok);
    return v;
}

Verdict noise_free_learning() {
    const std::vector<std::size_t> ks = {2, 10, 50, 99};
    const std::vector<double> rs = {0.01, 0.1, 1.0};
    const Cells cells(ks, {0.0}, rs, {0.0});
    Verdict v;
    double worst = 0.0;
    for (std::size_t k : ks)
        for (double r : rs) {
            const CellSummary& s = cells.at(0.0, r, k, 0.0).summary;
            worst = std::max(worst, s.mean_error);
            std::size_t nonzero = 0;
            for (double e : Cells::errors(cells.at(0.0, r, k, 0.0))) nonzero += e != 0.0;
            v.require(s.mean_error == 0.0,
                      fmt("k=%zu r=%g mean error %.3g (%zu/%zu runs stopped with Unknowns left)", k,
                          r, s.mean_error, nonzero, kRuns));
            v.require(s.fraction_converged == 1.0,
                      fmt("k=%zu r=%g converged fraction %.2f", k, r, s.fraction_converged));
        }
    if (v.pass) v.detail = "12 cells, mean error 0, all converged";
    return v;
}

Verdict random_evidence_floor() {
    const Cells cells({10}, {0.0}, {0.1}, {0.5});
    const double mean = cells.at(0.5, 0.1, 10, 0.0).summary.mean_error;
    Verdict v;
    v.require(std::abs(mean - 0.5) <= 0.06, fmt("mean %.4f outside 0.5 +/- 0.06", mean));
    if (v.pass) v.detail = fmt("mean %.4f", mean);
    return v;
}

// Cells shared by the three rewiring criteria.
const Cells& rewiring_cells() {
    static const Cells cells({2, 10}, {0.0, 0.1, 0.5, 1.0}, {0.01}, {0.2});
    return cells;
}

Verdict rewiring_k2() {
    const Cells& c = rewiring_cells();
    const auto& regular = c.at(0.2, 0.01, 2, 0.0);
    const auto& random = c.at(0.2, 0.01, 2, 1.0);
    const double m0 = regular.summary.mean_error, m1 = random.summary.mean_error;
    const auto welch = test::welch_greater(Cells::errors(random), Cells::errors(regular));
    Verdict v;
    v.require(std::abs(m0 - 0.081) <= 0.02, fmt("rho=0 mean %.4f outside 0.081 +/- 0.02", m0));
    v.require(std::abs(m1 - 0.130) <= 0.025, fmt("rho=1 mean %.4f outside 0.130 +/- 0.025", m1));
    v.require(welch.p_greater < 1.0 - kConfidence,
              fmt("Welch p=%.3g not below %.2f", welch.p_greater, 1.0 - kConfidence));
    v.detail += (v.detail.empty() ? "" : "; ") +
                fmt("rho=0 %.4f, rho=1 %.4f, Welch p=%.2g", m0, m1, welch.p_greater);
    return v;
}

Verdict rewiring_k10() {
    const Cells& c = rewiring_cells();
    const double m0 = c.at(0.2, 0.01, 10, 0.0).summary.mean_error;
    const double m01 = c.at(0.2, 0.01, 10, 0.1).summary.mean_error;
    const double m1 = c.at(0.2, 0.01, 10, 1.0).summary.mean_error;
    Verdict v;
    v.require(std::abs(m0 - 0.027) <= 0.015, fmt("rho=0 mean %.4f outside 0.027 +/- 0.015", m0));
    v.require(std::abs(m01 - 0.085) <= 0.02, fmt("rho=0.1 mean %.4f outside 0.085 +/- 0.02", m01));
    v.require(std::abs(m1 - 0.162) <= 0.03, fmt("rho=1 mean %.4f outside 0.162 +/- 0.03", m1));
    v.require(m0 < m01 && m01 < m1, "means not strictly increasing");
    v.detail += (v.detail.empty() ? "" : "; ") +
                fmt("rho=0 %.4f, rho=0.1 %.4f, rho=1 %.4f", m0, m01, m1);
    return v;
}

Verdict monotone_in_rho() {
    const Cells& c = rewiring_cells();
    const double rhos[] = {0.0, 0.1, 0.5, 1.0};
    std::vector<double> means;
    for (double rho : rhos) means.push_back(c.at(0.2, 0.01, 10, rho).summary.mean_error);
    Verdict v;
    for (std::size_t i = 1; i < means.size(); ++i) {
        v.require(means[i] >= means[i - 1] - 0.005,
                  fmt("rho=%g (%.4f) below rho=%g (%.4f) by more than 0.005", rhos[i], means[i],
                      rhos[i - 1], means[i - 1]));
    }
    v.detail += (v.detail.empty() ? "" : "; ") +
                fmt("means %.4f %.4f %.4f %.4f", means[0], means[1], means[2], means[3]);
    return v;
}

Verdict connectivity_vs_accuracy() {
    std::vector<std::size_t> ks;
    for (std::size_t k = 4; k <= 20; k += 2) ks.push_back(k);
    std::vector<std::size_t> all = ks;
    all.push_back(99);
    const Cells cells(all, {0.0}, {0.05}, {0.3});
    std::size_t best = ks.front();
    for (std::size_t k : ks) {
        if (cells.at(0.3, 0.05, k, 0.0).summary.mean_error <
            cells.at(0.3, 0.05, best, 0.0).summary.mean_error)
            best = k;
    }
    const auto& low = cells.at(0.3, 0.05, best, 0.0);
    const auto& full = cells.at(0.3, 0.05, 99, 0.0);
    const auto welch = test::welch_greater(Cells::errors(full), Cells::errors(low));
    Verdict v;
    v.require(low.summary.mean_error < full.summary.mean_error, "best k not lower than k=99");
    v.require(welch.p_greater < 1.0 - kConfidence, fmt("Welch p=%.3g", welch.p_greater));
    v.detail += (v.detail.empty() ? "" : "; ") +
                fmt("best k=%zu mean %.4f vs k=99 %.4f, Welch p=%.2g", best, low.summary.mean_error,
                    full.summary.mean_error, welch.p_greater);
    return v;
}

Verdict convergence_time_in_k() {
    const std::vector<std::size_t> ks = {4, 10, 50, 99};
    const Cells cells(ks, {0.0}, {0.1}, {0.0});
    std::vector<double> steps;
    for (std::size_t k : ks) steps.push_back(cells.at(0.0, 0.1, k, 0.0).summary.mean_steps);
    Verdict v;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        v.require(steps[i] <= steps[i - 1] * 1.05,
                  fmt("k=%zu steps %.1f exceed k=%zu steps %.1f by more than 5%%", ks[i], steps[i],
                      ks[i - 1], steps[i - 1]));
    }
    v.detail += (v.detail.empty() ? "" : "; ") +
                fmt("mean steps %.1f %.1f %.1f %.1f", steps[0], steps[1], steps[2], steps[3]);
    return v;
}

Verdict property_suites() {
    using TV = TruthValue;
    const TV vals[3] = {TV::False, TV::Unknown, TV::True};
    Verdict v;

    bool laws = true;
    for (TV a : vals) {
        laws = laws && fuse_value(a, a) == a && fuse_value(TV::Unknown, a) == a;
        for (TV b : vals) laws = laws && fuse_value(a, b) == fuse_value(b, a);
    }
    laws = laws && fuse_value(fuse_value(TV::False, TV::True), TV::True) == TV::True &&
           fuse_value(TV::False, fuse_value(TV::True, TV::True)) == TV::Unknown;
    v.require(laws, "fusion algebra laws");

    // Noise-free safety and absorbing consensus over full runs.
    bool safe = true, absorbing = true;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SimulationConfig c;
        c.k = seed % 2 ? 2 : 99;
        c.rho = seed % 4 < 2 ? 0.0 : 0.5;
        c.evidence_rate = seed % 3 ? 0.1 : 1.0;
        c.seed = seed;
        Rng rng(seed);
        RunState s = init_run(c, rng);
        while (s.t < c.max_steps && s.unchanged_interactions < c.convergence_window) {
            step(s, c, rng);
            for (const Belief& b : s.beliefs)
                for (std::size_t i = 0; i < b.size(); ++i) safe = safe && b[i] != TV::False;
        }
        const bool consensus =
            std::all_of(s.beliefs.begin(), s.beliefs.end(),
                        [&](const Belief& b) { return b == s.beliefs.front() && b.fully_certain(); });
        if (consensus) {
            const auto frozen = s.beliefs;
            SimulationConfig longer = c;
            longer.max_steps = s.t + 500;
            for (int i = 0; i < 500; ++i) step(s, longer, rng);
            absorbing = absorbing && s.beliefs == frozen;
        }
    }
    v.require(safe, "noise-free safety violated");
    v.require(absorbing, "consensus not absorbing");

    // Small-world structure over 1000 random parameter sets and seeds.
    Rng meta(31337);
    std::size_t structural_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        NetworkParams p;
        p.m = 4 + uniform_index(meta, 120);
        const std::size_t max_half = (p.m - 2) / 2;
        p.k = 2 * (1 + uniform_index(meta, max_half));
        if (p.k >= p.m - 1 || bernoulli(meta, 0.05)) p.k = p.m - 1;
        p.rho = bernoulli(meta, 0.3) ? 0.0 : uniform01(meta);
        Rng rng(meta());
        const Network net = generate(p, rng);
        bool ok = validate(net, p).empty();
        if (p.rho == 0.0 && !p.complete()) ok = ok && net == ring_lattice(p.m, p.k);
        structural_failures += !ok;
    }
    v.require(structural_failures == 0, fmt("%zu structural failures", structural_failures));

    // Determinism and order-independent aggregation.
    SweepSpec spec;
    spec.base.num_agents = 30;
    spec.base.num_propositions = 20;
    spec.base.max_steps = 2000;
    spec.k_values = {4, 29};
    spec.rho_values = {0.0, 0.3};
    spec.r_values = {0.05};
    spec.epsilon_values = {0.2};
    spec.runs_per_cell = 10;
    auto csv = [&](unsigned threads) {
        const auto outcomes = run_sweep(spec, threads);
        std::ostringstream a, b;
        write_raw_csv(records_of(outcomes), a);
        write_summary_csv(summaries_of(outcomes), b);
        return a.str() + b.str();
    };
    v.require(csv(1) == csv(4), "sweep output not byte-identical");

    const auto outcomes = run_sweep(spec, 1);
    auto records = records_of(outcomes);
    std::reverse(records.begin(), records.end());
    std::swap(records[3], records[17]);
    auto expected = summaries_of(outcomes);
    std::sort(expected.begin(), expected.end(),
              [](const CellSummary& a, const CellSummary& b) { return a.cell < b.cell; });
    v.require(aggregate(records) == expected, "aggregation depends on order");

    if (v.pass) v.detail = "algebra, safety, absorbing, 1000 graphs, determinism, aggregation";
    return v;
}

Verdict hand_oracles() {
    using TV = TruthValue;
    Verdict v;
    const std::vector<Belief> pop = {Belief{TV::True, TV::False}, Belief{TV::Unknown, TV::True}};
    const double err = average_error(pop, WorldState({true, true}));
    v.require(err == 0.375, fmt("average error %.17g != 0.375", err));
    const std::vector<double> a = {1, 2, 3, 4, 5}, b = {0, 10}, c(5, 2.5);
    v.require(percentile(a, 50) == 3.0, "median of 1..5");
    v.require(percentile(b, 10) == 1.0, "p10 of {0,10}");
    v.require(percentile(c, 37) == 2.5 && percentile(c, 90) == 2.5, "constant list");
    if (v.pass) v.detail = "0.375, 3, 1, constant";
    return v;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria = {
        {"1  fusion table exactness", fusion_table},
        {"2  noise-free learning", noise_free_learning},
        {"3  random-evidence floor", random_evidence_floor},
        {"4  rewiring degradation, k=2", rewiring_k2},
        {"5  rewiring degradation, k=10", rewiring_k10},
        {"6  monotone degradation in rho", monotone_in_rho},
        {"7  connectivity vs accuracy under noise", connectivity_vs_accuracy},
        {"8  convergence time non-increasing in k", convergence_time_in_k},
        {"9  property suites", property_suites},
        {"10 hand-oracle checks", hand_oracles},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Verdict v = c.check();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-42s %6.1fs  %s\n", v.pass ? "PASS" : "FAIL", c.name, secs,
                    v.detail.c_str());
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
