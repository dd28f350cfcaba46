#include "colearn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace colearn {

std::string CellParams::describe() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "epsilon=%g r=%g k=%zu rho=%g", epsilon, r, k, rho);
    return buf;
}

std::vector<CellParams> SweepSpec::cells() const {
    std::vector<CellParams> out;
    out.reserve(epsilon_values.size() * r_values.size() * k_values.size() * rho_values.size());
    for (double eps : epsilon_values)
        for (double r : r_values)
            for (std::size_t k : k_values)
                for (double rho : rho_values) out.push_back({eps, r, k, rho});
    return out;
}

SimulationConfig SweepSpec::config_for(const CellParams& cell, std::size_t run_index) const {
    SimulationConfig c = base;
    c.k = cell.k;
    c.rho = cell.rho;
    c.evidence_rate = cell.r;
    c.noise = cell.epsilon;
    c.seed = derive_seed(base_seed, cell, run_index);
    return c;
}

void SweepSpec::check() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("sweep spec: " + what); };
    if (k_values.empty()) fail("k_values is empty");
    if (rho_values.empty()) fail("rho_values is empty");
    if (r_values.empty()) fail("r_values is empty");
    if (epsilon_values.empty()) fail("epsilon_values is empty");
    if (runs_per_cell < 1) fail("runs_per_cell must be >= 1");
    for (const CellParams& cell : cells()) {
        try {
            config_for(cell, 0).check();
        } catch (const std::invalid_argument& e) {
            fail("cell " + cell.describe() + ": " + e.what());
        }
    }
}

std::uint64_t derive_seed(std::uint64_t base_seed, const CellParams& cell, std::size_t run_index) {
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ static_cast<std::uint64_t>(cell.k));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(cell.rho));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(cell.r));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(cell.epsilon));
    h = mix64(h ^ static_cast<std::uint64_t>(run_index));
    return h;
}

double percentile(std::span<const double> samples, double q) {
    if (samples.empty()) throw std::invalid_argument("percentile: empty sample");
    if (!(q >= 0.0 && q <= 100.0)) {
        throw std::invalid_argument("percentile: q must be in [0, 100], got " + std::to_string(q));
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = q / 100.0 * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(rank);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double order_independent_mean(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("mean: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double x : sorted) sum += x;
    return sum / static_cast<double>(sorted.size());
}

CellSummary summarize(const CellParams& cell, std::span<const RunRecord> runs) {
    if (runs.empty()) throw std::invalid_argument("summarize: no runs for " + cell.describe());
    std::vector<double> errors, steps;
    errors.reserve(runs.size());
    steps.reserve(runs.size());
    std::size_t converged = 0;
    for (const RunRecord& rec : runs) {
        errors.push_back(rec.result.final_average_error);
        steps.push_back(static_cast<double>(rec.result.steps));
        if (rec.result.converged) ++converged;
    }
    CellSummary s;
    s.cell = cell;
    s.runs = runs.size();
    s.fraction_converged = static_cast<double>(converged) / static_cast<double>(runs.size());
    s.mean_error = order_independent_mean(errors);
    s.p10_error = percentile(errors, 10.0);
    s.p90_error = percentile(errors, 90.0);
    s.mean_steps = order_independent_mean(steps);
    s.p10_steps = percentile(steps, 10.0);
    s.p90_steps = percentile(steps, 90.0);
    return s;
}

std::vector<CellSummary> aggregate(std::span<const RunRecord> records) {
    std::map<CellParams, std::vector<RunRecord>> groups;
    for (const RunRecord& rec : records) groups[rec.cell].push_back(rec);
    std::vector<CellSummary> out;
    out.reserve(groups.size());
    for (const auto& [cell, runs] : groups) out.push_back(summarize(cell, runs));
    return out;
}

std::vector<CellOutcome> run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.check();
    const std::vector<CellParams> cells = spec.cells();
    const std::size_t runs = spec.runs_per_cell;
    const std::size_t total = cells.size() * runs;

    std::vector<RunRecord> records(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total) return;
            const CellParams& cell = cells[job / runs];
            const std::size_t run_index = job % runs;
            try {
                const SimulationConfig config = spec.config_for(cell, run_index);
                records[job] = RunRecord{cell, run_index, config.seed, run(config)};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
                return;
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CellOutcome> out;
    out.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellOutcome outcome;
        outcome.runs.assign(records.begin() + static_cast<std::ptrdiff_t>(c * runs),
                            records.begin() + static_cast<std::ptrdiff_t>((c + 1) * runs));
        outcome.summary = summarize(cells[c], outcome.runs);
        out.push_back(std::move(outcome));
    }
    return out;
}

std::vector<CellSummary> summaries_of(std::span<const CellOutcome> outcomes) {
    std::vector<CellSummary> out;
    out.reserve(outcomes.size());
    for (const CellOutcome& o : outcomes) out.push_back(o.summary);
    return out;
}

std::vector<RunRecord> records_of(std::span<const CellOutcome> outcomes) {
    std::vector<RunRecord> out;
    for (const CellOutcome& o : outcomes) out.insert(out.end(), o.runs.begin(), o.runs.end());
    return out;
}

} // namespace colearn
