#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colearn/engine.hpp"

namespace colearn {

// Raised for any filesystem failure; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CellParams {
    double epsilon = 0.0;
    double r = 0.0;
    std::size_t k = 0;
    double rho = 0.0;

    std::string describe() const;

    friend auto operator<=>(const CellParams&, const CellParams&) = default;
};

struct SweepSpec {
    SimulationConfig base;  // agents, props, max_steps, window, trajectory flag
    std::vector<std::size_t> k_values;
    std::vector<double> rho_values;
    std::vector<double> r_values;
    std::vector<double> epsilon_values;
    std::size_t runs_per_cell = 100;
    std::uint64_t base_seed = 1;

    // Cells in cross-product order: epsilon, then r, then k, then rho, each
    // in list order.
    std::vector<CellParams> cells() const;

    // Config for one run of one cell, seed included.
    SimulationConfig config_for(const CellParams& cell, std::size_t run_index) const;

    // Throws std::invalid_argument describing the first offending cell.
    void check() const;
};

// Stable hash of (base_seed, cell parameters, run_index).
std::uint64_t derive_seed(std::uint64_t base_seed, const CellParams& cell, std::size_t run_index);

struct RunRecord {
    CellParams cell;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    RunResult result;
};

struct CellSummary {
    CellParams cell;
    std::size_t runs = 0;
    double fraction_converged = 0.0;
    double mean_error = 0.0;
    double p10_error = 0.0;
    double p90_error = 0.0;
    double mean_steps = 0.0;
    double p10_steps = 0.0;
    double p90_steps = 0.0;

    friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

struct CellOutcome {
    CellSummary summary;
    std::vector<RunRecord> runs;  // ordered by run_index
};

// Linear interpolation at rank q/100 * (N-1) of the sorted samples.
double percentile(std::span<const double> samples, double q);

// Sum of the sorted samples divided by N, so the result does not depend on
// input order.
double order_independent_mean(std::span<const double> samples);

// Summary of the runs of one cell. Independent of the order of `runs`.
CellSummary summarize(const CellParams& cell, std::span<const RunRecord> runs);

// Groups records by cell and summarises each, sorted by (epsilon, r, k, rho).
std::vector<CellSummary> aggregate(std::span<const RunRecord> records);

// threads = 0 means hardware concurrency.
std::vector<CellOutcome> run_sweep(const SweepSpec& spec, unsigned threads = 0);

// Column headers for the two CSV outputs.
extern const char* const kRawCsvHeader;
extern const char* const kSummaryCsvHeader;

void write_raw_csv(std::span<const RunRecord> records, std::ostream& out);
void write_summary_csv(std::span<const CellSummary> summaries, std::ostream& out);

// Writes <dir>/runs.csv and <dir>/summary.csv, creating dir if needed. Rows
// are sorted by (epsilon, r, k, rho, run_index).
void write_results(std::span<const CellSummary> summaries, std::span<const RunRecord> raw,
                   const std::filesystem::path& output_dir);

// Flattens a sweep result for write_results.
std::vector<CellSummary> summaries_of(std::span<const CellOutcome> outcomes);
std::vector<RunRecord> records_of(std::span<const CellOutcome> outcomes);

// Sweep spec files: "key = value" lines, '#' comments. List keys take
// comma-separated values; k_values also accepts start:stop:step ranges.
SweepSpec parse_sweep_spec(std::istream& in, const std::string& source = "<input>");
SweepSpec load_sweep_spec(const std::filesystem::path& path);

} // namespace colearn
