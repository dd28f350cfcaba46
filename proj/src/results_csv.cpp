#include "colearn/harness.hpp"

#include <algorithm>
#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <tuple>

namespace colearn {

const char* const kRawCsvHeader = "epsilon,r,k,rho,run_index,seed,converged,steps,final_avg_error";
const char* const kSummaryCsvHeader =
    "epsilon,r,k,rho,runs,fraction_converged,mean_error,p10_error,p90_error,mean_steps,"
    "p10_steps,p90_steps";

namespace {

auto row_key(const CellParams& c) { return std::tie(c.epsilon, c.r, c.k, c.rho); }

} // namespace

void write_raw_csv(std::span<const RunRecord> records, std::ostream& out) {
    std::vector<const RunRecord*> rows;
    rows.reserve(records.size());
    for (const RunRecord& r : records) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const RunRecord* a, const RunRecord* b) {
        return std::tuple_cat(row_key(a->cell), std::tie(a->run_index)) <
               std::tuple_cat(row_key(b->cell), std::tie(b->run_index));
    });

    out << kRawCsvHeader << '\n';
    char buf[256];
    for (const RunRecord* r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%zu,%.6f,%zu,%" PRIu64 ",%s,%zu,%.6f\n",
                      r->cell.epsilon, r->cell.r, r->cell.k, r->cell.rho, r->run_index, r->seed,
                      r->result.converged ? "true" : "false", r->result.steps,
                      r->result.final_average_error);
        out << buf;
    }
}

void write_summary_csv(std::span<const CellSummary> summaries, std::ostream& out) {
    std::vector<const CellSummary*> rows;
    rows.reserve(summaries.size());
    for (const CellSummary& s : summaries) rows.push_back(&s);
    std::sort(rows.begin(), rows.end(), [](const CellSummary* a, const CellSummary* b) {
        return row_key(a->cell) < row_key(b->cell);
    });

    out << kSummaryCsvHeader << '\n';
    char buf[512];
    for (const CellSummary* s : rows) {
        std::snprintf(buf, sizeof buf,
                      "%.6f,%.6f,%zu,%.6f,%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      s->cell.epsilon, s->cell.r, s->cell.k, s->cell.rho, s->runs,
                      s->fraction_converged, s->mean_error, s->p10_error, s->p90_error,
                      s->mean_steps, s->p10_steps, s->p90_steps);
        out << buf;
    }
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    }
    writer(out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace

void write_results(std::span<const CellSummary> summaries, std::span<const RunRecord> raw,
                   const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw IoError("cannot create directory " + output_dir.string() + ": " + ec.message());
    write_file(output_dir / "runs.csv", [&](std::ostream& out) { write_raw_csv(raw, out); });
    write_file(output_dir / "summary.csv",
               [&](std::ostream& out) { write_summary_csv(summaries, out); });
}

} // namespace colearn
