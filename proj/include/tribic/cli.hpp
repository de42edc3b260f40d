#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tribic/core.hpp"
#include "tribic/scaling.hpp"
#include "tribic/tca.hpp"
#include "tribic/trimax.hpp"

namespace tribic::cli {

enum class OutputFormat { json, csv };

// Everything a single invocation needs, collected by the flag parser.
struct RunConfig {
    std::string input_path;
    std::string command;
    std::optional<double> theta;
    scaling::ScaleMode scale_mode = scaling::ScaleMode::interordinal_observed;
    trimax::MiningConstraints constraints;
    std::optional<std::size_t> min_modus;
    unsigned threads = 1;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 0;
    std::size_t rows = 100;
    std::size_t cols = 10;
    double vmax = 100.0;
    std::size_t planted = 0;
    std::size_t steps = 10;
};

// CSV ingestion: first row is attribute names after a leading ID cell,
// first column is object names, every other cell a number. Errors name
// the offending row and column.
NumericalDataset ingest_csv(const std::string& path);
NumericalDataset parse_csv(std::istream& in, const std::string& source_name);

// Inverse of parse_csv up to number formatting; parse(emit(d)) == d.
std::string emit_csv(const NumericalDataset& d);

// Seeded uniform integer matrix in [0, vmax], optionally overwritten
// with `planted` rectangles of near-constant values. The seed fully
// determines the result on every platform.
NumericalDataset synthetic_dataset(std::size_t rows, std::size_t cols, double vmax,
                                   std::uint64_t seed, std::size_t planted = 0);

// Shortest decimal text that reads back as the same double; integral
// values print without a fractional part.
std::string format_number(double v);

std::string render_biclusters_csv(const NumericalDataset& d,
                                  const std::vector<tca::ThetaAnnotatedBicluster>& biclusters);

struct MetricsRow {
    double theta = 0.0;
    std::size_t blocks = 0;
    double density = 0.0;
    std::size_t dyadic_concepts = 0;
    std::size_t biclusters = 0;
    double elapsed_ms = 0.0;
    double phase_mine_ms = 0.0;
    double phase_modus_ms = 0.0;
    double phase_maxcheck_ms = 0.0;
};

extern const char* const kMetricsHeader;

std::string render_metrics_csv(const std::vector<MetricsRow>& rows);

MetricsRow metrics_from_report(const NumericalDataset& d, double theta,
                               const trimax::MiningReport& report);

// Entry point behind main(): parses args (program name excluded),
// executes, writes to the given streams. Returns 0 on success, 1 for
// input errors, 2 for internal invariant violations.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tribic::cli
