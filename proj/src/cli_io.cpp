#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "tribic/cli.hpp"

namespace tribic::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cell));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    cells.push_back(trim(cell));
    return cells;
}

double parse_cell(const std::string& text, const std::string& row, const std::string& column) {
    auto fail = [&](const char* why) -> double {
        throw input_error("row '" + row + "', column '" + column + "': " + why +
                          (text.empty() ? "" : " ('" + text + "')"));
    };
    if (text.empty()) return fail("blank cell");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return fail("not a number");
    if (!std::isfinite(v)) return fail("value must be finite");
    return v;
}

}  // namespace

NumericalDataset parse_csv(std::istream& in, const std::string& source_name) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw input_error(source_name + ": empty CSV input");

    std::vector<std::string> header = split_cells(lines[0]);
    if (header.size() < 2)
        throw input_error(source_name + ": header needs an ID cell plus attribute names");
    std::vector<std::string> attribute_ids(header.begin() + 1, header.end());
    for (std::size_t m = 0; m < attribute_ids.size(); ++m)
        if (attribute_ids[m].empty())
            throw input_error(source_name + ": blank attribute name in header column " +
                              std::to_string(m + 2));

    std::vector<std::string> object_ids;
    std::vector<double> values;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        std::vector<std::string> cells = split_cells(lines[r]);
        if (cells.size() == 1 && cells[0].empty())
            throw input_error(source_name + ": line " + std::to_string(r + 1) + " is empty");
        if (cells[0].empty())
            throw input_error(source_name + ": line " + std::to_string(r + 1) +
                              " has a blank object name");
        if (cells.size() != attribute_ids.size() + 1)
            throw input_error(source_name + ": row '" + cells[0] + "' has " +
                              std::to_string(cells.size() - 1) + " cells, expected " +
                              std::to_string(attribute_ids.size()));
        object_ids.push_back(cells[0]);
        for (std::size_t m = 0; m < attribute_ids.size(); ++m)
            values.push_back(parse_cell(cells[m + 1], cells[0], attribute_ids[m]));
    }
    if (object_ids.empty()) throw input_error(source_name + ": no data rows");

    return NumericalDataset(std::move(object_ids), std::move(attribute_ids), std::move(values));
}

NumericalDataset ingest_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_csv(in, path);
}

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        if (back == v) break;
    }
    return buf;
}

std::string emit_csv(const NumericalDataset& d) {
    std::ostringstream out;
    out << "id";
    for (const auto& m : d.attribute_ids()) out << ',' << m;
    out << '\n';
    for (Index g = 0; g < d.object_count(); ++g) {
        out << d.object_ids()[g];
        for (Index m = 0; m < d.attribute_count(); ++m)
            out << ',' << format_number(d.value(g, m));
        out << '\n';
    }
    return out.str();
}

NumericalDataset synthetic_dataset(std::size_t rows, std::size_t cols, double vmax,
                                   std::uint64_t seed, std::size_t planted) {
    if (rows == 0 || cols == 0) throw input_error("synthetic dataset needs rows > 0 and cols > 0");
    if (!(vmax >= 0.0) || !std::isfinite(vmax)) throw input_error("vmax must be non-negative");

    // mt19937_64 plus modulo keeps the stream identical across library
    // implementations, unlike std distributions.
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t n) -> std::uint64_t { return n ? rng() % n : 0; };

    std::uint64_t top = static_cast<std::uint64_t>(std::floor(vmax));
    std::vector<double> values(rows * cols);
    for (auto& v : values) v = static_cast<double>(draw(top + 1));

    for (std::size_t p = 0; p < planted; ++p) {
        std::size_t h = std::min(rows, 2 + static_cast<std::size_t>(draw(std::max<std::uint64_t>(1, rows / 4))));
        std::size_t w = std::min(cols, 2 + static_cast<std::size_t>(draw(std::max<std::uint64_t>(1, cols / 4))));
        std::size_t r0 = static_cast<std::size_t>(draw(rows - h + 1));
        std::size_t c0 = static_cast<std::size_t>(draw(cols - w + 1));
        std::uint64_t base = draw(top + 1);
        std::uint64_t band = std::max<std::uint64_t>(1, top / 50);
        for (std::size_t r = r0; r < r0 + h; ++r)
            for (std::size_t c = c0; c < c0 + w; ++c)
                values[r * cols + c] = static_cast<double>(std::min(top, base + draw(band)));
    }

    std::vector<std::string> object_ids(rows), attribute_ids(cols);
    for (std::size_t r = 0; r < rows; ++r) object_ids[r] = "g" + std::to_string(r + 1);
    for (std::size_t c = 0; c < cols; ++c) attribute_ids[c] = "m" + std::to_string(c + 1);
    return NumericalDataset(std::move(object_ids), std::move(attribute_ids), std::move(values));
}

std::string render_biclusters_csv(const NumericalDataset& d,
                                  const std::vector<tca::ThetaAnnotatedBicluster>& biclusters) {
    std::ostringstream out;
    out << "extent,intent,theta,value_min,value_max\n";
    for (const auto& b : biclusters) {
        bool first = true;
        for (Index g : b.bicluster.extent) {
            out << (first ? "" : "|") << d.object_ids()[g];
            first = false;
        }
        out << ',';
        first = true;
        for (Index m : b.bicluster.intent) {
            out << (first ? "" : "|") << d.attribute_ids()[m];
            first = false;
        }
        out << ',' << format_number(b.theta.value) << ',' << format_number(b.value_range.lo)
            << ',' << format_number(b.value_range.hi) << '\n';
    }
    return out.str();
}

const char* const kMetricsHeader =
    "theta,blocks,density,dyadic_concepts,biclusters,elapsed_ms,"
    "phase_mine_ms,phase_modus_ms,phase_maxcheck_ms";

namespace {

double to_ms(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double, std::milli>(ns).count();
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

MetricsRow metrics_from_report(const NumericalDataset& d, double theta,
                               const trimax::MiningReport& report) {
    scaling::TriadicContext ctx(
        d, scaling::tolerance_blocks(distinct_values(d), Theta(theta)));
    MetricsRow row;
    row.theta = theta;
    row.blocks = report.blocks;
    row.density = scaling::context_density(ctx);
    row.dyadic_concepts = report.dyadic_concepts_generated;
    row.biclusters = report.biclusters.size();
    row.elapsed_ms = to_ms(report.elapsed);
    row.phase_mine_ms = to_ms(report.phases.concept_mining);
    row.phase_modus_ms = to_ms(report.phases.modus);
    row.phase_maxcheck_ms = to_ms(report.phases.maximality);
    return row;
}

std::string render_metrics_csv(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    out << kMetricsHeader << '\n';
    for (const MetricsRow& r : rows) {
        out << format_number(r.theta) << ',' << r.blocks << ',' << format_number(r.density) << ','
            << r.dyadic_concepts << ',' << r.biclusters << ',' << fixed3(r.elapsed_ms) << ','
            << fixed3(r.phase_mine_ms) << ',' << fixed3(r.phase_modus_ms) << ','
            << fixed3(r.phase_maxcheck_ms) << '\n';
    }
    return out.str();
}

}  // namespace tribic::cli
