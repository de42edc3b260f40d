#include "tribic/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace tribic {

Theta::Theta(double v) : value(v) {
    if (!std::isfinite(v) || v < 0.0)
        throw input_error("theta must be a finite non-negative number");
}

NumericalDataset::NumericalDataset(std::vector<std::string> object_ids,
                                   std::vector<std::string> attribute_ids,
                                   std::vector<double> values)
    : object_ids_(std::move(object_ids)),
      attribute_ids_(std::move(attribute_ids)),
      values_(std::move(values)) {
    if (object_ids_.empty()) throw input_error("dataset needs at least one object");
    if (attribute_ids_.empty()) throw input_error("dataset needs at least one attribute");
    if (values_.size() != object_ids_.size() * attribute_ids_.size())
        throw input_error("dataset matrix is incomplete: expected " +
                          std::to_string(object_ids_.size() * attribute_ids_.size()) +
                          " cells, got " + std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw input_error("dataset cells must be finite numbers");
    auto check_unique = [](const std::vector<std::string>& ids, const char* kind) {
        std::set<std::string> seen;
        for (const auto& id : ids)
            if (!seen.insert(id).second)
                throw input_error(std::string("duplicate ") + kind + " label: " + id);
    };
    check_unique(object_ids_, "object");
    check_unique(attribute_ids_, "attribute");
}

std::vector<double> distinct_values(const NumericalDataset& d) {
    std::vector<double> w(d.values());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

bool is_similar(double w1, double w2, Theta theta) {
    return std::abs(w1 - w2) <= theta.value;
}

namespace {

void check_bounds(const NumericalDataset& d, const Bicluster& b) {
    for (Index g : b.extent)
        if (g >= d.object_count()) throw input_error("bicluster object index out of bounds");
    for (Index m : b.intent)
        if (m >= d.attribute_count()) throw input_error("bicluster attribute index out of bounds");
}

}  // namespace

std::pair<double, double> cell_range(const NumericalDataset& d, const Bicluster& b) {
    check_bounds(d, b);
    if (b.extent.empty() || b.intent.empty())
        throw input_error("cell_range needs a non-empty rectangle");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Index g : b.extent)
        for (Index m : b.intent) {
            double v = d.value(g, m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    return {lo, hi};
}

bool is_similar_bicluster(const NumericalDataset& d, const Bicluster& b, Theta theta) {
    check_bounds(d, b);
    if (b.extent.empty() || b.intent.empty()) return true;
    auto [lo, hi] = cell_range(d, b);
    return hi - lo <= theta.value;
}

bool is_maximal_similar_bicluster(const NumericalDataset& d, const Bicluster& b, Theta theta) {
    if (!is_similar_bicluster(d, b, theta))
        throw input_error("is_maximal_similar_bicluster requires a similar-values bicluster");
    auto extended = [&](Bicluster candidate) {
        return is_similar_bicluster(d, candidate, theta);
    };
    for (Index g = 0; g < d.object_count(); ++g) {
        if (std::binary_search(b.extent.begin(), b.extent.end(), g)) continue;
        Bicluster grown = b;
        grown.extent.insert(std::lower_bound(grown.extent.begin(), grown.extent.end(), g), g);
        if (extended(std::move(grown))) return false;
    }
    for (Index m = 0; m < d.attribute_count(); ++m) {
        if (std::binary_search(b.intent.begin(), b.intent.end(), m)) continue;
        Bicluster grown = b;
        grown.intent.insert(std::lower_bound(grown.intent.begin(), grown.intent.end(), m), m);
        if (extended(std::move(grown))) return false;
    }
    return true;
}

}  // namespace tribic
