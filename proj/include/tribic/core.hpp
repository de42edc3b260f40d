#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tribic/errors.hpp"

namespace tribic {

using Index = std::uint32_t;

// Sorted ascending, no duplicates.
using IndexSet = std::vector<Index>;

// Similarity parameter: two values are similar when they differ by at
// most theta. Any non-negative finite value is accepted, integer or not.
struct Theta {
    double value;

    explicit Theta(double v);
};

// Complete object x attribute table of finite numbers. Rows are objects,
// columns are attributes; every cell holds exactly one value.
class NumericalDataset {
public:
    NumericalDataset(std::vector<std::string> object_ids,
                     std::vector<std::string> attribute_ids,
                     std::vector<double> values);  // row-major, |G|*|M| entries

    std::size_t object_count() const { return object_ids_.size(); }
    std::size_t attribute_count() const { return attribute_ids_.size(); }

    double value(Index g, Index m) const { return values_[g * attribute_count() + m]; }

    const std::vector<std::string>& object_ids() const { return object_ids_; }
    const std::vector<std::string>& attribute_ids() const { return attribute_ids_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<std::string> object_ids_;
    std::vector<std::string> attribute_ids_;
    std::vector<double> values_;
};

// A rectangle of the table up to row/column permutation: a set of object
// indices paired with a set of attribute indices.
struct Bicluster {
    IndexSet extent;
    IndexSet intent;

    bool operator==(const Bicluster&) const = default;
    bool operator<(const Bicluster& o) const {
        return extent != o.extent ? extent < o.extent : intent < o.intent;
    }
};

// The set W of distinct cell values, strictly increasing.
std::vector<double> distinct_values(const NumericalDataset& d);

bool is_similar(double w1, double w2, Theta theta);

// Min and max cell value over extent x intent. Requires both non-empty
// and in bounds.
std::pair<double, double> cell_range(const NumericalDataset& d, const Bicluster& b);

// True when all cells of the rectangle are pairwise similar, i.e. the
// cell range spans at most theta. Vacuously true for an empty rectangle.
bool is_similar_bicluster(const NumericalDataset& d, const Bicluster& b, Theta theta);

// True when no single object or attribute can be added without breaking
// similarity. Requires is_similar_bicluster(d, b, theta).
bool is_maximal_similar_bicluster(const NumericalDataset& d, const Bicluster& b, Theta theta);

}  // namespace tribic
