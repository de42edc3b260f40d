#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tribic/core.hpp"
#include "tribic/fca.hpp"

namespace tribic::scaling {

// Convex value range used as a scale condition.
struct Interval {
    double lo;
    double hi;

    bool contains(double w) const { return lo <= w && w <= hi; }
    double length() const { return hi - lo; }

    bool operator==(const Interval&) const = default;
};

enum class ScaleMode {
    interordinal_observed,  // intervals over the observed distinct values
    interordinal_dense,     // intervals over every integer in [min, max]
    tolerance_blocks,       // maximal pairwise-similar value ranges for a theta
};

struct DenseParams {
    double min_value;    // r
    double max_value;    // q
    double scale_value;  // s = q - r
};

// Half-open index range into a condition list.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool empty() const { return begin >= end; }
    std::size_t size() const { return empty() ? 0 : end - begin; }
};

// An ordered list of scale conditions. Both endpoints are non-decreasing
// along the list, which keeps condition lookups binary-searchable and
// makes every modus a contiguous index range.
struct ScaleDimension {
    ScaleMode mode;
    std::vector<Interval> conditions;
    std::optional<Theta> theta;        // set for tolerance_blocks
    std::optional<DenseParams> dense;  // set for interordinal_dense

    std::size_t size() const { return conditions.size(); }

    // Indices of all conditions whose interval covers [lo, hi].
    IndexRange conditions_covering(double lo, double hi) const;

    // Conditions containing a single value.
    IndexRange conditions_containing(double w) const { return conditions_covering(w, w); }
};

// Interordinal scale over W: all down-sets [min,w] and up-sets [w,max],
// ordered as down-sets by upper endpoint then up-sets by lower endpoint.
// Observed mode uses the distinct values themselves (2|W|-1 conditions);
// dense mode uses every integer between min and max (2s+1 conditions)
// and requires integer data.
ScaleDimension interordinal_scale(const std::vector<double>& w, ScaleMode mode);

// Maximal blocks of pairwise-similar values, renamed as the interval
// spanned by their smallest and largest member, ordered by lower
// endpoint. No block contains another.
ScaleDimension tolerance_blocks(const std::vector<double>& w, Theta theta);

// Dyadic context of one condition: (g, m) incident iff the cell value
// falls inside the interval.
fca::FormalContext block_context(const NumericalDataset& d, Interval block);

// Ternary incidence (g, m, c) iff value(g, m) lies in condition c.
// Condition slices are produced on demand; nothing is materialized.
class TriadicContext {
public:
    TriadicContext(const NumericalDataset& d, ScaleDimension scale);

    const NumericalDataset& dataset() const { return *dataset_; }
    const ScaleDimension& scale() const { return scale_; }

    std::size_t object_count() const { return dataset_->object_count(); }
    std::size_t attribute_count() const { return dataset_->attribute_count(); }
    std::size_t condition_count() const { return scale_.conditions.size(); }

    bool incident(Index g, Index m, Index c) const {
        return scale_.conditions[c].contains(dataset_->value(g, m));
    }

    fca::FormalContext condition_slice(Index c) const {
        return block_context(*dataset_, scale_.conditions[c]);
    }

    std::size_t cross_count() const;

private:
    const NumericalDataset* dataset_;  // non-owning; outlives the context
    ScaleDimension scale_;
};

TriadicContext build_triadic_context(const NumericalDataset& d, ScaleDimension scale);

// |Y| / (|G| * |M| * |C|).
double context_density(const TriadicContext& t);

}  // namespace tribic::scaling
