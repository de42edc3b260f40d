#include "tribic/scaling.hpp"

#include <algorithm>
#include <cmath>

namespace tribic::scaling {

namespace {

void require_sorted_values(const std::vector<double>& w, const char* who) {
    if (w.empty()) throw input_error(std::string(who) + ": value set must be non-empty");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!(w[i - 1] < w[i]))
            throw input_error(std::string(who) + ": values must be strictly increasing");
}

void check_monotone_endpoints(const ScaleDimension& s) {
    for (std::size_t i = 1; i < s.conditions.size(); ++i) {
        if (s.conditions[i - 1].lo > s.conditions[i].lo ||
            s.conditions[i - 1].hi > s.conditions[i].hi)
            throw internal_error("scale conditions are not endpoint-monotone");
    }
}

}  // namespace

IndexRange ScaleDimension::conditions_covering(double lo, double hi) const {
    // conditions with c.lo <= lo form a prefix, those with c.hi >= hi a
    // suffix; the covering set is their intersection.
    std::size_t prefix_end = static_cast<std::size_t>(
        std::upper_bound(conditions.begin(), conditions.end(), lo,
                         [](double v, const Interval& c) { return v < c.lo; }) -
        conditions.begin());
    std::size_t suffix_begin = static_cast<std::size_t>(
        std::lower_bound(conditions.begin(), conditions.end(), hi,
                         [](const Interval& c, double v) { return c.hi < v; }) -
        conditions.begin());
    if (suffix_begin >= prefix_end) return {0, 0};
    return {suffix_begin, prefix_end};
}

ScaleDimension interordinal_scale(const std::vector<double>& w, ScaleMode mode) {
    require_sorted_values(w, "interordinal_scale");
    if (mode == ScaleMode::tolerance_blocks)
        throw input_error("interordinal_scale: mode must be observed or dense");

    ScaleDimension out;
    out.mode = mode;

    if (mode == ScaleMode::interordinal_observed) {
        double lo = w.front(), hi = w.back();
        for (double v : w) out.conditions.push_back({lo, v});
        for (double v : w)
            if (v != lo) out.conditions.push_back({v, hi});
    } else {
        for (double v : w)
            if (v != std::floor(v))
                throw input_error("dense interordinal scale requires integer data");
        double r = w.front(), q = w.back();
        double s = q - r;
        for (double v = r; v <= q; v += 1.0) out.conditions.push_back({r, v});
        for (double v = r + 1.0; v <= q; v += 1.0) out.conditions.push_back({v, q});
        out.dense = DenseParams{r, q, s};
    }
    check_monotone_endpoints(out);
    return out;
}

ScaleDimension tolerance_blocks(const std::vector<double>& w, Theta theta) {
    require_sorted_values(w, "tolerance_blocks");

    ScaleDimension out;
    out.mode = ScaleMode::tolerance_blocks;
    out.theta = theta;

    // Two-pointer sweep: reach(a) = largest b with w[b] - w[a] <= theta.
    // The block starting at a is maximal iff its reach strictly exceeds
    // the previous block's, otherwise the previous one contains it.
    std::size_t reach = 0;
    std::size_t prev_reach = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
        if (reach < a) reach = a;
        while (reach + 1 < w.size() && w[reach + 1] - w[a] <= theta.value) ++reach;
        if (a == 0 || reach > prev_reach) out.conditions.push_back({w[a], w[reach]});
        prev_reach = reach;
    }
    check_monotone_endpoints(out);
    return out;
}

fca::FormalContext block_context(const NumericalDataset& d, Interval block) {
    fca::FormalContext ctx(d.object_count(), d.attribute_count());
    for (Index g = 0; g < d.object_count(); ++g)
        for (Index m = 0; m < d.attribute_count(); ++m)
            if (block.contains(d.value(g, m))) ctx.set(g, m);
    return ctx;
}

TriadicContext::TriadicContext(const NumericalDataset& d, ScaleDimension scale)
    : dataset_(&d), scale_(std::move(scale)) {
    check_monotone_endpoints(scale_);
}

std::size_t TriadicContext::cross_count() const {
    std::size_t n = 0;
    for (Index g = 0; g < object_count(); ++g)
        for (Index m = 0; m < attribute_count(); ++m)
            n += scale_.conditions_containing(dataset_->value(g, m)).size();
    return n;
}

TriadicContext build_triadic_context(const NumericalDataset& d, ScaleDimension scale) {
    return TriadicContext(d, std::move(scale));
}

double context_density(const TriadicContext& t) {
    double cells = static_cast<double>(t.object_count()) *
                   static_cast<double>(t.attribute_count()) *
                   static_cast<double>(t.condition_count());
    if (cells == 0.0) return 0.0;
    return static_cast<double>(t.cross_count()) / cells;
}

}  // namespace tribic::scaling
