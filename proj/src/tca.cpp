#include "tribic/tca.hpp"

#include <algorithm>
#include <limits>

#include "tribic/fca.hpp"

namespace tribic::tca {

IndexSet outer_modus(const scaling::TriadicContext& ctx, const Bicluster& b) {
    if (b.extent.empty() || b.intent.empty())
        throw input_error("outer_modus needs a non-empty rectangle");
    auto [lo, hi] = cell_range(ctx.dataset(), b);
    scaling::IndexRange covering = ctx.scale().conditions_covering(lo, hi);
    IndexSet out;
    out.reserve(covering.size());
    for (std::size_t c = covering.begin; c < covering.end; ++c)
        out.push_back(static_cast<Index>(c));
    return out;
}

namespace {

// Flattened dyadic view of a triadic context: objects against
// attribute-condition pairs, pair (m, c) at column m * |C| + c.
fca::FormalContext flatten(const scaling::TriadicContext& ctx) {
    std::size_t conditions = ctx.condition_count();
    fca::FormalContext flat(ctx.object_count(), ctx.attribute_count() * conditions);
    for (Index g = 0; g < ctx.object_count(); ++g)
        for (Index m = 0; m < ctx.attribute_count(); ++m) {
            auto range = ctx.scale().conditions_containing(ctx.dataset().value(g, m));
            for (std::size_t c = range.begin; c < range.end; ++c)
                flat.set(g, static_cast<Index>(m * conditions + c));
        }
    return flat;
}

}  // namespace

std::vector<TriadicConcept> enumerate_triconcepts(const scaling::TriadicContext& ctx) {
    std::size_t conditions = ctx.condition_count();
    fca::FormalContext flat = flatten(ctx);

    std::vector<TriadicConcept> out;
    fca::enumerate_concepts(flat, [&](const Bitset& a1, const Bitset& z) {
        // View Z as an attribute x condition context and mine it.
        fca::FormalContext zctx(ctx.attribute_count(), conditions);
        z.for_each([&](std::size_t flat_col) {
            zctx.set(static_cast<Index>(flat_col / conditions),
                     static_cast<Index>(flat_col % conditions));
        });
        fca::enumerate_concepts(zctx, [&](const Bitset& a2, const Bitset& a3) {
            // Keep (A1, A2, A3) only if A2 x A3 re-derives exactly A1;
            // otherwise the box is maximal under a different extent.
            Bitset rectangle(flat.attribute_count());
            a2.for_each([&](std::size_t m) {
                a3.for_each([&](std::size_t c) { rectangle.set(m * conditions + c); });
            });
            if (fca::derive_extent(flat, rectangle) == a1)
                out.push_back({a1.to_indices(), a2.to_indices(), a3.to_indices()});
        });
    });

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Theta theta_of_modus(const scaling::ScaleDimension& scale, const IndexSet& modus) {
    if (modus.empty()) throw internal_error("theta_of_modus: empty modus");
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (Index c : modus) {
        if (c >= scale.conditions.size())
            throw internal_error("theta_of_modus: condition index out of range");
        lo = std::max(lo, scale.conditions[c].lo);
        hi = std::min(hi, scale.conditions[c].hi);
    }
    if (lo > hi) throw internal_error("theta_of_modus: conditions have empty intersection");
    return Theta(hi - lo);
}

std::vector<ThetaAnnotatedBicluster> mine_all_theta(const NumericalDataset& d,
                                                    const AllThetaOptions& options) {
    scaling::TriadicContext ctx(
        d, scaling::interordinal_scale(distinct_values(d), scaling::ScaleMode::interordinal_observed));

    std::vector<ThetaAnnotatedBicluster> out;
    for (const TriadicConcept& t : enumerate_triconcepts(ctx)) {
        if (t.extent.empty() || t.intent.empty()) continue;
        if (options.min_extent && t.extent.size() < *options.min_extent) continue;
        if (options.min_intent && t.intent.size() < *options.min_intent) continue;
        if (options.min_modus && t.modus.size() < *options.min_modus) continue;
        Bicluster b{t.extent, t.intent};
        auto [lo, hi] = cell_range(d, b);
        out.push_back({std::move(b), theta_of_modus(ctx.scale(), t.modus), {lo, hi}});
    }
    std::sort(out.begin(), out.end(), [](const ThetaAnnotatedBicluster& a,
                                         const ThetaAnnotatedBicluster& b) {
        return a.bicluster < b.bicluster;
    });
    return out;
}

}  // namespace tribic::tca
