#include "tribic/oracle.hpp"

#include <algorithm>
#include <limits>

namespace tribic::oracle {

namespace {

IndexSet mask_to_indices(std::uint32_t mask, std::size_t width) {
    IndexSet out;
    for (std::size_t i = 0; i < width; ++i)
        if (mask & (1u << i)) out.push_back(static_cast<Index>(i));
    return out;
}

}  // namespace

std::vector<Bicluster> oracle_maximal_biclusters(const NumericalDataset& d, Theta theta) {
    std::size_t objects = d.object_count();
    std::size_t attributes = d.attribute_count();
    if (objects > 12 || attributes > 12)
        throw input_error("oracle_maximal_biclusters is limited to 12x12 inputs");

    std::vector<Bicluster> out;
    for (std::uint32_t extent_mask = 1; extent_mask < (1u << objects); ++extent_mask) {
        IndexSet extent = mask_to_indices(extent_mask, objects);

        // Per-attribute value range over the chosen objects.
        std::vector<double> lo(attributes), hi(attributes);
        for (std::size_t m = 0; m < attributes; ++m) {
            lo[m] = std::numeric_limits<double>::infinity();
            hi[m] = -lo[m];
            for (Index g : extent) {
                double v = d.value(g, static_cast<Index>(m));
                lo[m] = std::min(lo[m], v);
                hi[m] = std::max(hi[m], v);
            }
        }

        // Every attribute set maximal for this extent is the set of
        // attributes whose range fits some window [a, a + theta] with a
        // the smallest per-attribute minimum in the set.
        std::vector<std::uint32_t> candidates;
        for (std::size_t anchor = 0; anchor < attributes; ++anchor) {
            std::uint32_t mask = 0;
            for (std::size_t m = 0; m < attributes; ++m)
                if (lo[m] >= lo[anchor] && hi[m] <= lo[anchor] + theta.value)
                    mask |= 1u << m;
            if (mask) candidates.push_back(mask);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (std::uint32_t mask : candidates) {
            bool dominated = false;
            for (std::uint32_t other : candidates)
                if (other != mask && (mask & other) == mask) dominated = true;
            if (dominated) continue;
            Bicluster b{extent, mask_to_indices(mask, attributes)};
            if (is_maximal_similar_bicluster(d, b, theta)) out.push_back(std::move(b));
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<tca::TriadicConcept> oracle_triconcepts(const scaling::TriadicContext& ctx) {
    std::size_t objects = ctx.object_count();
    std::size_t attributes = ctx.attribute_count();
    std::size_t conditions = ctx.condition_count();
    if (objects > 8 || attributes > 8 || objects * attributes * conditions > 4000)
        throw input_error("oracle_triconcepts is limited to small contexts");

    std::vector<tca::TriadicConcept> out;
    std::vector<char> shared(attributes * conditions);

    for (std::uint32_t extent_mask = 0; extent_mask < (1u << objects); ++extent_mask) {
        IndexSet extent = mask_to_indices(extent_mask, objects);

        // Pairs (m, c) incident to every chosen object.
        for (std::size_t m = 0; m < attributes; ++m)
            for (std::size_t c = 0; c < conditions; ++c) {
                bool all = true;
                for (Index g : extent)
                    all = all && ctx.incident(g, static_cast<Index>(m), static_cast<Index>(c));
                shared[m * conditions + c] = all;
            }

        for (std::uint32_t intent_mask = 0; intent_mask < (1u << attributes); ++intent_mask) {
            IndexSet intent = mask_to_indices(intent_mask, attributes);

            // Largest condition set fully incident with extent x intent.
            IndexSet modus;
            for (std::size_t c = 0; c < conditions; ++c) {
                bool all = true;
                for (Index m : intent) all = all && shared[m * conditions + c];
                if (all) modus.push_back(static_cast<Index>(c));
            }

            auto box_incident = [&](Index g, Index m) {
                for (Index c : modus)
                    if (!ctx.incident(g, m, c)) return false;
                return true;
            };

            bool maximal = true;
            for (Index g = 0; g < objects && maximal; ++g) {
                if (extent_mask & (1u << g)) continue;
                bool extends = true;
                for (Index m : intent) extends = extends && box_incident(g, m);
                if (extends) maximal = false;
            }
            for (Index m = 0; m < attributes && maximal; ++m) {
                if (intent_mask & (1u << m)) continue;
                bool extends = true;
                for (Index g : extent) extends = extends && box_incident(g, m);
                if (extends) maximal = false;
            }
            if (maximal) out.push_back({extent, intent, std::move(modus)});
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tribic::oracle
