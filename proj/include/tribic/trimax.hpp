#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "tribic/core.hpp"
#include "tribic/scaling.hpp"
#include "tribic/tca.hpp"

namespace tribic::trimax {

// Size bounds evaluated on a dyadic concept before its modus is
// computed; pruning here is what makes constrained runs cheap.
struct MiningConstraints {
    std::optional<std::size_t> min_extent;
    std::optional<std::size_t> max_extent;
    std::optional<std::size_t> min_intent;
    std::optional<std::size_t> max_intent;
    std::optional<std::size_t> min_area;  // |A| * |B|

    bool admits(std::size_t extent_size, std::size_t intent_size) const {
        if (min_extent && extent_size < *min_extent) return false;
        if (max_extent && extent_size > *max_extent) return false;
        if (min_intent && intent_size < *min_intent) return false;
        if (max_intent && intent_size > *max_intent) return false;
        if (min_area && extent_size * intent_size < *min_area) return false;
        return true;
    }

    void validate() const;
};

struct PhaseTimings {
    std::chrono::nanoseconds concept_mining{0};
    std::chrono::nanoseconds modus{0};
    std::chrono::nanoseconds maximality{0};
};

struct MiningReport {
    std::vector<tca::ThetaAnnotatedBicluster> biclusters;
    std::size_t dyadic_concepts_generated = 0;  // non-degenerate concepts seen
    std::size_t blocks = 0;
    std::chrono::nanoseconds elapsed{0};
    PhaseTimings phases;  // summed across workers
};

// True when the rectangle stays a closed concept in every block of its
// modus that precedes `current`. Block contexts are never materialized;
// closure is evaluated straight off the dataset.
bool maximality_check(const NumericalDataset& d, const scaling::ScaleDimension& blocks,
                      const Bicluster& b, const IndexSet& modus_blocks, Index current);

// All maximal biclusters of similar values for the given theta, each
// exactly once, sorted by (extent, intent). Per tolerance block, dyadic
// concepts are mined and a concept is kept only in the last block of its
// modus, provided it stays closed in every earlier one.
MiningReport trimax_mine(const NumericalDataset& d, Theta theta,
                         const MiningConstraints& constraints = {}, unsigned threads = 1);

// The engine behind trimax_mine: blocks are dealt out to workers, each
// mining with read-only access to the dataset; outputs are merged into
// one deterministically ordered list whatever the thread count.
MiningReport parallel_driver(const NumericalDataset& d, Theta theta,
                             const MiningConstraints& constraints, unsigned threads);

}  // namespace tribic::trimax
