#include "tribic/trimax.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "tribic/fca.hpp"

namespace tribic::trimax {

using Clock = std::chrono::steady_clock;

void MiningConstraints::validate() const {
    if (min_extent && max_extent && *min_extent > *max_extent)
        throw input_error("min_extent exceeds max_extent");
    if (min_intent && max_intent && *min_intent > *max_intent)
        throw input_error("min_intent exceeds max_intent");
}

namespace {

// Closure test against one block, straight off the dataset: (A, B) is
// closed iff no extra attribute is shared by all of A and no extra
// object carries all of B, within the block's value range.
bool closed_in_block(const NumericalDataset& d, scaling::Interval block, const Bitset& extent,
                     const Bitset& intent) {
    for (Index m = 0; m < d.attribute_count(); ++m) {
        if (intent.test(m)) continue;
        bool shared = true;
        extent.for_each([&](std::size_t g) {
            shared = shared && block.contains(d.value(static_cast<Index>(g), m));
        });
        if (shared) return false;
    }
    for (Index g = 0; g < d.object_count(); ++g) {
        if (extent.test(g)) continue;
        bool carries = true;
        intent.for_each([&](std::size_t m) {
            carries = carries && block.contains(d.value(g, static_cast<Index>(m)));
        });
        if (carries) return false;
    }
    return true;
}

Bitset to_bits(const IndexSet& ids, std::size_t width) {
    Bitset b(width);
    for (Index i : ids) b.set(i);
    return b;
}

struct WorkerState {
    std::vector<tca::ThetaAnnotatedBicluster> found;
    std::size_t generated = 0;
    PhaseTimings phases;
};

void mine_block(const NumericalDataset& d, const scaling::ScaleDimension& blocks, Index block_index,
                const MiningConstraints& constraints, WorkerState& state) {
    auto block_start = Clock::now();
    std::chrono::nanoseconds modus_time{0};
    std::chrono::nanoseconds check_time{0};

    fca::FormalContext ctx = scaling::block_context(d, blocks.conditions[block_index]);
    fca::enumerate_concepts_by_intent(ctx, [&](const Bitset& extent, const Bitset& intent) {
        if (extent.none() || intent.none()) return;
        ++state.generated;

        std::size_t extent_size = extent.count();
        std::size_t intent_size = intent.count();
        if (!constraints.admits(extent_size, intent_size)) return;

        auto modus_start = Clock::now();
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        extent.for_each([&](std::size_t g) {
            intent.for_each([&](std::size_t m) {
                double v = d.value(static_cast<Index>(g), static_cast<Index>(m));
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            });
        });
        scaling::IndexRange modus = blocks.conditions_covering(lo, hi);
        modus_time += Clock::now() - modus_start;

        // The block being mined always covers its own concepts; the
        // modus is a contiguous index interval by block ordering.
        if (modus.empty() || block_index < modus.begin || block_index >= modus.end)
            throw internal_error("trimax: current block missing from the modus");

        // Keep the concept only in the last block of its modus.
        if (modus.end - 1 != block_index) return;

        if (modus.size() > 1) {
            auto check_start = Clock::now();
            bool maximal = true;
            for (std::size_t y = modus.begin; y < block_index && maximal; ++y)
                maximal = closed_in_block(d, blocks.conditions[y], extent, intent);
            check_time += Clock::now() - check_start;
            if (!maximal) return;
        }
        if (!closed_in_block(d, blocks.conditions[block_index], extent, intent))
            throw internal_error("trimax: emitted concept is not closed in its last block");

        state.found.push_back({Bicluster{extent.to_indices(), intent.to_indices()},
                               Theta(hi - lo),
                               scaling::Interval{lo, hi}});
    });

    state.phases.modus += modus_time;
    state.phases.maximality += check_time;
    state.phases.concept_mining += (Clock::now() - block_start) - modus_time - check_time;
}

}  // namespace

bool maximality_check(const NumericalDataset& d, const scaling::ScaleDimension& blocks,
                      const Bicluster& b, const IndexSet& modus_blocks, Index current) {
    Bitset extent = to_bits(b.extent, d.object_count());
    Bitset intent = to_bits(b.intent, d.attribute_count());
    for (Index y : modus_blocks) {
        if (y >= current) break;
        if (!closed_in_block(d, blocks.conditions[y], extent, intent)) return false;
    }
    return true;
}

MiningReport parallel_driver(const NumericalDataset& d, Theta theta,
                             const MiningConstraints& constraints, unsigned threads) {
    constraints.validate();
    if (threads < 1) throw input_error("thread count must be at least 1");

    auto wall_start = Clock::now();

    scaling::ScaleDimension blocks = scaling::tolerance_blocks(distinct_values(d), theta);
    std::size_t block_count = blocks.size();

    std::vector<WorkerState> states(threads);
    std::atomic<std::size_t> next_block{0};
    auto work = [&](WorkerState& state) {
        for (;;) {
            std::size_t i = next_block.fetch_add(1);
            if (i >= block_count) break;
            mine_block(d, blocks, static_cast<Index>(i), constraints, state);
        }
    };

    if (threads == 1) {
        work(states[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(states[t]));
        for (auto& th : pool) th.join();
    }

    MiningReport report;
    report.blocks = block_count;
    for (WorkerState& state : states) {
        report.dyadic_concepts_generated += state.generated;
        report.phases.concept_mining += state.phases.concept_mining;
        report.phases.modus += state.phases.modus;
        report.phases.maximality += state.phases.maximality;
        report.biclusters.insert(report.biclusters.end(),
                                 std::make_move_iterator(state.found.begin()),
                                 std::make_move_iterator(state.found.end()));
    }
    std::sort(report.biclusters.begin(), report.biclusters.end(),
              [](const tca::ThetaAnnotatedBicluster& a, const tca::ThetaAnnotatedBicluster& b) {
                  return a.bicluster < b.bicluster;
              });
    for (std::size_t i = 1; i < report.biclusters.size(); ++i)
        if (report.biclusters[i - 1].bicluster == report.biclusters[i].bicluster)
            throw internal_error("trimax: duplicate bicluster in merged output");

    report.elapsed = Clock::now() - wall_start;
    return report;
}

MiningReport trimax_mine(const NumericalDataset& d, Theta theta,
                         const MiningConstraints& constraints, unsigned threads) {
    return parallel_driver(d, theta, constraints, threads);
}

}  // namespace tribic::trimax
