#pragma once

#include <optional>
#include <vector>

#include "tribic/core.hpp"
#include "tribic/scaling.hpp"

namespace tribic::tca {

// Maximal fully incident box of a triadic context.
struct TriadicConcept {
    IndexSet extent;  // objects
    IndexSet intent;  // attributes
    IndexSet modus;   // condition indices

    bool operator==(const TriadicConcept&) const = default;
    bool operator<(const TriadicConcept& o) const {
        if (extent != o.extent) return extent < o.extent;
        if (intent != o.intent) return intent < o.intent;
        return modus < o.modus;
    }
};

// A mined bicluster together with the smallest theta for which it is
// maximal and the min/max of its cells.
struct ThetaAnnotatedBicluster {
    Bicluster bicluster;
    Theta theta;
    scaling::Interval value_range;

    bool operator==(const ThetaAnnotatedBicluster& o) const {
        return bicluster == o.bicluster && theta.value == o.theta.value &&
               value_range == o.value_range;
    }
};

// Conditions under which every cell of the rectangle falls, computed
// from the dataset values alone. Requires non-empty extent and intent.
IndexSet outer_modus(const scaling::TriadicContext& ctx, const Bicluster& b);

// All triadic concepts, each exactly once, in a deterministic order.
// Nested dyadic strategy: concepts (A1, Z) of the flattened context
// G x (M x C), then concepts (A2, A3) of each Z, kept when re-deriving
// A2 x A3 reproduces A1.
std::vector<TriadicConcept> enumerate_triconcepts(const scaling::TriadicContext& ctx);

// Length of the intersection interval of the modus conditions. In dense
// interordinal mode this also equals s - |U| + 1.
Theta theta_of_modus(const scaling::ScaleDimension& scale, const IndexSet& modus);

struct AllThetaOptions {
    std::optional<std::size_t> min_extent;
    std::optional<std::size_t> min_intent;
    std::optional<std::size_t> min_modus;
};

// Every maximal bicluster of similar values for every theta at once,
// via observed interordinal scaling. Intended for small and medium
// inputs; the fixed-theta miner is the scalable path.
std::vector<ThetaAnnotatedBicluster> mine_all_theta(const NumericalDataset& d,
                                                    const AllThetaOptions& options = {});

}  // namespace tribic::tca
