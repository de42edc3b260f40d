#pragma once

#include <functional>
#include <vector>

#include "tribic/bitset.hpp"
#include "tribic/core.hpp"

namespace tribic::fca {

// Binary incidence between objects and attributes, stored as one bitset
// per object row.
class FormalContext {
public:
    FormalContext(std::size_t objects, std::size_t attributes)
        : attribute_count_(attributes), rows_(objects, Bitset(attributes)) {}

    std::size_t object_count() const { return rows_.size(); }
    std::size_t attribute_count() const { return attribute_count_; }

    void set(Index g, Index m) { rows_[g].set(m); }
    bool incident(Index g, Index m) const { return rows_[g].test(m); }
    const Bitset& row(Index g) const { return rows_[g]; }

    std::size_t cross_count() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.count();
        return n;
    }

    bool operator==(const FormalContext&) const = default;

private:
    std::size_t attribute_count_ = 0;
    std::vector<Bitset> rows_;
};

// A closed (extent, intent) pair.
struct DyadicConcept {
    IndexSet extent;
    IndexSet intent;

    bool operator==(const DyadicConcept&) const = default;
    bool operator<(const DyadicConcept& o) const {
        return extent != o.extent ? extent < o.extent : intent < o.intent;
    }
};

// Attributes shared by every object of A. The empty set derives to the
// full attribute set.
Bitset derive_intent(const FormalContext& ctx, const Bitset& objects);
IndexSet derive_intent(const FormalContext& ctx, const IndexSet& objects);

// Objects incident to every attribute of B; dual of derive_intent.
Bitset derive_extent(const FormalContext& ctx, const Bitset& attributes);
IndexSet derive_extent(const FormalContext& ctx, const IndexSet& attributes);

// Closes a fully incident rectangle into the concept it generates.
// Throws internal_error if some cell of extent x intent is not incident.
DyadicConcept inner_closure(const FormalContext& ctx, const Bicluster& b);

// Emits every concept exactly once, extents in ascending lectic order
// (the smallest object in which two extents differ decides).
void enumerate_concepts(const FormalContext& ctx,
                        const std::function<void(const Bitset& extent, const Bitset& intent)>& emit);

std::vector<DyadicConcept> enumerate_concepts(const FormalContext& ctx);

// Same concept set, enumerated over attributes instead of objects:
// child candidates per concept drop from |G| to |M|, which is what the
// block miner wants on tall narrow contexts. Order is lectic on intents.
void enumerate_concepts_by_intent(
    const FormalContext& ctx,
    const std::function<void(const Bitset& extent, const Bitset& intent)>& emit);

}  // namespace tribic::fca
