#include "tribic/fca.hpp"

#include <algorithm>

namespace tribic::fca {

namespace {

Bitset indices_to_bits(const IndexSet& ids, std::size_t width) {
    Bitset b(width);
    for (Index i : ids) b.set(i);
    return b;
}

}  // namespace

Bitset derive_intent(const FormalContext& ctx, const Bitset& objects) {
    Bitset intent(ctx.attribute_count(), true);
    objects.for_each([&](std::size_t g) { intent &= ctx.row(static_cast<Index>(g)); });
    return intent;
}

IndexSet derive_intent(const FormalContext& ctx, const IndexSet& objects) {
    return derive_intent(ctx, indices_to_bits(objects, ctx.object_count())).to_indices();
}

Bitset derive_extent(const FormalContext& ctx, const Bitset& attributes) {
    Bitset extent(ctx.object_count());
    for (Index g = 0; g < ctx.object_count(); ++g)
        if (attributes.is_subset_of(ctx.row(g))) extent.set(g);
    return extent;
}

IndexSet derive_extent(const FormalContext& ctx, const IndexSet& attributes) {
    return derive_extent(ctx, indices_to_bits(attributes, ctx.attribute_count())).to_indices();
}

DyadicConcept inner_closure(const FormalContext& ctx, const Bicluster& b) {
    for (Index g : b.extent)
        for (Index m : b.intent)
            if (!ctx.incident(g, m))
                throw internal_error("inner_closure: rectangle is not fully incident");
    Bitset objects = indices_to_bits(b.extent, ctx.object_count());
    Bitset intent = derive_intent(ctx, objects);
    Bitset extent = derive_extent(ctx, intent);
    return {extent.to_indices(), intent.to_indices()};
}

namespace {

// Close-by-One over objects. A child adds one object and closes; it
// survives iff the closed extent agrees with the parent below the added
// object (canonical generation), so every concept appears exactly once.
// Children are visited in descending object order, which makes the
// emission sequence the ascending lectic order on extents. Recursion
// depth is bounded by the attribute count plus one since intents
// strictly shrink along any branch.
struct CboRunner {
    const FormalContext& ctx;
    const std::function<void(const Bitset&, const Bitset&)>& emit;

    void run() {
        Bitset intent(ctx.attribute_count(), true);
        Bitset extent = derive_extent(ctx, intent);
        // (extent of M, M) is the closure of the empty object set.
        step(extent, intent, 0);
    }

    void step(const Bitset& extent, const Bitset& intent, Index next) {
        emit(extent, intent);
        for (Index g = static_cast<Index>(ctx.object_count()); g-- > next;) {
            if (extent.test(g)) continue;
            Bitset child_intent = intent & ctx.row(g);
            Bitset child_extent = derive_extent(ctx, child_intent);
            if (child_extent.equal_below(extent, g)) step(child_extent, child_intent, g + 1);
        }
    }
};

}  // namespace

void enumerate_concepts(const FormalContext& ctx,
                        const std::function<void(const Bitset&, const Bitset&)>& emit) {
    CboRunner{ctx, emit}.run();
}

namespace {

// Dual runner over attributes, with a column-major copy of the context
// so closures are per-column intersections.
struct DualCboRunner {
    const FormalContext& ctx;
    const std::function<void(const Bitset&, const Bitset&)>& emit;
    std::vector<Bitset> columns;

    void run() {
        columns.assign(ctx.attribute_count(), Bitset(ctx.object_count()));
        for (Index g = 0; g < ctx.object_count(); ++g)
            ctx.row(g).for_each([&](std::size_t m) { columns[m].set(g); });

        Bitset extent(ctx.object_count(), true);
        Bitset intent = derive_intent(ctx, extent);
        step(extent, intent, 0);
    }

    void step(const Bitset& extent, const Bitset& intent, Index next) {
        emit(extent, intent);
        for (Index m = static_cast<Index>(ctx.attribute_count()); m-- > next;) {
            if (intent.test(m)) continue;
            Bitset child_extent = extent & columns[m];
            Bitset child_intent(ctx.attribute_count());
            for (Index k = 0; k < ctx.attribute_count(); ++k)
                if (child_extent.is_subset_of(columns[k])) child_intent.set(k);
            if (child_intent.equal_below(intent, m)) step(child_extent, child_intent, m + 1);
        }
    }
};

}  // namespace

void enumerate_concepts_by_intent(const FormalContext& ctx,
                                  const std::function<void(const Bitset&, const Bitset&)>& emit) {
    DualCboRunner{ctx, emit, {}}.run();
}

std::vector<DyadicConcept> enumerate_concepts(const FormalContext& ctx) {
    std::vector<DyadicConcept> out;
    enumerate_concepts(ctx, [&](const Bitset& extent, const Bitset& intent) {
        out.push_back({extent.to_indices(), intent.to_indices()});
    });
    return out;
}

}  // namespace tribic::fca
