#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "tribic/oracle.hpp"
#include "tribic/tca.hpp"

using namespace tribic;
using namespace tribic::tca;
using testing::demo4x5;
using testing::ids;
using testing::make_dataset;
using testing::random_int_dataset;

namespace {

scaling::TriadicContext observed_context(const NumericalDataset& d) {
    return scaling::TriadicContext(
        d, scaling::interordinal_scale(distinct_values(d),
                                       scaling::ScaleMode::interordinal_observed));
}

}  // namespace

TEST_SUITE_BEGIN("tca");

TEST_CASE("outer modus") {
    auto d = demo4x5();
    auto inter = observed_context(d);
    CHECK(outer_modus(inter, {ids({0, 1, 2}), ids({0, 1, 2})}) == ids({2, 3, 4, 5, 6, 7}));

    scaling::TriadicContext blocks(d, scaling::tolerance_blocks(distinct_values(d), Theta(1)));
    CHECK(outer_modus(blocks, {ids({2}), ids({3})}) == ids({2, 3}));

    // A single cell is under every condition containing its value.
    IndexSet direct;
    for (Index c = 0; c < inter.condition_count(); ++c)
        if (inter.incident(3, 1, c)) direct.push_back(c);
    CHECK(outer_modus(inter, {ids({3}), ids({1})}) == direct);

    CHECK_THROWS_AS(outer_modus(inter, {ids({}), ids({1})}), input_error);
}

TEST_CASE("theta of modus") {
    auto d = demo4x5();
    auto inter = observed_context(d);
    CHECK(theta_of_modus(inter.scale(), ids({2, 3, 4, 5, 6, 7})).value == 1.0);

    IndexSet single_cell = outer_modus(inter, {ids({0}), ids({4})});
    CHECK(theta_of_modus(inter.scale(), single_cell).value == 0.0);

    CHECK_THROWS_AS(theta_of_modus(inter.scale(), ids({})), internal_error);
    // First and last demo conditions are [0,0] and [9,9]: disjoint.
    CHECK_THROWS_AS(theta_of_modus(inter.scale(), ids({0, 12})), internal_error);

    // Dense scale over 0..9: a rectangle spanning [1,2] sits under
    // s - theta + 1 = 9 conditions whose intersection has length 1.
    auto dense = scaling::interordinal_scale(distinct_values(d),
                                             scaling::ScaleMode::interordinal_dense);
    auto covering = dense.conditions_covering(1, 2);
    CHECK(covering.size() == 9);
    IndexSet modus;
    for (std::size_t c = covering.begin; c < covering.end; ++c)
        modus.push_back(static_cast<Index>(c));
    CHECK(theta_of_modus(dense, modus).value == 1.0);
    CHECK(dense.dense->scale_value - static_cast<double>(modus.size()) + 1 == 1.0);
}

TEST_CASE("theta of modus agrees with the dense formula") {
    std::mt19937_64 rng(211);
    for (int round = 0; round < 20; ++round) {
        auto d = random_int_dataset(rng, 4, 4, 9);
        auto w = distinct_values(d);
        if (w.size() < 2) continue;
        auto scale = scaling::interordinal_scale(w, scaling::ScaleMode::interordinal_dense);
        scaling::TriadicContext ctx(d, scale);
        double s = scale.dense->scale_value;
        for (const TriadicConcept& t : enumerate_triconcepts(ctx)) {
            if (t.extent.empty() || t.intent.empty()) continue;
            auto [lo, hi] = cell_range(d, {t.extent, t.intent});
            double theta = theta_of_modus(scale, t.modus).value;
            CHECK(theta == hi - lo);
            CHECK(theta == s - static_cast<double>(t.modus.size()) + 1);
        }
    }
}

TEST_CASE("larger modus means tighter values in dense mode") {
    auto d = demo4x5();
    auto scale = scaling::interordinal_scale(distinct_values(d),
                                             scaling::ScaleMode::interordinal_dense);
    scaling::TriadicContext ctx(d, scale);
    auto concepts = enumerate_triconcepts(ctx);
    for (const auto& a : concepts) {
        if (a.extent.empty() || a.intent.empty()) continue;
        for (const auto& b : concepts) {
            if (b.extent.empty() || b.intent.empty()) continue;
            if (a.modus.size() > b.modus.size())
                CHECK(theta_of_modus(scale, a.modus).value < theta_of_modus(scale, b.modus).value);
        }
    }
}

TEST_CASE("triconcepts of the demo interordinal context") {
    auto d = demo4x5();
    auto concepts = enumerate_triconcepts(observed_context(d));
    TriadicConcept expected{ids({0, 1, 2}), ids({0, 1, 2}), ids({2, 3, 4, 5, 6, 7})};
    CHECK(std::find(concepts.begin(), concepts.end(), expected) != concepts.end());
}

TEST_CASE("full box is the only triconcept of a full context") {
    auto d = make_dataset({{1, 1}, {1, 1}});
    scaling::ScaleDimension two_conditions{scaling::ScaleMode::tolerance_blocks,
                                           {{0, 1}, {1, 2}},
                                           Theta(1),
                                           std::nullopt};
    scaling::TriadicContext ctx(d, two_conditions);
    auto concepts = enumerate_triconcepts(ctx);
    REQUIRE(concepts.size() == 1);
    CHECK(concepts[0] == TriadicConcept{ids({0, 1}), ids({0, 1}), ids({0, 1})});
}

TEST_CASE("triconcepts agree with the brute-force oracle") {
    std::mt19937_64 rng(223);
    for (int round = 0; round < 15; ++round) {
        auto d = random_int_dataset(rng, 4, 3, 9);
        auto ctx = observed_context(d);
        CHECK(enumerate_triconcepts(ctx) == oracle::oracle_triconcepts(ctx));
    }

    // Same agreement over tolerance-block scales, where conditions
    // overlap pairwise instead of nesting.
    for (int round = 0; round < 10; ++round) {
        auto d = random_int_dataset(rng, 4, 3, 9);
        scaling::TriadicContext ctx(
            d, scaling::tolerance_blocks(distinct_values(d), Theta(1.0 + round % 3)));
        CHECK(enumerate_triconcepts(ctx) == oracle::oracle_triconcepts(ctx));
    }
}

TEST_CASE("mine_all_theta on the demo dataset") {
    auto d = demo4x5();
    auto found = mine_all_theta(d);

    auto find = [&](const Bicluster& b) {
        return std::find_if(found.begin(), found.end(), [&](const ThetaAnnotatedBicluster& t) {
            return t.bicluster == b;
        });
    };

    auto near = find({ids({0, 1, 2}), ids({0, 1, 2})});
    REQUIRE(near != found.end());
    CHECK(near->theta.value == 1.0);
    CHECK(near->value_range == scaling::Interval{1, 2});

    auto wide = find({ids({0, 1, 2}), ids({0, 1, 2, 3, 4})});
    REQUIRE(wide != found.end());
    CHECK(wide->theta.value == 7.0);

    for (const auto& t : found) {
        CHECK_FALSE(t.bicluster.extent.empty());
        CHECK_FALSE(t.bicluster.intent.empty());
        auto [lo, hi] = cell_range(d, t.bicluster);
        CHECK(t.theta.value == hi - lo);
    }
}

TEST_CASE("mine_all_theta equals the oracle swept over theta") {
    std::mt19937_64 rng(227);
    for (int round = 0; round < 10; ++round) {
        auto d = random_int_dataset(rng, 5, 4, 9);

        // Smallest integer theta at which the oracle reports each pair.
        std::map<Bicluster, double> expected;
        for (double theta = 0; theta <= 9; ++theta)
            for (Bicluster& b : oracle::oracle_maximal_biclusters(d, Theta(theta)))
                expected.emplace(std::move(b), theta);

        auto found = mine_all_theta(d);
        REQUIRE(found.size() == expected.size());
        for (const auto& t : found) {
            auto it = expected.find(t.bicluster);
            REQUIRE(it != expected.end());
            CHECK(it->second == t.theta.value);
        }
    }
}

TEST_CASE("modus is exactly the conditions covering the value range") {
    std::mt19937_64 rng(229);
    for (int round = 0; round < 10; ++round) {
        auto d = random_int_dataset(rng, 4, 3, 9);
        auto ctx = observed_context(d);
        for (const TriadicConcept& t : enumerate_triconcepts(ctx)) {
            if (t.extent.empty() || t.intent.empty()) continue;
            IndexSet direct;
            auto [lo, hi] = cell_range(d, {t.extent, t.intent});
            for (Index c = 0; c < ctx.condition_count(); ++c)
                if (ctx.scale().conditions[c].lo <= lo && hi <= ctx.scale().conditions[c].hi)
                    direct.push_back(c);
            CHECK(t.modus == direct);
            // Contiguous index interval.
            for (std::size_t i = 1; i < t.modus.size(); ++i)
                CHECK(t.modus[i] == t.modus[i - 1] + 1);
        }
    }
}

TEST_CASE("mine_all_theta size filters") {
    auto d = demo4x5();
    AllThetaOptions options;
    options.min_extent = 3;
    options.min_intent = 3;
    auto found = mine_all_theta(d, options);
    CHECK_FALSE(found.empty());
    for (const auto& t : found) {
        CHECK(t.bicluster.extent.size() >= 3);
        CHECK(t.bicluster.intent.size() >= 3);
    }

    auto unfiltered = mine_all_theta(d);
    std::size_t matching = 0;
    for (const auto& t : unfiltered)
        if (t.bicluster.extent.size() >= 3 && t.bicluster.intent.size() >= 3) ++matching;
    CHECK(found.size() == matching);
}

TEST_SUITE_END();
