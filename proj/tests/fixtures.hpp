#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tribic/core.hpp"
#include "tribic/fca.hpp"

namespace tribic::testing {

inline NumericalDataset make_dataset(const std::vector<std::vector<double>>& rows) {
    std::vector<std::string> object_ids, attribute_ids;
    std::vector<double> values;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        object_ids.push_back("g" + std::to_string(r + 1));
        values.insert(values.end(), rows[r].begin(), rows[r].end());
    }
    for (std::size_t c = 0; c < rows.at(0).size(); ++c)
        attribute_ids.push_back("m" + std::to_string(c + 1));
    return NumericalDataset(std::move(object_ids), std::move(attribute_ids), std::move(values));
}

// 4x5 demo table used throughout: values {0,1,2,6,7,8,9}, a near-constant
// top-left rectangle and a constant m5 column among g1..g3.
inline NumericalDataset demo4x5() {
    return make_dataset({{1, 2, 2, 1, 6},
                         {2, 1, 1, 0, 6},
                         {2, 2, 1, 7, 6},
                         {8, 9, 2, 6, 7}});
}

using CrossList = std::vector<std::pair<Index, Index>>;

// Expected per-block incidence of demo4x5 at theta = 1, blocks
// [0,1] [1,2] [6,7] [7,8] [8,9] in order. Kept literal so context
// builders are checked against a table, not against themselves.
inline const std::vector<CrossList>& theta1_block_crosses() {
    static const std::vector<CrossList> crosses = {
        {{0, 0}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}},                  // [0,1]
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 2}},  // [1,2]
        {{0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 3}, {3, 4}},                  // [6,7]
        {{2, 3}, {3, 0}, {3, 4}},                                          // [7,8]
        {{3, 0}, {3, 1}},                                                  // [8,9]
    };
    return crosses;
}

inline fca::FormalContext context_from_crosses(std::size_t objects, std::size_t attributes,
                                               const CrossList& crosses) {
    fca::FormalContext ctx(objects, attributes);
    for (auto [g, m] : crosses) ctx.set(g, m);
    return ctx;
}

inline NumericalDataset random_int_dataset(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols, std::uint64_t vmax) {
    std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
    for (auto& row : m)
        for (auto& v : row) v = static_cast<double>(rng() % (vmax + 1));
    return make_dataset(m);
}

inline IndexSet ids(std::initializer_list<Index> list) { return IndexSet(list); }

}  // namespace tribic::testing
