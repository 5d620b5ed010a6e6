#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cheesy/hexgrid.hpp"

namespace testing_support {

// Connected cell set grown from the origin by random neighbour steps.
inline cheesy::CellSet random_polyomino(std::mt19937& rng, int cells) {
    std::vector<cheesy::Cell> v{{0, 0}};
    while (static_cast<int>(v.size()) < cells) {
        const cheesy::Cell base = v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
        const cheesy::Cell n = cheesy::neighbors(base)[std::uniform_int_distribution<int>(0, 5)(rng)];
        if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
    }
    return cheesy::CellSet(v);
}

inline cheesy::CellSet random_cloud(std::mt19937& rng, int cells) {
    std::uniform_int_distribution<int> d(-6, 6);
    std::vector<cheesy::Cell> v;
    for (int i = 0; i < cells; ++i) v.push_back({d(rng), d(rng)});
    return cheesy::CellSet(v);
}

}  // namespace testing_support
