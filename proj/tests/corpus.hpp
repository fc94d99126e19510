#pragma once

#include "radon_nets/distribution.hpp"
#include "radon_nets/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radon_nets::testing {

struct CorpusSpace {
    std::string name;
    std::string family;  ///< power | cylinders | tree | lattice | poset | random
    ConvexitySpace space;
};

/// Power sets m<=5, cylinders n<=3, all trees on <=8 vertices, grids up to
/// 3x3, all posets on <=4 elements, `random_count` random separable spaces on
/// <=6 points.
std::vector<CorpusSpace> standard_corpus(std::size_t random_count = 200);

/// Random distribution with small integer masses (some zero), seeded.
Distribution random_distribution(std::size_t points, std::uint64_t seed);

/// The four thresholds used across the net suites.
std::vector<Rational> standard_eps();

} // namespace radon_nets::testing
