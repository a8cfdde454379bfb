// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pleig/graph.hpp"

namespace pleig {

// Deterministic fixtures shared by the verification suites and the tests.

Graph build_path_graph(int n);

// two K_k cliques {0..k-1} and {k..2k-1} joined by the unit edge (k-1, k)
Graph build_bridged_cliques(int k);

// n points uniform in the unit square from the seeded generator; bumps the
// seed until the eps-graph is connected (bounded retries)
std::vector<std::array<double, 3>> random_connected_points(unsigned seed,
                                                           int n, double eps);

// two planted clusters: 250 points in [0,1]^2 and 250 in [1.2,2.2]x[0,1];
// second value holds the planted labels (0 = first box)
std::pair<std::vector<std::array<double, 3>>, std::vector<int>>
planted_blob_points(unsigned seed);

} // namespace pleig
