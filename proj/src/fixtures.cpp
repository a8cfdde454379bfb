// SPDX-License-Identifier: Apache-2.0
#include "pleig/fixtures.hpp"

#include <array>
#include <random>
#include <vector>

#include "pleig/errors.hpp"
#include "pleig/rng.hpp"

namespace pleig {

Graph build_path_graph(int n) {
  if (n < 2) throw InputError("path graph needs at least two nodes");
  std::vector<std::array<double, 3>> t;
  t.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i)
    t.push_back({static_cast<double>(i), static_cast<double>(i + 1), 1.0});
  return build_graph(n, t);
}

Graph build_bridged_cliques(int k) {
  if (k < 2) throw InputError("cliques need at least two nodes each");
  std::vector<std::array<double, 3>> t;
  for (int base : {0, k})
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        t.push_back({static_cast<double>(base + i),
                     static_cast<double>(base + j), 1.0});
  t.push_back({static_cast<double>(k - 1), static_cast<double>(k), 1.0});
  return build_graph(2 * k, t);
}

std::vector<std::array<double, 3>> random_connected_points(unsigned seed,
                                                           int n, double eps) {
  if (n < 2) throw InputError("need at least two points");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937 gen(seed + attempt);
    std::vector<std::array<double, 3>> pts(n);
    for (int i = 0; i < n; ++i) {
      const double x = uniform01(gen); // x before y, one point at a time
      const double y = uniform01(gen);
      pts[i] = {x, y, 0.0};
    }
    if (build_epsilon_graph(pts, eps).connected) return pts;
  }
  throw InputError("no connected epsilon graph within 64 seeds; raise eps");
}

std::pair<std::vector<std::array<double, 3>>, std::vector<int>>
planted_blob_points(unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<std::array<double, 3>> pts;
  std::vector<int> labels;
  pts.reserve(500);
  labels.reserve(500);
  const double boxes[2][4] = {{0.0, 1.0, 0.0, 1.0}, {1.2, 2.2, 0.0, 1.0}};
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 250; ++i) {
      const double x = boxes[b][0] + uniform01(gen) * (boxes[b][1] - boxes[b][0]);
      const double y = boxes[b][2] + uniform01(gen) * (boxes[b][3] - boxes[b][2]);
      pts.push_back({x, y, 0.0});
      labels.push_back(b);
    }
  return {std::move(pts), std::move(labels)};
}

} // namespace pleig
