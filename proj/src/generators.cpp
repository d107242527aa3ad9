#include "advicelab/generators.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace advicelab {

std::uint64_t default_label_bound(std::size_t n) {
  return std::bit_ceil(std::uint64_t{4} * n);
}

Instance random_ring(std::size_t n, std::uint64_t label_bound, Rng& rng) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 nodes");
  if (label_bound < n) throw std::invalid_argument("label bound below node count");
  std::vector<Label> labels = rng.sample_distinct(label_bound, n);
  rng.shuffle(labels);
  return Instance{build_ring(labels), label_bound};
}

Instance random_connected_graph(std::size_t n, std::size_t extra_edges,
                                std::uint64_t label_bound, Rng& rng) {
  if (n < 2) throw std::invalid_argument("graph needs at least 2 nodes");
  if (label_bound < n) throw std::invalid_argument("label bound below node count");
  std::vector<Label> labels = rng.sample_distinct(label_bound, n);
  rng.shuffle(labels);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1 + extra_edges);
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(static_cast<int>(rng.below(i)), static_cast<int>(i));

  // Dedup against the tree and against earlier extras; dense graphs may
  // saturate, so cap the attempts rather than loop forever.
  auto has_edge = [&edges](int a, int b) {
    for (const auto& [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  };
  std::size_t attempts = 0;
  std::size_t added = 0;
  const std::size_t max_attempts = 20 * (extra_edges + 1);
  while (added < extra_edges && attempts < max_attempts) {
    ++attempts;
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a == b || has_edge(a, b)) continue;
    edges.emplace_back(a, b);
    ++added;
  }

  return Instance{LabeledGraph(std::move(labels), std::move(edges)), label_bound};
}

}  // namespace advicelab
