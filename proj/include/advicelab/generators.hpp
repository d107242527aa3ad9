#pragma once

#include <cstdint>

#include "advicelab/graph.hpp"
#include "advicelab/instance_io.hpp"
#include "advicelab/rng.hpp"

namespace advicelab {

// Smallest power of two that is >= 4*n; the default label universe for
// generated instances.
std::uint64_t default_label_bound(std::size_t n);

// Ring on n >= 3 nodes with distinct labels drawn from 1..label_bound.
Instance random_ring(std::size_t n, std::uint64_t label_bound, Rng& rng);

// Connected graph on n >= 2 nodes: random-attachment spanning tree plus
// extra_edges additional edges (deduplicated, so the realized count may
// be lower on dense graphs).
Instance random_connected_graph(std::size_t n, std::size_t extra_edges,
                                std::uint64_t label_bound, Rng& rng);

}  // namespace advicelab
