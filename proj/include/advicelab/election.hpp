#pragma once

#include <cstdint>

#include "advicelab/graph.hpp"
#include "advicelab/sim.hpp"

namespace advicelab {

// Scheme 1: the oracle ships the largest label outright; every node
// halts in round 0. ceil(log2 L) advice bits.
AdviceOracle elect_max_oracle(std::uint64_t L);
AlgorithmUnderTest elect_max_algorithm();

// Scheme 2: the oracle ships the diameter; every node listens exactly
// that long and answers the largest label it saw. ceil(log2 diam) bits.
AdviceOracle elect_diam_oracle();
AlgorithmUnderTest elect_diam_algorithm();

// Scheme 3: no advice. A node halts the first round its label set stops
// growing, which happens exactly at eccentricity + 1.
AdviceOracle elect_stall_oracle();
AlgorithmUnderTest elect_stall_algorithm();

}  // namespace advicelab
