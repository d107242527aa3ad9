#pragma once

#include <cstdint>
#include <vector>

#include "advicelab/codec.hpp"
#include "advicelab/colouring.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/sim.hpp"

namespace advicelab {

// Rounds the timed selection algorithm listens for: floor(alpha * 2^log2_diam).
std::uint64_t round_budget(const Rational& alpha, int log2_diam);

// Labels of ring nodes that are maximal within their own radius-r label
// set, ascending. Computed with a circular sliding-window maximum.
std::vector<Label> candidate_set(const LabeledGraph& g, int r);

// Per-node enumeration oracle for candidate_set.
std::vector<Label> candidate_set_brute(const LabeledGraph& g, int r);

// Whole-ring advice for the timed selection algorithm: the diameter
// exponent plus the colour of a tuple headed by the largest label and
// covering every candidate. Falls back to shipping the largest label
// outright when it is too small to head a beta-tuple.
SelectAdvice build_select_advice(const LabeledGraph& g, const Rational& alpha, std::uint64_t L);
AdviceOracle select_oracle(const Rational& alpha, std::uint64_t L);

// Node side: listen floor(alpha * 2^log2_diam) rounds, drop out unless
// maximal in the gathered label set, then answer the colour membership
// query (or compare against the shipped label in the degenerate case).
AlgorithmUnderTest select_algorithm(const Rational& alpha, std::uint64_t L);

}  // namespace advicelab
