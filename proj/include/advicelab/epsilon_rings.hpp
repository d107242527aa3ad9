#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "advicelab/graph.hpp"
#include "advicelab/rational.hpp"
#include "advicelab/sim.hpp"

namespace advicelab {

// Family of 2D-node rings R_1..R_y sharing ever-longer prefixes of
// decorated segments P_1..P_y, so the middle of P_i looks the same at
// radius x in every later ring. x = ceil(D^eps), y = ceil(D^(1-2*eps)).
struct EpsilonFamily {
    std::uint64_t D = 0;
    Rational eps;
    std::uint64_t L = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::vector<LabeledGraph> members;  // members[i-1] is R_i
};

// L == 0 picks the smallest power of two covering every label.
EpsilonFamily epsilon_family(std::uint64_t D, const Rational& eps, std::uint64_t L = 0);

// Label sequence of segment P_i, junction end last.
std::vector<Label> epsilon_segment(std::uint64_t D, std::uint64_t x, std::uint64_t i);

struct EpsilonViewsResult {
    bool pass = true;
    std::optional<std::pair<int, int>> witness;  // (i, j) with differing views
};

// For every i <= j the node labeled 2Di+2x must show the same radius-x
// view in R_i and R_j.
EpsilonViewsResult verify_epsilon_views(const EpsilonFamily& family);

// Strawman that trusts advice naming the winner: listen x rounds, then
// claim victory iff locally maximal and named. Correct with honest
// advice, fooled when one ring's advice is replayed on a later ring.
AdviceOracle advised_select_oracle(std::uint64_t L);
AlgorithmUnderTest advised_select_algorithm(std::uint64_t L, std::uint64_t x);

struct EpsilonDemo {
    bool views_match = false;       // radius-x views of the decoy agree
    bool honest_run_passes = false; // R_a with its own advice selects correctly
    bool decoy_outputs_one = false; // same node, same advice, wrong ring
    bool decoy_is_largest = false;  // stays false: the decoy never is
    bool selection_fails = false;   // the replayed run's verdict
    Label decoy = 0;
    bool demonstrated() const {
        return views_match && honest_run_passes && decoy_outputs_one && !decoy_is_largest &&
               selection_fails;
    }
};

// Replays R_a's advice on R_b (a < b) under the advised strawman.
EpsilonDemo epsilon_demo(const EpsilonFamily& family, int a, int b);

}  // namespace advicelab
