#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "advicelab/bits.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/view.hpp"

namespace advicelab {

using AdviceString = BitString;

// What a node does after seeing its round-r view. sleep_until promises
// the decision is "keep running" for every round before wake_round no
// matter what the view holds, so the engine may skip building those views.
struct Decision {
    enum class Kind { run_on, halt, fail, sleep };

    Kind kind = Kind::run_on;
    std::uint64_t output = 0;
    int wake_round = 0;

    static Decision run_on() { return {}; }
    static Decision halt(std::uint64_t out) { return {Kind::halt, out, 0}; }
    static Decision fail() { return {Kind::fail, 0, 0}; }
    static Decision sleep_until(int round) { return {Kind::sleep, 0, round}; }
};

// Deterministic node procedure: the engine hands it nothing beyond the
// shared advice, the round number, and the round-r view.
using AlgorithmUnderTest = std::function<Decision(const AdviceString&, int, const View&)>;
using AdviceOracle = std::function<AdviceString(const LabeledGraph&)>;

struct NodeOutcome {
    Label label = 0;
    int halt_round = 0;
    std::uint64_t output = 0;
    bool aborted = false;
};

struct RunReport {
    std::vector<NodeOutcome> nodes;  // ascending by label
    int time = 0;                    // max halting round
    std::size_t advice_bits = 0;
    bool selection_pass = false;
    bool election_pass = false;
    bool within_cap = false;
};

int default_round_cap(const LabeledGraph& g);  // diameter + 2

// One node's isolated execution; rounds 0,1,... until it halts, fails,
// or reaches round_cap (recorded as aborted).
NodeOutcome trace_node(const LabeledGraph& g, int v, const AdviceString& advice,
                       const AlgorithmUnderTest& alg, int round_cap);

RunReport run(const LabeledGraph& g, const AdviceOracle& oracle,
              const AlgorithmUnderTest& alg, int round_cap);

// Exactly the largest-labeled node output 1, all others 0, nobody aborted.
bool check_selection(const RunReport& report, const LabeledGraph& g);

// Every node output the largest label, nobody aborted.
bool check_election(const RunReport& report, const LabeledGraph& g);

// "node <label> halt=<r> out=<v>" lines followed by the summary line.
std::string format_report(const RunReport& report);

}  // namespace advicelab
