#include "advicelab/sim.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace advicelab {

int default_round_cap(const LabeledGraph& g) {
    return diameter(g) + 2;
}

NodeOutcome trace_node(const LabeledGraph& g, int v, const AdviceString& advice,
                       const AlgorithmUnderTest& alg, int round_cap) {
    if (round_cap < 1) throw std::invalid_argument("round_cap must be >= 1");
    NodeOutcome out;
    out.label = g.label(v);
    int r = 0;
    while (true) {
        if (r >= round_cap) {
            out.halt_round = round_cap;
            out.aborted = true;
            return out;
        }
        Decision d = alg(advice, r, ball_view(g, v, r));
        switch (d.kind) {
            case Decision::Kind::halt:
                out.halt_round = r;
                out.output = d.output;
                return out;
            case Decision::Kind::fail:
                out.halt_round = r;
                out.aborted = true;
                return out;
            case Decision::Kind::sleep:
                r = std::max(r + 1, d.wake_round);
                break;
            case Decision::Kind::run_on:
                ++r;
                break;
        }
    }
}

RunReport run(const LabeledGraph& g, const AdviceOracle& oracle,
              const AlgorithmUnderTest& alg, int round_cap) {
    AdviceString advice = oracle(g);
    RunReport report;
    report.advice_bits = advice.size();
    report.nodes.reserve(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
        report.nodes.push_back(trace_node(g, v, advice, alg, round_cap));
    std::sort(report.nodes.begin(), report.nodes.end(),
              [](const NodeOutcome& a, const NodeOutcome& b) { return a.label < b.label; });
    report.time = 0;
    report.within_cap = true;
    for (const auto& n : report.nodes) {
        report.time = std::max(report.time, n.halt_round);
        if (n.aborted) report.within_cap = false;
    }
    report.selection_pass = check_selection(report, g);
    report.election_pass = check_election(report, g);
    return report;
}

bool check_selection(const RunReport& report, const LabeledGraph& g) {
    Label top = max_label(g);
    for (const auto& n : report.nodes) {
        if (n.aborted) return false;
        std::uint64_t want = (n.label == top) ? 1 : 0;
        if (n.output != want) return false;
    }
    return true;
}

bool check_election(const RunReport& report, const LabeledGraph& g) {
    Label top = max_label(g);
    for (const auto& n : report.nodes) {
        if (n.aborted || n.output != top) return false;
    }
    return true;
}

std::string format_report(const RunReport& report) {
    std::ostringstream os;
    for (const auto& n : report.nodes) {
        os << "node " << n.label << " halt=" << n.halt_round << " out=" << n.output;
        if (n.aborted) os << " aborted";
        os << '\n';
    }
    os << "time=" << report.time << " advice_bits=" << report.advice_bits
       << " selection=" << (report.selection_pass ? "pass" : "fail")
       << " election=" << (report.election_pass ? "pass" : "fail") << '\n';
    return os.str();
}

}  // namespace advicelab
