#include "advicelab/election.hpp"

#include <stdexcept>

#include "advicelab/codec.hpp"

namespace advicelab {

AdviceOracle elect_max_oracle(std::uint64_t L) {
    return [L](const LabeledGraph& g) {
        Label top = max_label(g);
        if (top > L) throw std::invalid_argument("label exceeds L");
        BitString advice;
        advice.append_uint(top - 1, ceil_log2(L));  // labels 1..L, biased to 0
        return advice;
    };
}

AlgorithmUnderTest elect_max_algorithm() {
    return [](const AdviceString& advice, int, const View&) {
        BitReader r(advice);
        std::uint64_t top = static_cast<std::uint64_t>(r.take_uint(static_cast<int>(advice.size()))) + 1;
        return Decision::halt(top);
    };
}

AdviceOracle elect_diam_oracle() {
    return [](const LabeledGraph& g) {
        int diam = diameter(g);
        if (diam < 1) throw std::invalid_argument("graph needs at least two nodes");
        BitString advice;
        advice.append_uint(static_cast<std::uint64_t>(diam) - 1, ceil_log2(static_cast<std::uint64_t>(diam)));
        return advice;
    };
}

AlgorithmUnderTest elect_diam_algorithm() {
    return [](const AdviceString& advice, int round, const View& view) {
        BitReader r(advice);
        int diam = static_cast<int>(r.take_uint(static_cast<int>(advice.size()))) + 1;
        if (round < diam) return Decision::sleep_until(diam);
        return Decision::halt(view.all_labels().back());
    };
}

AdviceOracle elect_stall_oracle() {
    return [](const LabeledGraph&) { return BitString{}; };
}

AlgorithmUnderTest elect_stall_algorithm() {
    return [](const AdviceString&, int round, const View& view) {
        // The round-r view lists distance-(r-1) labels as inner and
        // distance-r labels as boundary, so an empty boundary means the
        // label set matches last round's.
        if (round >= 1 && view.boundary_labels.empty())
            return Decision::halt(view.inner_labels.back());
        return Decision::run_on();
    };
}

}  // namespace advicelab
