#pragma once

#include <optional>
#include <vector>

#include "advicelab/chop_glue.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/sim.hpp"

namespace advicelab {

// Strawman selector: no advice, halt after one round, claim victory iff
// maximal among the immediate neighborhood. Correct on triangles only.
AdviceOracle local_max_oracle();
AlgorithmUnderTest local_max_algorithm();

struct AdversaryConfig {
    int budget = 1;  // gluing stages after the triangle stage
    int pool = 8;    // starting triangles
};

enum class AdversaryOutcome {
    counterexample,  // a ring where the algorithm's selection verdict fails
    starved,         // some advice class became too small to keep gluing
    survived,        // the final assembled ring was still answered correctly
};

struct AdversaryResult {
    AdversaryOutcome outcome = AdversaryOutcome::survived;
    int starved_stage = 0;                   // stage whose class was too small
    std::optional<LabeledGraph> instance;    // the counterexample, or the final ring
    RunReport instance_report;
    std::vector<std::vector<LabeledGraph>> stage_sets;  // same-advice class per stage
    std::vector<Label> fresh_labels;         // labels invented for the final ring
};

// Stage 1 runs the algorithm on disjoint triangles and keeps the largest
// same-advice class. Each later stage glues class members pairwise and
// filters by advice again. Finally two survivors are welded into one
// ring through a fresh path; identical advice plus identical local views
// make both previous winners claim victory there.
AdversaryResult run_adversary(const AlgorithmUnderTest& alg, const AdviceOracle& oracle,
                              const AdversaryConfig& config);

}  // namespace advicelab
