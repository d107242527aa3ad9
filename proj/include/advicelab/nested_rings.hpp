#pragma once

#include <optional>
#include <vector>

#include "advicelab/graph.hpp"

namespace advicelab {

// Rings R_1..R_D that all look alike from the node labeled 1: member k
// is the radius-k ball of the base ring around that node, closed into a
// ring of diameter k with largest label D+k+1.
struct NestedRingFamily {
    int D = 0;
    LabeledGraph base;
    std::vector<LabeledGraph> members;  // members[k-1] has diameter k
};

NestedRingFamily nested_ring_family(int D);

struct NestedViewsWitness {
    int i = 0;
    int j = 0;
    int r = 0;
};

struct NestedViewsResult {
    bool pass = true;
    std::optional<NestedViewsWitness> witness;
};

// Checks that for all 1 <= i < j <= D and r <= i the node labeled 1 has
// identical views in members i and j.
NestedViewsResult verify_nested_views(const NestedRingFamily& family);

}  // namespace advicelab
