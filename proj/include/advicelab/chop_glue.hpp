#pragma once

#include <vector>

#include "advicelab/graph.hpp"
#include "advicelab/sim.hpp"

namespace advicelab {

// Path written leaf to leaf, smaller-labeled leaf first.
using ChoppedPath = std::vector<Label>;

// Opens an odd ring by removing the edge between the two nodes farthest
// from the selected node. The run must have selected exactly one node,
// with every node halting within the ring's diameter.
ChoppedPath chop(const LabeledGraph& ring, const RunReport& report);

// Closes two chopped paths into one odd ring: smaller leaves joined
// directly, larger leaves joined through one fresh node.
LabeledGraph glue(const ChoppedPath& a, const ChoppedPath& b, Label fresh);

// True when `path` occurs as a consecutive arc of the ring (either direction).
bool ring_contains_path(const LabeledGraph& ring, const ChoppedPath& path);

// True when `inner` is a contiguous run of `outer` (either direction).
bool path_contains_path(const std::vector<Label>& outer, const ChoppedPath& inner);

}  // namespace advicelab
