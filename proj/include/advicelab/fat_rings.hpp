#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "advicelab/graph.hpp"

namespace advicelab {

// Disjoint label pool for fat ring slots: set t is {width*t+1 .. width*(t+1)}.
std::vector<std::vector<Label>> fat_ring_pool(int sets, int width);

// Ring of cliques: each slot is a clique, consecutive slots (cyclically)
// are joined completely. Needs an even slot count >= 4.
LabeledGraph fat_ring_expand(const std::vector<std::vector<Label>>& slots);

// Rotates the slot with the smallest label to the front, then fixes the
// direction so the second slot's minimum is below the last slot's.
std::vector<int> canonical_slot_order(const std::vector<std::vector<Label>>& pool,
                                      const std::vector<int>& slots);

// All canonical arrangements of `slot_count` sets drawn from a pool of
// `pool_size`; the count is C(pool, slots) * (slots-1)! / 2.
std::vector<std::vector<int>> enumerate_fat_slot_sequences(int pool_size, int slot_count);
std::uint64_t fat_ring_count_formula(int pool_size, int slot_count);

struct FatViewsResult {
    bool pass = true;
    std::optional<Label> failing_label;
};

// Two fat rings that differ in a single slot must look identical at
// radius D-1 from every node in the opposite slot. trials == 0 checks
// every canonical arrangement and replacement exhaustively.
FatViewsResult verify_fat_views(int D, int n, int pool_size, int trials, std::uint64_t seed);

}  // namespace advicelab
