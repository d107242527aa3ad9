#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "advicelab/codec.hpp"

namespace advicelab {

// Strictly decreasing tuple over {1..L}, largest entry first.
using DecreasingTuple = std::vector<std::uint64_t>;

// Largest power-of-two exponent attained by any element of {lo..hi}.
int max_val2_in_range(std::uint64_t lo, std::uint64_t hi);

// Exponent profile of a tuple: entry i (from 1) is the maximal 2-adic
// valuation over {t[i]+1 .. t[0]}. Non-decreasing by construction.
std::vector<int> exponent_profile(const DecreasingTuple& t);

// The tuple colouring: exponent profile read as a mixed-radix number.
Colour tuple_colour(const DecreasingTuple& t, std::uint64_t L);

// Visits every strictly decreasing beta-tuple over {1..L}.
void for_each_decreasing_tuple(std::uint64_t L, int beta,
                               const std::function<void(const DecreasingTuple&)>& fn);

// A colouring is legal when no label appears both as the first entry of
// one tuple and as a non-first entry of another tuple of the same colour.
struct LegalityWitness {
    Colour colour = 0;
    std::uint64_t label = 0;
    DecreasingTuple first_here;
    DecreasingTuple later_here;
};

struct LegalityReport {
    bool legal = true;
    std::optional<LegalityWitness> witness;
};

using TupleColouring = std::function<Colour(const DecreasingTuple&)>;

// Exhaustive check over all beta-tuples; guarded against oversized
// enumerations. Defaults to the mixed-radix tuple colouring.
LegalityReport check_legal_colouring(std::uint64_t L, int beta);
LegalityReport check_legal_colouring(std::uint64_t L, int beta, const TupleColouring& colour_of);

// True when some decreasing beta-tuple over {1..L} with the given first
// entry has the given colour. Constructive: solves per-slot feasible
// ranges greedily instead of enumerating tuples.
bool first_entry_exists(std::uint64_t first, Colour colour, std::uint64_t L, int beta);

// Enumeration oracle for the same question.
bool first_entry_exists_brute(std::uint64_t first, Colour colour, std::uint64_t L, int beta);

}  // namespace advicelab
