#include "advicelab/colouring.hpp"

#include <map>
#include <stdexcept>

namespace advicelab {

namespace {

// Largest multiple of 2^e that is <= x (0 when none).
std::uint64_t floor_multiple(std::uint64_t x, int e) {
    if (e >= 64) return 0;
    return (x >> e) << e;
}

}  // namespace

int max_val2_in_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
    int e = 0;
    while (e + 1 < 64 && floor_multiple(hi, e + 1) >= lo) ++e;
    return e;
}

std::vector<int> exponent_profile(const DecreasingTuple& t) {
    if (t.size() < 2) throw std::invalid_argument("tuple needs at least two entries");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == 0 || t[i] >= t[i - 1]) throw std::invalid_argument("tuple must be strictly decreasing and positive");
    std::vector<int> profile;
    profile.reserve(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i)
        profile.push_back(max_val2_in_range(t[i] + 1, t[0]));
    return profile;
}

Colour tuple_colour(const DecreasingTuple& t, std::uint64_t L) {
    if (t[0] > L) throw std::invalid_argument("tuple entry exceeds L");
    return mixed_radix_encode(exponent_profile(t), L);
}

void for_each_decreasing_tuple(std::uint64_t L, int beta,
                               const std::function<void(const DecreasingTuple&)>& fn) {
    if (beta < 2) throw std::invalid_argument("beta must be >= 2");
    DecreasingTuple t(beta);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == beta) {
            fn(t);
            return;
        }
        std::uint64_t top = (slot == 0) ? L : t[slot - 1] - 1;
        std::uint64_t need = static_cast<std::uint64_t>(beta - 1 - slot);  // entries still to place below
        for (std::uint64_t v = top; v >= need + 1; --v) {
            t[slot] = v;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
}

LegalityReport check_legal_colouring(std::uint64_t L, int beta) {
    return check_legal_colouring(L, beta, [L](const DecreasingTuple& t) { return tuple_colour(t, L); });
}

LegalityReport check_legal_colouring(std::uint64_t L, int beta, const TupleColouring& colour_of) {
    if (beta < 2) throw std::invalid_argument("beta must be >= 2");
    if (static_cast<std::uint64_t>(beta) > L) return {};  // no tuples at all

    // Enumeration-size guard: C(L, beta) must stay moderate.
    unsigned __int128 count = 1;
    for (int i = 0; i < beta; ++i) {
        count = count * (L - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i + 1);
        if (count > 10'000'000) throw std::invalid_argument("tuple enumeration too large");
    }

    // Pass 1: flag, per (colour, label), appearances as first and as later entry.
    std::map<std::pair<Colour, std::uint64_t>, std::pair<bool, bool>> roles;
    std::optional<std::pair<Colour, std::uint64_t>> conflict;
    for_each_decreasing_tuple(L, beta, [&](const DecreasingTuple& t) {
        if (conflict) return;
        Colour c = colour_of(t);
        for (std::size_t i = 0; i < t.size(); ++i) {
            auto& role = roles[{c, t[i]}];
            (i == 0 ? role.first : role.second) = true;
            if (role.first && role.second) conflict = {{c, t[i]}};
        }
    });
    if (!conflict) return {};

    // Pass 2: recover one tuple for each role of the conflicting pair.
    LegalityWitness w;
    w.colour = conflict->first;
    w.label = conflict->second;
    for_each_decreasing_tuple(L, beta, [&](const DecreasingTuple& t) {
        if (colour_of(t) != w.colour) return;
        if (t[0] == w.label && w.first_here.empty()) w.first_here = t;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (t[i] == w.label && w.later_here.empty()) w.later_here = t;
    });
    return {false, w};
}

bool first_entry_exists(std::uint64_t first, Colour colour, std::uint64_t L, int beta) {
    if (first == 0 || first > L) throw std::invalid_argument("first entry must lie in {1..L}");
    std::vector<int> targets;
    try {
        targets = mixed_radix_decode(colour, beta - 1, L);
    } catch (const std::invalid_argument&) {
        return false;  // colour lies outside the colour space entirely
    }

    // Slot value x (a candidate for entry i) attains target exponent a
    // exactly when {x+1..first} holds a multiple of 2^a but none of
    // 2^(a+1); both conditions are interval bounds on x.
    std::uint64_t prev = first;
    for (int a : targets) {
        std::uint64_t hi_mult = floor_multiple(first, a);
        if (hi_mult == 0) return false;
        std::uint64_t lo = std::max<std::uint64_t>(1, floor_multiple(first, a + 1));
        std::uint64_t hi = std::min(first - 1, hi_mult - 1);
        std::uint64_t x = std::min(hi, prev - 1);
        if (prev == 1 || x < lo || x > hi) return false;
        prev = x;
    }
    return true;
}

bool first_entry_exists_brute(std::uint64_t first, Colour colour, std::uint64_t L, int beta) {
    if (first == 0 || first > L) throw std::invalid_argument("first entry must lie in {1..L}");
    if (first < static_cast<std::uint64_t>(beta)) return false;  // not enough smaller labels
    bool found = false;
    DecreasingTuple t(beta);
    t[0] = first;
    auto rec = [&](auto&& self, int slot) -> void {
        if (found) return;
        if (slot == beta) {
            found = tuple_colour(t, L) == colour;
            return;
        }
        std::uint64_t need = static_cast<std::uint64_t>(beta - 1 - slot);
        for (std::uint64_t v = t[slot - 1] - 1; v >= need + 1; --v) {
            t[slot] = v;
            self(self, slot + 1);
        }
    };
    rec(rec, 1);
    return found;
}

}  // namespace advicelab
