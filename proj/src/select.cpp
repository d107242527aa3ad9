#include "advicelab/select.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace advicelab {

std::uint64_t round_budget(const Rational& alpha, int log2_diam) {
    return floor_mul_pow2(alpha, log2_diam);
}

std::vector<Label> candidate_set(const LabeledGraph& g, int r) {
    if (!is_ring(g)) throw std::invalid_argument("candidate_set expects a ring");
    if (r < 0) throw std::invalid_argument("radius must be >= 0");
    const auto seq = ring_sequence(g);
    const int n = static_cast<int>(seq.size());

    std::vector<Label> out;
    if (2 * r + 1 >= n) {
        out.push_back(*std::max_element(seq.begin(), seq.end()));
        return out;
    }

    // Window maximum over every circular window of width 2r+1.
    const int w = 2 * r + 1;
    std::deque<int> dq;  // positions into the doubled sequence, labels decreasing
    auto at = [&](int i) { return seq[i % n]; };
    for (int e = 0; e < n + w - 1; ++e) {
        while (!dq.empty() && at(dq.back()) <= at(e)) dq.pop_back();
        dq.push_back(e);
        int s = e - w + 1;
        if (s < 0) continue;
        if (dq.front() < s) dq.pop_front();
        int center = (s + r) % n;
        if (seq[center] == at(dq.front())) out.push_back(seq[center]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Label> candidate_set_brute(const LabeledGraph& g, int r) {
    if (!is_ring(g)) throw std::invalid_argument("candidate_set expects a ring");
    std::vector<Label> out;
    for (int v = 0; v < g.node_count(); ++v) {
        auto seen = label_set(g, v, r);
        if (*seen.rbegin() == g.label(v)) out.push_back(g.label(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SelectAdvice build_select_advice(const LabeledGraph& g, const Rational& alpha, std::uint64_t L) {
    if (!is_ring(g)) throw std::invalid_argument("selection advice expects a ring");
    if (max_label(g) > L) throw std::invalid_argument("label exceeds L");
    const int beta = beta_of(alpha);

    SelectAdvice a;
    a.log2_diam = floor_log2(static_cast<std::uint64_t>(diameter(g)));
    const std::uint64_t r = round_budget(alpha, a.log2_diam);

    auto candidates = candidate_set(g, static_cast<int>(r));
    const Label top = candidates.back();

    if (top < static_cast<Label>(beta)) {
        a.fallback = true;
        a.tiny_max = top;
        return a;
    }
    if (candidates.size() > static_cast<std::size_t>(beta - 1))
        throw std::logic_error("candidate bound violated");

    // Tuple slots: every candidate below the top one, then the largest
    // unused values below the top until beta-1 slots are filled.
    std::set<Label> used(candidates.begin(), candidates.end());
    DecreasingTuple t;
    t.push_back(top);
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it)
        if (*it != top) t.push_back(*it);
    for (Label v = top - 1; t.size() < static_cast<std::size_t>(beta); --v)
        if (!used.count(v)) t.push_back(v);
    std::sort(t.begin() + 1, t.end(), std::greater<>());

    a.colour = tuple_colour(t, L);
    return a;
}

AdviceOracle select_oracle(const Rational& alpha, std::uint64_t L) {
    return [alpha, L](const LabeledGraph& g) {
        return pack_select_advice(build_select_advice(g, alpha, L), alpha, L);
    };
}

AlgorithmUnderTest select_algorithm(const Rational& alpha, std::uint64_t L) {
    const int beta = beta_of(alpha);
    return [alpha, L, beta](const AdviceString& advice, int round, const View& view) {
        SelectAdvice a;
        try {
            a = unpack_select_advice(advice, alpha, L);
        } catch (const CodecError&) {
            return Decision::fail();
        }
        std::uint64_t wait = round_budget(alpha, a.log2_diam);
        wait = std::min<std::uint64_t>(wait, 1u << 30);  // any such run aborts at the cap anyway
        if (static_cast<std::uint64_t>(round) < wait)
            return Decision::sleep_until(static_cast<int>(wait));

        const Label own = view.root_label;
        const auto seen = view.all_labels();
        if (own != seen.back()) return Decision::halt(0);
        bool is_top;
        if (a.fallback) {
            is_top = own == a.tiny_max;
        } else {
            is_top = first_entry_exists(own, a.colour, L, beta);
        }
        return Decision::halt(is_top ? 1 : 0);
    };
}

}  // namespace advicelab
