#include "advicelab/epsilon_rings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "advicelab/codec.hpp"
#include "advicelab/view.hpp"

namespace advicelab {

std::vector<Label> epsilon_segment(std::uint64_t D, std::uint64_t x, std::uint64_t i) {
    // Ascending run 2Di..2Di+x-1, then descending 2Di+2x..2Di+x; the
    // middle of the 2x+1 nodes carries the segment's largest label.
    std::vector<Label> seq;
    seq.reserve(2 * x + 1);
    const std::uint64_t base = 2 * D * i;
    for (std::uint64_t l = base; l < base + x; ++l) seq.push_back(l);
    for (std::uint64_t l = base + 2 * x; l >= base + x; --l) seq.push_back(l);
    return seq;
}

EpsilonFamily epsilon_family(std::uint64_t D, const Rational& eps, std::uint64_t L) {
    if (2 * eps.num >= eps.den)
        throw std::invalid_argument("eps must satisfy eps < 1/2");
    EpsilonFamily fam;
    fam.D = D;
    fam.eps = eps;
    fam.x = ceil_pow(D, eps);
    fam.y = ceil_pow(D, Rational(eps.den - 2 * eps.num, eps.den));
    if (fam.y < 2) throw std::invalid_argument("infeasible: y >= 2 fails (D too small for this eps)");
    if (fam.y * (1 + 2 * fam.x) >= 2 * D)
        throw std::invalid_argument("infeasible: y*(1+2x) < 2D fails");
    const std::uint64_t label_top = 2 * D * (fam.y + 1);
    if (L == 0) L = std::uint64_t(1) << ceil_log2(label_top);
    if (L < label_top)
        throw std::invalid_argument("infeasible: L >= 2D*(y+1) fails");
    fam.L = L;

    for (std::uint64_t i = 1; i <= fam.y; ++i) {
        // Segments P_1..P_i joined in a path, then closed through the
        // low-label filler path into a ring of exactly 2D nodes.
        std::vector<Label> seq;
        for (std::uint64_t j = 1; j <= i; ++j) {
            auto seg = epsilon_segment(D, fam.x, j);
            seq.insert(seq.end(), seg.begin(), seg.end());
        }
        const std::uint64_t filler = 2 * D - i * (2 * fam.x + 1);
        // Circular order: 1..filler, then the segment path from P_1's
        // start (2D) to P_i's end (2Di+x). Wrapping gives the closing
        // edges {filler, 2D} and {2Di+x, 1}.
        std::vector<Label> ring;
        ring.reserve(2 * D);
        for (std::uint64_t l = 1; l <= filler; ++l) ring.push_back(l);
        ring.insert(ring.end(), seq.begin(), seq.end());
        fam.members.push_back(build_ring(ring));
    }
    return fam;
}

EpsilonViewsResult verify_epsilon_views(const EpsilonFamily& fam) {
    for (int i = 1; i <= static_cast<int>(fam.y); ++i) {
        const Label mid = 2 * fam.D * static_cast<std::uint64_t>(i) + 2 * fam.x;
        std::string reference;
        for (int j = i; j <= static_cast<int>(fam.y); ++j) {
            const auto& g = fam.members[j - 1];
            std::string enc =
                ball_view(g, g.index_of_label(mid), static_cast<int>(fam.x)).canonical_encoding();
            if (reference.empty()) {
                reference = enc;
            } else if (enc != reference) {
                return {false, std::make_pair(i, j)};
            }
        }
    }
    return {};
}

AdviceOracle advised_select_oracle(std::uint64_t L) {
    return [L](const LabeledGraph& g) {
        Label top = max_label(g);
        if (top > L) throw std::invalid_argument("label exceeds L");
        BitString advice;
        advice.append_uint(top - 1, ceil_log2(L));
        return advice;
    };
}

AlgorithmUnderTest advised_select_algorithm(std::uint64_t L, std::uint64_t x) {
    const int width = ceil_log2(L);
    return [width, x](const AdviceString& advice, int round, const View& view) {
        if (static_cast<std::uint64_t>(round) < x)
            return Decision::sleep_until(static_cast<int>(x));
        BitReader r(advice);
        Label named;
        try {
            named = static_cast<Label>(r.take_uint(width)) + 1;
        } catch (const CodecError&) {
            return Decision::fail();
        }
        bool local_top = view.root_label == view.all_labels().back();
        return Decision::halt(local_top && view.root_label == named ? 1 : 0);
    };
}

EpsilonDemo epsilon_demo(const EpsilonFamily& fam, int a, int b) {
    if (a < 1 || b <= a || b > static_cast<int>(fam.y))
        throw std::invalid_argument("need 1 <= a < b <= y");
    const auto& ra = fam.members[a - 1];
    const auto& rb = fam.members[b - 1];
    const Label decoy = 2 * fam.D * static_cast<std::uint64_t>(a) + 2 * fam.x;

    EpsilonDemo demo;
    demo.decoy = decoy;

    demo.views_match = views_equal(
        ball_view(ra, ra.index_of_label(decoy), static_cast<int>(fam.x)),
        ball_view(rb, rb.index_of_label(decoy), static_cast<int>(fam.x)));

    auto alg = advised_select_algorithm(fam.L, fam.x);
    auto oracle = advised_select_oracle(fam.L);

    RunReport honest = run(ra, oracle, alg, default_round_cap(ra));
    demo.honest_run_passes = honest.selection_pass;

    // Same advice, later ring: replay R_a's advice string on R_b.
    AdviceString replayed = oracle(ra);
    RunReport crossed = run(
        rb, [&replayed](const LabeledGraph&) { return replayed; }, alg, default_round_cap(rb));
    demo.selection_fails = !crossed.selection_pass;
    for (const auto& n : crossed.nodes) {
        if (n.label == decoy) demo.decoy_outputs_one = n.output == 1;
    }
    demo.decoy_is_largest = decoy == max_label(rb);
    return demo;
}

}  // namespace advicelab
