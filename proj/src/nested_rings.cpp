#include "advicelab/nested_rings.hpp"

#include <stdexcept>
#include <string>

#include "advicelab/view.hpp"

namespace advicelab {

NestedRingFamily nested_ring_family(int D) {
    if (D < 1) throw std::invalid_argument("D must be >= 1");

    // Base circular order: 1, 2, ..., D+1, 2D+1, 2D, ..., D+2.
    std::vector<Label> base_seq;
    base_seq.reserve(2 * D + 1);
    for (int l = 1; l <= D + 1; ++l) base_seq.push_back(static_cast<Label>(l));
    for (int l = 2 * D + 1; l >= D + 2; --l) base_seq.push_back(static_cast<Label>(l));

    NestedRingFamily family{D, build_ring(base_seq), {}};
    family.members.reserve(D);
    for (int k = 1; k <= D; ++k) {
        // Ball of radius k around label 1, closed by the edge {k+1, D+k+1}.
        std::vector<Label> seq;
        seq.reserve(2 * k + 1);
        for (int l = 1; l <= k + 1; ++l) seq.push_back(static_cast<Label>(l));
        for (int l = D + k + 1; l >= D + 2; --l) seq.push_back(static_cast<Label>(l));
        family.members.push_back(build_ring(seq));
    }
    return family;
}

NestedViewsResult verify_nested_views(const NestedRingFamily& family) {
    const int D = family.D;
    // Per radius r, every member i >= max(1, r) must show label 1 the
    // same view; compare each against the smallest such member.
    for (int r = 0; r <= D; ++r) {
        std::string reference;
        int ref_i = 0;
        for (int i = std::max(1, r); i <= D; ++i) {
            const auto& g = family.members[i - 1];
            int v = g.index_of_label(1);
            std::string enc = ball_view(g, v, r).canonical_encoding();
            if (reference.empty()) {
                reference = enc;
                ref_i = i;
            } else if (enc != reference) {
                return {false, NestedViewsWitness{ref_i, i, r}};
            }
        }
    }
    return {};
}

}  // namespace advicelab
