#include "advicelab/adversary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace advicelab {

AdviceOracle local_max_oracle() {
    return [](const LabeledGraph&) { return BitString{}; };
}

AlgorithmUnderTest local_max_algorithm() {
    return [](const AdviceString&, int round, const View& view) {
        if (round < 1) return Decision::run_on();
        return Decision::halt(view.root_label == view.all_labels().back() ? 1 : 0);
    };
}

namespace {

struct Member {
    LabeledGraph ring;
    RunReport report;
};

// Runs the algorithm on a ring; nullopt when the verdict already fails,
// which is a finished counterexample.
std::optional<Member> classify(const LabeledGraph& ring, const AlgorithmUnderTest& alg,
                               const AdviceOracle& oracle, AdversaryResult& result) {
    RunReport report = run(ring, oracle, alg, default_round_cap(ring));
    if (!report.selection_pass) {
        result.outcome = AdversaryOutcome::counterexample;
        result.instance = ring;
        result.instance_report = report;
        return std::nullopt;
    }
    if (report.time > diameter(ring))
        throw std::invalid_argument("algorithm exceeded the diameter on a tested ring");
    return Member{ring, report};
}

// Largest same-advice class; ties go to the lexicographically smallest
// advice string so reruns pick the same class.
std::vector<Member> largest_class(std::vector<Member> members, const AdviceOracle& oracle) {
    std::map<BitString, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < members.size(); ++i)
        classes[oracle(members[i].ring)].push_back(i);
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [advice, idx] : classes)
        if (!best || idx.size() > best->size()) best = &idx;
    std::vector<Member> out;
    for (std::size_t i : *best) out.push_back(std::move(members[i]));
    return out;
}

Label min_label(const LabeledGraph& g) {
    return *std::min_element(g.labels().begin(), g.labels().end());
}

}  // namespace

AdversaryResult run_adversary(const AlgorithmUnderTest& alg, const AdviceOracle& oracle,
                              const AdversaryConfig& config) {
    if (config.budget < 1 || config.pool < 2) throw std::invalid_argument("need budget >= 1 and pool >= 2");

    AdversaryResult result;

    // Stage 1: disjoint triangles (3i+1, 3i+2, 3i+3).
    std::vector<Member> members;
    for (int i = 0; i < config.pool; ++i) {
        Label base = static_cast<Label>(3 * i);
        auto m = classify(build_ring({base + 1, base + 2, base + 3}), alg, oracle, result);
        if (!m) return result;
        members.push_back(std::move(*m));
    }
    members = largest_class(std::move(members), oracle);
    {
        std::vector<LabeledGraph> kept;
        for (const auto& m : members) kept.push_back(m.ring);
        result.stage_sets.push_back(std::move(kept));
    }

    Label next_fresh = static_cast<Label>(3 * config.pool);  // gluing labels start above the triangles

    for (int stage = 2; stage <= config.budget; ++stage) {
        if (members.size() < 2) {
            result.outcome = AdversaryOutcome::starved;
            result.starved_stage = stage;
            return result;
        }
        std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
            return min_label(a.ring) < min_label(b.ring);
        });
        std::vector<Member> glued;
        for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
            ++next_fresh;
            LabeledGraph ring = glue(chop(members[i].ring, members[i].report),
                                     chop(members[i + 1].ring, members[i + 1].report), next_fresh);
            auto m = classify(ring, alg, oracle, result);
            if (!m) return result;
            glued.push_back(std::move(*m));
        }
        members = largest_class(std::move(glued), oracle);
        std::vector<LabeledGraph> kept;
        for (const auto& m : members) kept.push_back(m.ring);
        result.stage_sets.push_back(std::move(kept));
    }

    if (members.size() < 2) {
        result.outcome = AdversaryOutcome::starved;
        result.starved_stage = config.budget + 1;
        return result;
    }

    // Final ring: two survivors' chops welded through a fresh path.
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
        return min_label(a.ring) < min_label(b.ring);
    });
    ChoppedPath a = chop(members[0].ring, members[0].report);
    ChoppedPath b = chop(members[1].ring, members[1].report);
    std::set<Label> used(a.begin(), a.end());
    used.insert(b.begin(), b.end());
    Label candidate = 1;
    while (used.count(candidate)) ++candidate;
    result.fresh_labels = {candidate};

    std::vector<Label> seq(a.rbegin(), a.rend());
    seq.insert(seq.end(), b.begin(), b.end());
    seq.push_back(candidate);
    LabeledGraph final_ring = build_ring(seq);

    RunReport report = run(final_ring, oracle, alg, default_round_cap(final_ring));
    if (!report.selection_pass) {
        result.outcome = AdversaryOutcome::counterexample;
        result.instance = final_ring;
        result.instance_report = report;
        return result;
    }
    result.outcome = AdversaryOutcome::survived;
    result.instance = final_ring;
    result.instance_report = report;
    return result;
}

}  // namespace advicelab
