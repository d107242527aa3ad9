#include <algorithm>
#include <set>
#include <vector>

#include "advicelab/adversary.hpp"
#include "advicelab/chop_glue.hpp"
#include "advicelab/epsilon_rings.hpp"
#include "advicelab/fat_rings.hpp"
#include "advicelab/generators.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/instance_io.hpp"
#include "advicelab/nested_rings.hpp"
#include "advicelab/rng.hpp"
#include "advicelab/select.hpp"
#include "advicelab/sim.hpp"
#include "advicelab/view.hpp"
#include "doctest.h"

using namespace advicelab;

TEST_CASE("nested ring family shapes") {
    auto fam = nested_ring_family(4);
    CHECK(fam.base.node_count() == 9);
    REQUIRE(fam.members.size() == 4);
    for (int k = 1; k <= 4; ++k) {
        const auto& m = fam.members[k - 1];
        CHECK(is_ring(m));
        CHECK(m.node_count() == 2 * k + 1);
        CHECK(diameter(m) == k);
        CHECK(max_label(m) == static_cast<Label>(4 + k + 1));
        CHECK(m.index_of_label(1) >= 0);
    }
    // The deepest member is the base ring with one extra closing edge
    // relabeled into place; at k = D it coincides with the base.
    CHECK(fam.members[3] == fam.base);
}

TEST_CASE("nested views are indistinguishable within the shared radius") {
    for (int D : {2, 3, 5, 9}) {
        auto res = verify_nested_views(nested_ring_family(D));
        CHECK(res.pass);
        CHECK(!res.witness.has_value());
    }
}

TEST_CASE("nested members do differ past the shared radius") {
    auto fam = nested_ring_family(3);
    int v1 = fam.members[0].index_of_label(1);
    int v2 = fam.members[1].index_of_label(1);
    CHECK(!views_equal(ball_view(fam.members[0], v1, 2), ball_view(fam.members[1], v2, 2)));
}

TEST_CASE("fat ring pools and expansion") {
    auto pool = fat_ring_pool(4, 3);
    REQUIRE(pool.size() == 4);
    CHECK(pool[0] == std::vector<Label>{1, 2, 3});
    CHECK(pool[3] == std::vector<Label>{10, 11, 12});

    auto g = fat_ring_expand({pool[0], pool[1], pool[2], pool[3]});
    CHECK(g.node_count() == 12);
    // Every node: 2 clique neighbors + 3 in each adjacent slot.
    for (int v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 8);
    CHECK(diameter(g) == 2);
    CHECK_THROWS_AS(fat_ring_expand({pool[0], pool[1]}), std::invalid_argument);
    CHECK_THROWS_AS(fat_ring_expand({pool[0], pool[1], pool[2]}), std::invalid_argument);
}

TEST_CASE("canonical slot order is rotation and reflection invariant") {
    auto pool = fat_ring_pool(6, 2);
    std::vector<int> seq = {3, 0, 4, 1};
    auto canon = canonical_slot_order(pool, seq);
    std::vector<int> rotated = {4, 1, 3, 0};
    std::vector<int> reflected = {1, 4, 0, 3};
    CHECK(canonical_slot_order(pool, rotated) == canon);
    CHECK(canonical_slot_order(pool, reflected) == canon);
    CHECK(canon[0] == 0);  // slot with label 1 leads
}

TEST_CASE("fat ring enumeration matches the closed-form count") {
    CHECK(fat_ring_count_formula(4, 4) == 3);
    CHECK(fat_ring_count_formula(5, 4) == 15);
    CHECK(fat_ring_count_formula(6, 4) == 45);
    CHECK(fat_ring_count_formula(7, 6) == 420);
    for (auto [m, s] : {std::pair{4, 4}, std::pair{5, 4}, std::pair{6, 4}}) {
        auto seqs = enumerate_fat_slot_sequences(m, s);
        CHECK(seqs.size() == fat_ring_count_formula(m, s));
        std::set<std::vector<int>> uniq(seqs.begin(), seqs.end());
        CHECK(uniq.size() == seqs.size());
    }
}

TEST_CASE("single-slot swaps are invisible from the opposite side") {
    CHECK(verify_fat_views(2, 8, 5, 0, 0).pass);
    CHECK(verify_fat_views(3, 18, 7, 10, 42).pass);
}

TEST_CASE("chopping splits the ring at the far edge from the winner") {
    auto g = build_ring({1, 2, 3});
    Rational alpha(1, 1);
    RunReport rep = run(g, select_oracle(alpha, 16), select_algorithm(alpha, 16),
                        default_round_cap(g));
    REQUIRE(rep.selection_pass);
    ChoppedPath path = chop(g, rep);
    REQUIRE(path.size() == 3);
    CHECK(path[1] == 3);         // winner sits in the middle
    CHECK(path[0] < path[2]);    // smaller leaf first
    CHECK(ring_contains_path(g, path));
}

TEST_CASE("chop keeps the winner centered on bigger rings") {
    Rng rng(5150);
    Rational alpha(1, 1);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 3 + 2 * rng.below(15);  // odd sizes
        Instance inst = random_ring(n, default_label_bound(n), rng);
        const auto& g = inst.graph;
        RunReport rep = run(g, select_oracle(alpha, *inst.label_bound),
                            select_algorithm(alpha, *inst.label_bound), default_round_cap(g));
        REQUIRE(rep.selection_pass);
        ChoppedPath path = chop(g, rep);
        REQUIRE(path.size() == n);
        CHECK(path[n / 2] == max_label(g));
        CHECK(path[0] < path[n - 1]);
        CHECK(ring_contains_path(g, path));
        std::set<Label> labels(path.begin(), path.end());
        CHECK(labels.size() == n);
    }
}

TEST_CASE("gluing forms an odd ring containing both chops") {
    ChoppedPath a = {1, 3, 2};
    ChoppedPath b = {4, 6, 5};
    LabeledGraph x = glue(a, b, 7);
    CHECK(is_ring(x));
    CHECK(x.node_count() == 7);
    CHECK(ring_contains_path(x, a));
    CHECK(ring_contains_path(x, b));
    // The fresh node must sit between the two larger leaves.
    int fresh = x.index_of_label(7);
    std::set<Label> nb;
    for (int u : x.neighbors(fresh)) nb.insert(x.label(u));
    CHECK(nb == std::set<Label>{2, 5});
}

TEST_CASE("glue rejects malformed inputs") {
    CHECK_THROWS_AS(glue({1, 3, 2}, {4, 6, 5}, 3), std::invalid_argument);   // fresh collides
    CHECK_THROWS_AS(glue({1, 3, 2}, {2, 6, 5}, 9), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(glue({1, 3, 2, 4}, {6, 7, 5}, 9), std::invalid_argument);  // even path
    CHECK_THROWS_AS(glue({}, {1, 2, 3}, 9), std::invalid_argument);
}

TEST_CASE("any single cut of a glued ring preserves a whole chop") {
    Rng rng(31337);
    Rational alpha(1, 1);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t na = 3 + 2 * rng.below(6);
        Instance ia = random_ring(na, 64, rng);
        RunReport ra = run(ia.graph, select_oracle(alpha, 64), select_algorithm(alpha, 64),
                           default_round_cap(ia.graph));
        ChoppedPath a = chop(ia.graph, ra);

        // Shift the second ring's labels past the first ring's range.
        std::size_t nb = 3 + 2 * rng.below(6);
        Instance raw = random_ring(nb, 64, rng);
        std::vector<Label> shifted;
        for (Label l : ring_sequence(raw.graph)) shifted.push_back(l + 64);
        auto gb = build_ring(shifted);
        RunReport rb = run(gb, select_oracle(alpha, 256), select_algorithm(alpha, 256),
                           default_round_cap(gb));
        ChoppedPath b = chop(gb, rb);

        Label fresh = 200;
        LabeledGraph x = glue(a, b, fresh);
        CHECK(x.node_count() % 2 == 1);
        CHECK(x.node_count() == static_cast<int>(na + nb + 1));

        auto seq = ring_sequence(x);
        int n = static_cast<int>(seq.size());
        for (int cut = 0; cut < n; ++cut) {
            // Remove the edge between seq[cut] and seq[cut+1].
            std::vector<Label> open;
            for (int i = 0; i < n; ++i) open.push_back(seq[(cut + 1 + i) % n]);
            CHECK((path_contains_path(open, a) || path_contains_path(open, b)));
        }
    }
}

TEST_CASE("containment scans respect direction and wraparound") {
    auto ring = build_ring({1, 2, 3, 4, 5});
    CHECK(ring_contains_path(ring, {2, 3, 4}));
    CHECK(ring_contains_path(ring, {4, 3, 2}));   // reversed
    CHECK(ring_contains_path(ring, {5, 1, 2}));   // wraps
    CHECK(!ring_contains_path(ring, {2, 4, 3}));
    CHECK(path_contains_path({1, 2, 3, 4, 5}, {3, 2, 1}));
    CHECK(!path_contains_path({1, 2, 3, 4, 5}, {5, 1}));  // no wrap in a path
}

TEST_CASE("the no-advice strawman falls to the adversary immediately") {
    AdversaryConfig cfg{1, 4};
    auto res = run_adversary(local_max_algorithm(), local_max_oracle(), cfg);
    REQUIRE(res.outcome == AdversaryOutcome::counterexample);
    REQUIRE(res.instance.has_value());
    CHECK(res.instance->node_count() % 2 == 1);
    CHECK(!res.instance_report.selection_pass);
    int winners = 0;
    for (const auto& n : res.instance_report.nodes)
        if (n.output == 1) ++winners;
    CHECK(winners >= 2);
}

TEST_CASE("adversary runs are reproducible") {
    AdversaryConfig cfg{1, 8};
    auto r1 = run_adversary(local_max_algorithm(), local_max_oracle(), cfg);
    auto r2 = run_adversary(local_max_algorithm(), local_max_oracle(), cfg);
    REQUIRE(r1.outcome == r2.outcome);
    REQUIRE(r1.instance.has_value());
    CHECK(serialize_instance(*r1.instance) == serialize_instance(*r2.instance));
}

TEST_CASE("the advised selector starves the adversary instead of losing") {
    AdversaryConfig cfg{1, 8};
    Rational alpha(1, 1);
    std::uint64_t L = 256;
    auto res = run_adversary(select_algorithm(alpha, L), select_oracle(alpha, L), cfg);
    CHECK(res.outcome != AdversaryOutcome::counterexample);
}

TEST_CASE("epsilon segments and family shape") {
    CHECK(epsilon_segment(81, 3, 1) ==
          std::vector<Label>{162, 163, 164, 168, 167, 166, 165});
    auto fam = epsilon_family(81, Rational(1, 4));
    CHECK(fam.x == 3);
    CHECK(fam.y == 9);
    REQUIRE(fam.members.size() == 9);
    for (const auto& m : fam.members) {
        CHECK(is_ring(m));
        CHECK(m.node_count() == 162);
    }
    // Later members spend more of the ring on decorated segments; the
    // decorated peak of P_i carries 2Di + 2x, past the endpoint 2Di + x.
    CHECK(max_label(fam.members[8]) == 2 * 81 * 9 + 2 * 3);
}

TEST_CASE("epsilon family rejects infeasible parameters by name") {
    CHECK_THROWS_WITH_AS(epsilon_family(81, Rational(1, 2)),
                         doctest::Contains("eps"), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_family(4, Rational(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_family(81, Rational(1, 4), 100), std::invalid_argument);
}

TEST_CASE("epsilon views agree on the shared segments") {
    auto fam = epsilon_family(16, Rational(1, 4));
    auto res = verify_epsilon_views(fam);
    CHECK(res.pass);
}

TEST_CASE("replayed advice fools the named-winner strawman") {
    auto fam = epsilon_family(16, Rational(1, 4));
    auto demo = epsilon_demo(fam, 1, static_cast<int>(fam.y));
    CHECK(demo.views_match);
    CHECK(demo.honest_run_passes);
    CHECK(demo.decoy_outputs_one);
    CHECK(!demo.decoy_is_largest);
    CHECK(demo.selection_fails);
    CHECK(demo.demonstrated());
    CHECK(demo.decoy == 2 * 16 + 2 * 2);
}

TEST_CASE("rng sampling is well-behaved") {
    Rng rng(1);
    auto sample = rng.sample_distinct(50, 20);
    CHECK(sample.size() == 20);
    std::set<std::uint64_t> uniq(sample.begin(), sample.end());
    CHECK(uniq.size() == 20);
    for (auto v : sample) {
        CHECK(v >= 1);
        CHECK(v <= 50);
    }
    CHECK_THROWS_AS(rng.sample_distinct(5, 6), std::invalid_argument);

    // Sparse sampling from a huge universe stays exact.
    auto sparse = rng.sample_distinct(std::uint64_t{1} << 40, 100);
    std::set<std::uint64_t> su(sparse.begin(), sparse.end());
    CHECK(su.size() == 100);

    Rng a(9), b(9);
    CHECK(a.sample_distinct(1000, 50) == b.sample_distinct(1000, 50));
}
