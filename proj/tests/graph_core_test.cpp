#include <set>
#include <vector>

#include "advicelab/generators.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/instance_io.hpp"
#include "advicelab/rng.hpp"
#include "advicelab/view.hpp"
#include "doctest.h"

using namespace advicelab;

namespace {

LabeledGraph path4() {
    return LabeledGraph({10, 20, 30, 40}, {{0, 1}, {1, 2}, {2, 3}});
}

LabeledGraph k4() {
    return LabeledGraph({1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(LabeledGraph({1, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph({1, 2}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph({1, 2}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph({1, 2, 3}, {{0, 1}}), std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(LabeledGraph({1, 2}, {{0, 5}}), std::invalid_argument);    // out of range
    CHECK_THROWS_AS(LabeledGraph({}, {}), std::invalid_argument);
}

TEST_CASE("distances, eccentricity and diameter on known shapes") {
    auto p = path4();
    CHECK(bfs_distances(p, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(eccentricity(p, 0) == 3);
    CHECK(eccentricity(p, 1) == 2);
    CHECK(diameter(p) == 3);

    auto ring6 = build_ring({1, 2, 3, 4, 5, 6});
    CHECK(diameter(ring6) == 3);
    CHECK(eccentricity(ring6, 0) == 3);

    CHECK(diameter(k4()) == 1);
    CHECK(diameter(LabeledGraph({7, 9}, {{0, 1}})) == 1);
}

TEST_CASE("label lookups") {
    auto p = path4();
    CHECK(max_label(p) == 40);
    CHECK(p.index_of_label(30) == 2);
    CHECK(p.index_of_label(99) == -1);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 2);
}

TEST_CASE("rings are recognized and unrolled from the smallest label") {
    auto r = build_ring({7, 1, 5, 2, 6, 3});
    CHECK(is_ring(r));
    CHECK(!is_ring(path4()));
    CHECK(!is_ring(k4()));
    auto seq = ring_sequence(r);
    REQUIRE(seq.size() == 6);
    CHECK(seq[0] == 1);
    // Starts toward the smaller neighbor of label 1 (5 vs 7).
    CHECK(seq[1] == 5);
    CHECK(seq == std::vector<Label>{1, 5, 2, 6, 3, 7});
    CHECK_THROWS_AS(build_ring({1, 2}), std::invalid_argument);
}

TEST_CASE("graph equality ignores edge order but not structure") {
    LabeledGraph a({1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}});
    LabeledGraph b({1, 2, 3}, {{2, 0}, {1, 0}, {1, 2}});
    CHECK(a == b);
    LabeledGraph c({1, 2, 4}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!(a == c));
}

TEST_CASE("instances serialize and parse back byte-identically") {
    auto p = path4();
    std::string text = serialize_instance(p, 64);
    Instance inst = parse_instance(text);
    CHECK(inst.graph == p);
    REQUIRE(inst.label_bound.has_value());
    CHECK(*inst.label_bound == 64);
    CHECK(serialize_instance(inst.graph, inst.label_bound) == text);
}

TEST_CASE("ring shorthand parses to the same graph") {
    Instance a = parse_instance("ring 7 1 5 2 6 3\n");
    CHECK(a.graph == build_ring({7, 1, 5, 2, 6, 3}));
    CHECK(!a.label_bound.has_value());
}

TEST_CASE("parser reports malformed input with context") {
    CHECK_THROWS_AS(parse_instance("graph 2 1\nnode 0 1\nnode 1 2\n"), ParseError);  // missing edge
    CHECK_THROWS_AS(parse_instance("graph x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("ring 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("graph 2 1\nnode 0 1\nnode 1 2\nedge 0 1\nedge 0 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("frob 1\n"), ParseError);
    // Trailing tokens on a directive are an error, not silently dropped.
    CHECK_THROWS_AS(parse_instance("graph 2 1 9\nnode 0 1\nnode 1 2\nedge 0 1\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    Instance inst = parse_instance("# a ring\n\nring 3 1 2\n# done\n");
    CHECK(is_ring(inst.graph));
}

TEST_CASE("radius-0 views carry just the root and its degree promise") {
    auto r = build_ring({1, 2, 3, 4, 5});
    View v = ball_view(r, 0, 0);
    CHECK(v.root_label == 1);
    CHECK(v.inner_labels.empty());
    CHECK(v.boundary_labels == std::vector<Label>{1});
    CHECK(v.edges.empty());
    REQUIRE(v.boundary_degrees.size() == 1);
    CHECK(v.boundary_degrees[0] == std::pair<Label, int>{1, 2});
}

TEST_CASE("frontier-frontier edges are hidden, frontier degrees are not") {
    View v = ball_view(k4(), 0, 1);
    CHECK(v.root_label == 1);
    CHECK(v.inner_labels == std::vector<Label>{1});
    CHECK(v.boundary_labels == std::vector<Label>{2, 3, 4});
    // Only the three spokes; the triangle among the frontier is invisible.
    REQUIRE(v.edges.size() == 3);
    for (const auto& [a, b] : v.edges) CHECK(a == 1);
    for (const auto& [l, d] : v.boundary_degrees) {
        (void)l;
        CHECK(d == 3);
    }
}

TEST_CASE("a full-radius view knows the whole graph") {
    auto r = build_ring({4, 9, 2, 7, 3});
    View v = ball_view(r, 1, 2);
    CHECK(v.all_labels() == std::vector<Label>{2, 3, 4, 7, 9});
    CHECK(v.edges.size() == 4);  // 5 ring edges minus the one frontier-frontier edge
    View w = ball_view(r, 1, 3);
    CHECK(w.edges.size() == 5);
    CHECK(w.boundary_labels.empty());
}

TEST_CASE("views are equal exactly when their encodings are") {
    auto r1 = build_ring({1, 2, 3, 4, 5, 6});
    auto r2 = build_ring({1, 2, 3, 4, 5, 7});
    View a = ball_view(r1, 2, 1);  // sees 2,3,4
    View b = ball_view(r2, 2, 1);
    CHECK(views_equal(a, b));
    CHECK(a.canonical_encoding() == b.canonical_encoding());
    View c = ball_view(r1, 2, 2);
    CHECK(!views_equal(a, c));
}

TEST_CASE("label sets grow with the radius until saturation") {
    auto r = build_ring({1, 2, 3, 4, 5, 6, 7});
    CHECK(label_set(r, 0, 0) == std::set<Label>{1});
    CHECK(label_set(r, 0, 1) == std::set<Label>{1, 2, 7});
    CHECK(label_set(r, 0, 3).size() == 7);
    CHECK(label_set(r, 0, 9).size() == 7);
}

TEST_CASE("generated rings and graphs satisfy their contracts") {
    Rng rng(42);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 3 + rng.below(60);
        Instance inst = random_ring(n, default_label_bound(n), rng);
        CHECK(is_ring(inst.graph));
        CHECK(inst.graph.node_count() == static_cast<int>(n));
        CHECK(max_label(inst.graph) <= *inst.label_bound);
    }
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + rng.below(60);
        std::size_t extra = rng.below(n);
        Instance inst = random_connected_graph(n, extra, default_label_bound(n), rng);
        CHECK(inst.graph.node_count() == static_cast<int>(n));
        CHECK(inst.graph.edge_count() >= static_cast<int>(n) - 1);
        CHECK(max_label(inst.graph) <= *inst.label_bound);
    }
}

TEST_CASE("generation is reproducible from the seed") {
    Rng a(7), b(7), c(8);
    Instance ia = random_ring(20, 128, a);
    Instance ib = random_ring(20, 128, b);
    Instance ic = random_ring(20, 128, c);
    CHECK(ia.graph == ib.graph);
    CHECK(serialize_instance(ia.graph, ia.label_bound) ==
          serialize_instance(ib.graph, ib.label_bound));
    CHECK(!(ia.graph == ic.graph));
}

TEST_CASE("default label bound is the next power of two past 4n") {
    CHECK(default_label_bound(3) == 16);
    CHECK(default_label_bound(4) == 16);
    CHECK(default_label_bound(5) == 32);
    CHECK(default_label_bound(100) == 512);
}
