#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "advicelab/graph.hpp"

namespace advicelab {

// Everything a node can have learned after `radius` synchronous rounds:
// the ball around it minus edges joining two frontier nodes, plus the
// full degrees of frontier nodes. All fields are kept sorted so that
// equal knowledge means equal canonical encodings.
struct View {
    Label root_label = 0;
    int radius = 0;
    std::vector<Label> inner_labels;                 // distance < radius
    std::vector<Label> boundary_labels;              // distance == radius
    std::vector<std::pair<Label, Label>> edges;      // label pairs, first < second
    std::vector<std::pair<Label, int>> boundary_degrees;

    std::vector<Label> all_labels() const;           // inner + boundary, sorted
    std::string canonical_encoding() const;
};

View ball_view(const LabeledGraph& g, int v, int radius);

// Labels within distance r of v.
std::set<Label> label_set(const LabeledGraph& g, int v, int radius);

bool views_equal(const View& a, const View& b);

}  // namespace advicelab
