#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace advicelab {

using Label = std::uint64_t;

// Connected simple graph with distinct positive node labels.
// Node indices are 0..n-1; edges keep insertion order so that
// serialization round-trips byte for byte.
class LabeledGraph {
public:
    LabeledGraph(std::vector<Label> labels, std::vector<std::pair<int, int>> edges);

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Label label(int v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // -1 when no node carries the label.
    int index_of_label(Label l) const;
    bool has_edge(int u, int v) const;

    bool operator==(const LabeledGraph& other) const;

private:
    std::vector<Label> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Ring with the given circular label sequence (size >= 3).
LabeledGraph build_ring(const std::vector<Label>& circular_labels);

bool is_ring(const LabeledGraph& g);

// Circular sequence of a ring, starting at the smallest label and
// continuing towards its smaller-labeled neighbor. Deterministic.
std::vector<Label> ring_sequence(const LabeledGraph& g);

std::vector<int> bfs_distances(const LabeledGraph& g, int source);
int eccentricity(const LabeledGraph& g, int v);
int diameter(const LabeledGraph& g);
Label max_label(const LabeledGraph& g);

}  // namespace advicelab
