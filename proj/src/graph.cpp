#include "advicelab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace advicelab {

LabeledGraph::LabeledGraph(std::vector<Label> labels, std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw std::invalid_argument("graph must have at least one node");

    std::set<Label> seen;
    for (Label l : labels_) {
        if (l == 0) throw std::invalid_argument("labels must be positive");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label");
    }

    adj_.assign(n, {});
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loop");
        auto norm = std::minmax(u, v);
        if (!edge_set.insert({norm.first, norm.second}).second)
            throw std::invalid_argument("parallel edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    auto dist = bfs_distances(*this, 0);
    for (int d : dist)
        if (d < 0) throw std::invalid_argument("graph must be connected");
}

int LabeledGraph::index_of_label(Label l) const {
    for (int v = 0; v < node_count(); ++v)
        if (labels_[v] == l) return v;
    return -1;
}

bool LabeledGraph::has_edge(int u, int v) const {
    for (int w : adj_[u])
        if (w == v) return true;
    return false;
}

bool LabeledGraph::operator==(const LabeledGraph& other) const {
    if (labels_ != other.labels_) return false;
    auto norm = [](const std::vector<std::pair<int, int>>& es) {
        std::set<std::pair<int, int>> out;
        for (auto [u, v] : es) out.insert(std::minmax(u, v));
        return out;
    };
    return norm(edges_) == norm(other.edges_);
}

LabeledGraph build_ring(const std::vector<Label>& circular_labels) {
    const int n = static_cast<int>(circular_labels.size());
    if (n < 3) throw std::invalid_argument("ring needs at least 3 nodes");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return LabeledGraph(circular_labels, std::move(edges));
}

bool is_ring(const LabeledGraph& g) {
    if (g.node_count() < 3) return false;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;  // connected and 2-regular: a single cycle
}

std::vector<Label> ring_sequence(const LabeledGraph& g) {
    if (!is_ring(g)) throw std::invalid_argument("not a ring");
    int start = 0;
    for (int v = 1; v < g.node_count(); ++v)
        if (g.label(v) < g.label(start)) start = v;
    const auto& nb = g.neighbors(start);
    int next = (g.label(nb[0]) < g.label(nb[1])) ? nb[0] : nb[1];

    std::vector<Label> seq;
    seq.reserve(g.node_count());
    int prev = start, cur = next;
    seq.push_back(g.label(start));
    while (cur != start) {
        seq.push_back(g.label(cur));
        const auto& cn = g.neighbors(cur);
        int step = (cn[0] == prev) ? cn[1] : cn[0];
        prev = cur;
        cur = step;
    }
    return seq;
}

std::vector<int> bfs_distances(const LabeledGraph& g, int source) {
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int eccentricity(const LabeledGraph& g, int v) {
    auto dist = bfs_distances(g, v);
    return *std::max_element(dist.begin(), dist.end());
}

int diameter(const LabeledGraph& g) {
    int best = 0;
    for (int v = 0; v < g.node_count(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

Label max_label(const LabeledGraph& g) {
    return *std::max_element(g.labels().begin(), g.labels().end());
}

}  // namespace advicelab
