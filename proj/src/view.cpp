#include "advicelab/view.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace advicelab {

std::vector<Label> View::all_labels() const {
    std::vector<Label> out;
    out.reserve(inner_labels.size() + boundary_labels.size());
    std::merge(inner_labels.begin(), inner_labels.end(), boundary_labels.begin(),
               boundary_labels.end(), std::back_inserter(out));
    return out;
}

std::string View::canonical_encoding() const {
    std::ostringstream os;
    os << "root=" << root_label << " r=" << radius << " inner=";
    for (Label l : inner_labels) os << l << ',';
    os << " boundary=";
    for (Label l : boundary_labels) os << l << ',';
    os << " edges=";
    for (auto [a, b] : edges) os << a << '-' << b << ',';
    os << " degs=";
    for (auto [l, d] : boundary_degrees) os << l << ':' << d << ',';
    return os.str();
}

View ball_view(const LabeledGraph& g, int v, int radius) {
    if (v < 0 || v >= g.node_count()) throw std::invalid_argument("node out of range");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");

    // BFS clipped at the radius; dist stays -1 outside the ball.
    std::vector<int> dist(g.node_count(), -1);
    std::vector<int> ball;
    dist[v] = 0;
    ball.push_back(v);
    for (std::size_t head = 0; head < ball.size(); ++head) {
        int u = ball[head];
        if (dist[u] == radius) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                ball.push_back(w);
            }
        }
    }

    View view;
    view.root_label = g.label(v);
    view.radius = radius;
    for (int u : ball) {
        if (dist[u] < radius) {
            view.inner_labels.push_back(g.label(u));
        } else {
            view.boundary_labels.push_back(g.label(u));
            view.boundary_degrees.emplace_back(g.label(u), g.degree(u));
        }
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) continue;
            if (dist[u] == radius && dist[w] == radius) continue;
            Label a = g.label(u), b = g.label(w);
            if (a < b) view.edges.emplace_back(a, b);
        }
    }
    std::sort(view.inner_labels.begin(), view.inner_labels.end());
    std::sort(view.boundary_labels.begin(), view.boundary_labels.end());
    std::sort(view.edges.begin(), view.edges.end());
    std::sort(view.boundary_degrees.begin(), view.boundary_degrees.end());
    return view;
}

std::set<Label> label_set(const LabeledGraph& g, int v, int radius) {
    auto dist = bfs_distances(g, v);
    std::set<Label> out;
    for (int u = 0; u < g.node_count(); ++u)
        if (dist[u] >= 0 && dist[u] <= radius) out.insert(g.label(u));
    return out;
}

bool views_equal(const View& a, const View& b) {
    return a.canonical_encoding() == b.canonical_encoding();
}

}  // namespace advicelab
