#include "advicelab/chop_glue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace advicelab {

ChoppedPath chop(const LabeledGraph& ring, const RunReport& report) {
    if (!is_ring(ring) || ring.node_count() % 2 == 0)
        throw std::invalid_argument("chop expects an odd ring");

    const int n = ring.node_count();
    const int diam = n / 2;
    Label selected = 0;
    int ones = 0;
    for (const auto& node : report.nodes) {
        if (node.aborted || node.halt_round > diam)
            throw std::invalid_argument("run must halt within the diameter");
        if (node.output == 1) {
            selected = node.label;
            ++ones;
        }
    }
    if (ones != 1) throw std::invalid_argument("run must select exactly one node");

    auto seq = ring_sequence(ring);
    int pos = static_cast<int>(std::find(seq.begin(), seq.end(), selected) - seq.begin());

    // Walk from one far node around through the selected one to the other.
    ChoppedPath path;
    path.reserve(n);
    for (int step = diam; step >= -diam; --step)
        path.push_back(seq[((pos + step) % n + n) % n]);
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return path;
}

LabeledGraph glue(const ChoppedPath& a, const ChoppedPath& b, Label fresh) {
    if (a.size() < 3 || b.size() < 3 || a.size() % 2 == 0 || b.size() % 2 == 0)
        throw std::invalid_argument("glue expects odd paths of at least 3 nodes");
    std::set<Label> seen(a.begin(), a.end());
    for (Label l : b)
        if (!seen.insert(l).second) throw std::invalid_argument("paths share a label");
    if (!seen.insert(fresh).second) throw std::invalid_argument("fresh label already used");

    // Circular order: a reversed (larger leaf first), then b (smaller
    // leaf first), then the fresh node closing back to a's larger leaf.
    std::vector<Label> seq(a.rbegin(), a.rend());
    seq.insert(seq.end(), b.begin(), b.end());
    seq.push_back(fresh);
    return build_ring(seq);
}

namespace {

bool contains_run(const std::vector<Label>& hay, const std::vector<Label>& needle, bool wrap) {
    const int n = static_cast<int>(hay.size());
    const int m = static_cast<int>(needle.size());
    if (m > n) return false;
    auto scan = [&](const std::vector<Label>& nd) {
        const int starts = wrap ? n : n - m + 1;
        for (int s = 0; s < starts; ++s) {
            bool ok = true;
            for (int i = 0; i < m; ++i) {
                if (hay[wrap ? (s + i) % n : s + i] != nd[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    };
    std::vector<Label> reversed(needle.rbegin(), needle.rend());
    return scan(needle) || scan(reversed);
}

}  // namespace

bool ring_contains_path(const LabeledGraph& ring, const ChoppedPath& path) {
    return contains_run(ring_sequence(ring), path, true);
}

bool path_contains_path(const std::vector<Label>& outer, const ChoppedPath& inner) {
    return contains_run(outer, inner, false);
}

}  // namespace advicelab
