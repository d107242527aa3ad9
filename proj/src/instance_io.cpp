#include "advicelab/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace advicelab {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string serialize_instance(const LabeledGraph& g, std::optional<std::uint64_t> label_bound) {
    std::ostringstream os;
    os << "graph " << g.node_count() << ' ' << g.edge_count() << '\n';
    if (label_bound) os << "L " << *label_bound << '\n';
    for (int v = 0; v < g.node_count(); ++v) os << "node " << v << ' ' << g.label(v) << '\n';
    for (auto [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
    return os.str();
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    bool have_header = false;
    bool ring_form = false;
    long long n = 0, m = 0;
    std::vector<Label> labels;
    std::vector<bool> label_seen;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::uint64_t> bound;
    long long nodes_read = 0, edges_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (!have_header) {
            if (word == "graph") {
                if (!(ls >> n >> m) || n < 1 || m < 0) fail(line_no, "bad graph header");
                std::string extra;
                if (ls >> extra) fail(line_no, "trailing tokens");
                labels.assign(n, 0);
                label_seen.assign(n, false);
                have_header = true;
            } else if (word == "ring") {
                Label l;
                while (ls >> l) labels.push_back(l);
                if (labels.size() < 3) fail(line_no, "ring needs at least 3 labels");
                ring_form = true;
                have_header = true;
            } else {
                fail(line_no, "expected 'graph' or 'ring' header, got '" + word + "'");
            }
            continue;
        }

        if (word == "L") {
            std::uint64_t val;
            if (!(ls >> val) || val == 0) fail(line_no, "bad L value");
            bound = val;
        } else if (word == "node" && !ring_form) {
            long long idx;
            Label l;
            if (!(ls >> idx >> l)) fail(line_no, "bad node line");
            if (idx < 0 || idx >= n) fail(line_no, "node index out of range");
            if (label_seen[idx]) fail(line_no, "duplicate node index");
            labels[idx] = l;
            label_seen[idx] = true;
            ++nodes_read;
        } else if (word == "edge" && !ring_form) {
            long long u, v;
            if (!(ls >> u >> v)) fail(line_no, "bad edge line");
            if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "edge endpoint out of range");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++edges_read;
        } else {
            fail(line_no, "unexpected directive '" + word + "'");
        }
        std::string trailing;
        if (ls >> trailing) fail(line_no, "trailing tokens");
    }

    if (!have_header) throw ParseError("empty instance");

    try {
        if (ring_form) return Instance{build_ring(labels), bound};
        if (nodes_read != n) throw ParseError("expected " + std::to_string(n) + " node lines");
        if (edges_read != m) throw ParseError("expected " + std::to_string(m) + " edge lines");
        return Instance{LabeledGraph(std::move(labels), std::move(edges)), bound};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const LabeledGraph& g,
                         std::optional<std::uint64_t> label_bound) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_instance(g, label_bound);
}

}  // namespace advicelab
