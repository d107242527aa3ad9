#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "advicelab/graph.hpp"

namespace advicelab {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Instance {
    LabeledGraph graph;
    std::optional<std::uint64_t> label_bound;  // the optional "L" line
};

// Text format, one directive per line; '#' starts a comment.
//   graph <n> <m>      followed by n "node <index> <label>" and m "edge <i> <j>" lines
//   ring <label>...    shorthand for a ring in circular order
//   L <value>          optional label-space bound
std::string serialize_instance(const LabeledGraph& g,
                               std::optional<std::uint64_t> label_bound = std::nullopt);
Instance parse_instance(const std::string& text);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const LabeledGraph& g,
                         std::optional<std::uint64_t> label_bound = std::nullopt);

}  // namespace advicelab
