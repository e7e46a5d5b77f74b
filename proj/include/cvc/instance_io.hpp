#pragma once

#include <istream>
#include <optional>
#include <string>

#include "cvc/graph.hpp"
#include "cvc/weights.hpp"

namespace cvc {

/// Text instance:
///
///     # comment
///     cvc <n> <m>
///     <u> <v>            (m lines, 0-based)
///     w <u> <rational>   (optional, default weight 1)
struct Instance {
    Graph graph;
    std::optional<WeightMap> weights; // set when any weight line is present
};

/// Throws ParseError with the offending line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Canonical form: header, edges as "u v" with u < v in sorted order, then one
/// weight line per vertex when weights are given. Labels must be 0..n-1.
std::string serialize_instance(const Graph& g, const WeightMap* w = nullptr);

/// Weights of `inst`, or unit weights when the file had none.
WeightMap weights_or_unit(const Instance& inst);

} // namespace cvc
