#pragma once

#include <cstddef>

#include "cvc/graph.hpp"
#include "cvc/weights.hpp"

namespace cvc {

struct VcResult {
    VertexSet cover;
    std::size_t size = 0;
    Rational weight = 0;
};

/// Exact minimum vertex cover by branch and reduce. Without weights the size
/// is minimised; with weights (keyed by the labels of g) the weight is, with
/// ties broken by smaller size and then by the lexicographically least set.
/// Exponential in the worst case.
VcResult min_vertex_cover(const Graph& g, const WeightMap* w = nullptr);

} // namespace cvc
