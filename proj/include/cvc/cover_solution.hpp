#pragma once

#include <cstddef>
#include <optional>

#include "cvc/graph.hpp"
#include "cvc/weights.hpp"

namespace cvc {

/// A connected vertex cover expressed in original vertex labels.
struct CoverSolution {
    VertexSet cover;
    std::size_t size = 0;
    Rational weight = 0;
    bool is_cover = false;     // re-checked against the graph it was verified on
    bool is_connected = false; // likewise

    bool verified() const { return is_cover && is_connected; }
};

/// Cover with size and weight filled in, flags unset.
CoverSolution make_solution(VertexSet cover, const WeightMap* w);

/// Sets both flags by checking `s.cover` against `g`.
void verify_against(CoverSolution& s, const Graph& g);

/// Strict order used for every "keep the best" decision: smaller weight, then
/// smaller size, then the lexicographically smaller cover. Without weights
/// the weight equals the size.
bool better(const CoverSolution& a, const CoverSolution& b);

/// Replaces `best` by `cand` when `cand` is strictly better.
void keep_best(std::optional<CoverSolution>& best, std::optional<CoverSolution> cand);

} // namespace cvc
