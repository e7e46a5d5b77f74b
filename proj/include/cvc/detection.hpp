#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc {

/// An induced copy of rP1+P5: `isolated` are pairwise non-adjacent and
/// non-adjacent to the path; `path` induces P5 in the listed order.
struct PatternHit {
    VertexSet isolated;
    std::array<Vertex, 5> path;

    VertexSet vertices() const;
};

/// First induced rP1+P5 in lexicographic order of (path, isolated), where a
/// path is listed with its smaller endpoint first.
std::optional<PatternHit> find_induced_linear(const Graph& g, std::size_t r);

/// Re-checks the induced adjacency pattern of a hit against `g`.
bool verify_hit(const Graph& g, const PatternHit& hit);

/// True iff g has no induced sP1+P5.
bool is_free(const Graph& g, std::size_t s);

/// First k-clique in lexicographic order. With `avoid_neighbours_of` = v the
/// clique must lie outside N[v], i.e. together with v it induces Kk+P1.
std::optional<VertexSet> find_clique(const Graph& g, std::size_t k,
                                     std::optional<Vertex> avoid_neighbours_of = std::nullopt);

} // namespace cvc
