#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "cvc/cover_solution.hpp"
#include "cvc/graph.hpp"
#include "cvc/weights.hpp"

namespace cvc {

struct SolverConfig {
    std::size_t s = 0;
    bool weighted = false;        // minimise weight instead of size
    bool verify_freeness = false; // check (sP1+P5)-freeness first, throw NotFree
};

struct Pruned {
    Graph graph;
    VertexSet removed;
};

/// Drops the vertices of J \ {y} that have two adjacent neighbours. A set S
/// containing J is a connected cover of g iff S minus the removed vertices is
/// one of the pruned graph. Throws PreconditionViolation unless J is
/// independent and y sees every vertex outside J.
Pruned prune_adjacent_neighbour_j(const Graph& g, const VertexSet& j, Vertex y);

/// Minimum connected vertex cover (minimum weight when cfg.weighted; a missing
/// map then means unit weights). Returned flags are checked against g.
///
/// Disconnected input: edgeless components are ignored; two or more components
/// with edges throw Infeasible. Graphs that are not (sP1+P5)-free for cfg.s
/// may throw NoCertificate or give no guarantee, unless verify_freeness turns
/// that into NotFree up front.
CoverSolution solve_cvc(const Graph& g, const SolverConfig& cfg, const WeightMap* w = nullptr);

} // namespace cvc
