#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cvc/vertex_set.hpp"

namespace cvc {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over stable integer labels.
///
/// Values are immutable once built: every structural operation returns a new
/// graph. Adjacency lists are kept sorted so iteration order is deterministic.
/// Labels created by contraction are drawn from next_label() and never reused
/// along one chain of derived graphs.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `vertices` (any order, duplicates rejected) with the
    /// given edges. Throws PreconditionViolation on self-loops, parallel edges
    /// or unknown endpoints.
    static Graph from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    /// Vertices 0..n-1 with the given edges.
    static Graph on_range(std::size_t n, const std::vector<Edge>& edges);

    const VertexSet& vertices() const { return labels_; }
    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    bool has_vertex(Vertex v) const;
    const VertexSet& neighbours(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbours(v).size(); }

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// First label that contraction may hand out.
    Vertex next_label() const { return next_label_; }

    Graph induced(const VertexSet& keep) const;
    Graph without(const VertexSet& drop) const;

    /// Collapses `group` to a single fresh vertex adjacent to N(group).
    /// Equivalent to contracting every edge of G[group] when G[group] is
    /// connected; that is the caller's responsibility.
    std::pair<Graph, Vertex> merge(const VertexSet& group) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::size_t slot(Vertex v) const;
    void index();

    VertexSet labels_;
    std::vector<VertexSet> adj_;
    std::vector<std::int32_t> slot_;
    Vertex next_label_ = 0;
    std::size_t edge_count_ = 0;
};

struct MergeEvent {
    VertexSet merged; // live labels that disappeared
    Vertex into;      // fresh label that replaced them
};

/// Maps each live vertex to the original vertices it stands for.
class ContractionTrace {
public:
    ContractionTrace() = default;

    static ContractionTrace identity(const VertexSet& originals);

    const VertexSet& represented(Vertex live) const;
    bool tracks(Vertex live) const { return repr_.count(live) != 0; }

    /// Union of the represented sets of `live`.
    VertexSet lift(const VertexSet& live) const;

    /// Live vertices whose represented set lies entirely inside `originals`.
    VertexSet project(const VertexSet& originals) const;

    ContractionTrace merged(const VertexSet& group, Vertex into) const;

    /// Drops live vertices; their originals are recorded as deleted.
    ContractionTrace removed(const VertexSet& live) const;

    const std::map<Vertex, VertexSet>& representation() const { return repr_; }
    const std::vector<MergeEvent>& events() const { return events_; }
    const VertexSet& deleted() const { return deleted_; }

    /// Represented sets are disjoint, keyed exactly by the live vertices of
    /// `g`, and together with the deleted set they partition `originals`.
    bool consistent_with(const Graph& g, const VertexSet& originals) const;

private:
    std::map<Vertex, VertexSet> repr_;
    std::vector<MergeEvent> events_;
    VertexSet deleted_;
};

struct Contracted {
    Graph graph;
    ContractionTrace trace;
    Vertex vertex;
};

/// Contracts edge uv. Throws PreconditionViolation if uv is not an edge.
std::pair<Graph, ContractionTrace> contract_edge(const Graph& g, Vertex u, Vertex v,
                                                 const ContractionTrace& t);

/// Contracts a connected vertex set to one fresh vertex and updates the trace.
Contracted contract_set(const Graph& g, const ContractionTrace& t, const VertexSet& group);

/// N(S) = (union of N(u), u in S) minus S. Throws PreconditionViolation on
/// unknown labels.
VertexSet neighbourhood(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// G[s] is connected (the empty set counts as connected).
bool is_connected_set(const Graph& g, const VertexSet& s);

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Connected components, each sorted, ordered by least member.
std::vector<VertexSet> components(const Graph& g);

/// Shortest path from `from` to `to` (inclusive) by BFS with smallest-label
/// tie-breaking; empty if unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

} // namespace cvc
