#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cvc/graph.hpp"

namespace testing_support {

using cvc::Edge;
using cvc::Graph;
using cvc::Vertex;
using cvc::VertexSet;

// G(n, p) from a fixed seed; not necessarily connected.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                edges.emplace_back(u, v);
    return Graph::on_range(n, edges);
}

// A connected G(n, p): retries seeds derived from `seed`.
inline Graph random_connected(std::size_t n, double p, std::uint64_t seed)
{
    for (std::uint64_t k = 0;; ++k) {
        Graph g = random_graph(n, p, seed * 7919 + k);
        if (cvc::is_connected(g))
            return g;
    }
}

inline Graph path(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::on_range(n, e);
}

inline Graph cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(std::min<Vertex>(i, (i + 1) % n), std::max<Vertex>(i, (i + 1) % n));
    return Graph::on_range(n, e);
}

inline Graph complete(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph::on_range(n, e);
}

inline Graph star(std::size_t leaves)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph::on_range(leaves + 1, e);
}

// Size of a maximum independent set by plain subset enumeration.
inline std::size_t max_independent_set(const Graph& g)
{
    const VertexSet& vs = g.vertices();
    std::size_t n = vs.size(), best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1u) && (mask >> j & 1u) && g.adjacent(vs[i], vs[j]))
                    ok = false;
        if (ok)
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

// Does g contain an induced path on `len` vertices? Plain DFS.
inline bool has_induced_path(const Graph& g, std::size_t len)
{
    std::vector<Vertex> p;
    auto grow = [&](auto&& self) -> bool {
        if (p.size() == len)
            return true;
        const VertexSet& cand = p.empty() ? g.vertices() : g.neighbours(p.back());
        for (Vertex v : cand) {
            bool ok = std::find(p.begin(), p.end(), v) == p.end();
            for (std::size_t i = 0; ok && i + 1 < p.size(); ++i)
                ok = !g.adjacent(p[i], v);
            if (!ok)
                continue;
            p.push_back(v);
            if (self(self))
                return true;
            p.pop_back();
        }
        return false;
    };
    return grow(grow);
}

} // namespace testing_support
