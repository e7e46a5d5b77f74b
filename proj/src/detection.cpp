#include "cvc/detection.hpp"

#include "cvc/errors.hpp"

namespace cvc {

VertexSet PatternHit::vertices() const
{
    return set_union(isolated, make_set({path.begin(), path.end()}));
}

namespace {

// Picks `need` pairwise non-adjacent vertices from `pool` (sorted), in
// lexicographic order, appending to `chosen`.
bool pick_independent(const Graph& g, const VertexSet& pool, std::size_t start,
                      std::size_t need, VertexSet& chosen)
{
    if (need == 0)
        return true;
    for (std::size_t i = start; i + need <= pool.size(); ++i) {
        Vertex v = pool[i];
        if (intersects(g.neighbours(v), chosen))
            continue;
        chosen.push_back(v);
        if (pick_independent(g, pool, i + 1, need - 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

struct PathSearch {
    const Graph& g;
    std::size_t r;
    std::array<Vertex, 5> path{};
    std::optional<PatternHit> hit;

    bool extend(std::size_t len)
    {
        if (len == 5) {
            if (path[0] > path[4])
                return false;
            VertexSet closed = make_set({path.begin(), path.end()});
            closed = set_union(closed, neighbourhood(g, closed));
            VertexSet pool = set_difference(g.vertices(), closed);
            VertexSet chosen;
            if (!pick_independent(g, pool, 0, r, chosen))
                return false;
            hit = PatternHit{chosen, path};
            return true;
        }
        for (Vertex v : g.neighbours(path[len - 1])) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < len && ok; ++i)
                ok = path[i] != v && !g.adjacent(path[i], v);
            if (!ok)
                continue;
            path[len] = v;
            if (extend(len + 1))
                return true;
        }
        return false;
    }
};

bool grow_clique(const Graph& g, const VertexSet& pool, std::size_t k, VertexSet& clique)
{
    if (clique.size() == k)
        return true;
    for (Vertex v : pool) {
        if (!clique.empty() && v <= clique.back())
            continue;
        VertexSet next = set_intersection(pool, g.neighbours(v));
        clique.push_back(v);
        if (grow_clique(g, next, k, clique))
            return true;
        clique.pop_back();
    }
    return false;
}

} // namespace

std::optional<PatternHit> find_induced_linear(const Graph& g, std::size_t r)
{
    if (g.order() < 5 + r)
        return std::nullopt;
    PathSearch search{g, r, {}, {}};
    for (Vertex v : g.vertices()) {
        search.path[0] = v;
        if (search.extend(1))
            return search.hit;
    }
    return std::nullopt;
}

bool verify_hit(const Graph& g, const PatternHit& hit)
{
    VertexSet all = hit.vertices();
    if (all.size() != hit.isolated.size() + 5)
        return false;
    for (Vertex v : all)
        if (!g.has_vertex(v))
            return false;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (g.adjacent(hit.path[i], hit.path[j]) != (j == i + 1))
                return false;
    for (Vertex a : hit.isolated)
        for (Vertex b : all)
            if (a != b && g.adjacent(a, b))
                return false;
    return true;
}

bool is_free(const Graph& g, std::size_t s)
{
    return !find_induced_linear(g, s).has_value();
}

std::optional<VertexSet> find_clique(const Graph& g, std::size_t k,
                                     std::optional<Vertex> avoid_neighbours_of)
{
    if (k == 0)
        throw PreconditionViolation("find_clique: k must be positive");
    VertexSet pool = g.vertices();
    if (avoid_neighbours_of) {
        Vertex v = *avoid_neighbours_of;
        pool = set_difference(pool, with(g.neighbours(v), v));
    }
    VertexSet clique;
    if (grow_clique(g, pool, k, clique))
        return clique;
    return std::nullopt;
}

} // namespace cvc
