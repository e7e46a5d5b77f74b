#include "cvc/solver.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

#include "cvc/completion.hpp"
#include "cvc/detection.hpp"
#include "cvc/domination.hpp"
#include "cvc/errors.hpp"
#include "cvc/vc_oracle.hpp"

namespace cvc {

Pruned prune_adjacent_neighbour_j(const Graph& g, const VertexSet& j, Vertex y)
{
    if (!contains(j, y) || !is_independent(g, j))
        throw PreconditionViolation("prune: J must be independent and contain y");
    for (Vertex v : g.vertices())
        if (!contains(j, v) && !g.adjacent(y, v))
            throw PreconditionViolation("prune: y must see every vertex outside J");
    VertexSet removed;
    for (Vertex x : j)
        if (x != y && !is_independent(g, g.neighbours(x)))
            removed.push_back(x);
    return {g.without(removed), removed};
}

namespace {

// Induced paths from `from` to `to` with at most max_len vertices that avoid
// `banned`; f receives the vertex set of each.
void for_each_induced_path(const Graph& g, Vertex from, Vertex to, std::size_t max_len,
                           const VertexSet& banned, const std::function<void(const VertexSet&)>& f)
{
    std::vector<Vertex> path{from};
    std::function<void()> grow = [&] {
        Vertex last = path.back();
        if (last == to) {
            f(make_set(path));
            return;
        }
        if (path.size() == max_len)
            return;
        for (Vertex v : g.neighbours(last)) {
            if (contains(banned, v) || std::find(path.begin(), path.end(), v) != path.end())
                continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
                chord = g.adjacent(path[i], v);
            if (chord)
                continue;
            path.push_back(v);
            grow();
            path.pop_back();
        }
    };
    grow();
}

// Ways to join the kept part of D into one connected set: the anchor's
// component stays, every other component contributes one induced path from
// its least vertex to the anchor.
std::vector<VertexSet> connected_extensions(const Graph& g, const VertexSet& kept,
                                            const VertexSet& excluded, std::size_t s)
{
    std::vector<VertexSet> parts = components(g.induced(kept));
    if (parts.size() == 1)
        return {kept};
    Vertex anchor = kept.front();
    std::size_t max_len = 2 * s + 4;
    std::vector<std::vector<VertexSet>> options;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::vector<VertexSet> paths;
        for_each_induced_path(g, parts[i].front(), anchor, max_len, excluded,
                              [&](const VertexSet& p) { paths.push_back(p); });
        if (paths.empty())
            return {};
        options.push_back(std::move(paths));
    }
    std::set<VertexSet> out;
    std::function<void(std::size_t, const VertexSet&)> combine = [&](std::size_t i, const VertexSet& acc) {
        if (i == options.size()) {
            out.insert(acc);
            return;
        }
        for (const VertexSet& p : options[i])
            combine(i + 1, set_union(acc, p));
    };
    combine(0, kept);
    return {out.begin(), out.end()};
}

std::vector<VertexSet> guesses(const VertexSet& d, bool clique)
{
    std::vector<VertexSet> out{VertexSet{}};
    if (clique) {
        for (Vertex v : d)
            out.push_back({v});
        return out;
    }
    if (d.size() >= 31)
        throw TooLarge("dominating set too large to enumerate guesses");
    for (std::uint32_t mask = 1; mask < (1u << d.size()); ++mask) {
        VertexSet pick;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (mask >> i & 1u)
                pick.push_back(d[i]);
        out.push_back(std::move(pick));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CoverSolution> solve_excluding(const Graph& g, const VertexSet& kept,
                                             const VertexSet& excluded, std::size_t s,
                                             const std::shared_ptr<const WeightMap>& w)
{
    // kept: connected, disjoint from excluded, to be in the cover.
    VertexSet f = set_union(kept, neighbourhood(g, excluded));
    Graph cur = g;
    ContractionTrace trace = ContractionTrace::identity(g.vertices());
    VertexSet forced;
    Vertex hub = 0;
    for (const VertexSet& part : components(g.induced(f))) {
        Contracted c = contract_set(cur, trace, part);
        cur = std::move(c.graph);
        trace = std::move(c.trace);
        forced.push_back(c.vertex);
        if (intersects(part, kept))
            hub = c.vertex;
    }
    forced = make_set(std::move(forced));
    cur = cur.without(excluded);
    trace = trace.removed(excluded);

    Pruned p = prune_adjacent_neighbour_j(cur, forced, hub);
    VertexSet pruned_originals = trace.lift(p.removed);
    trace = trace.removed(p.removed);
    CoverCompleteTriple t = validate_triple(std::move(p.graph), set_difference(forced, p.removed),
                                            hub, std::move(trace), w);
    CoverSolution sol = solve_completion(t, s);
    return make_solution(set_union(sol.cover, pruned_originals), w.get());
}

CoverSolution solve_connected(const Graph& g, const SolverConfig& cfg,
                              const std::shared_ptr<const WeightMap>& w)
{
    if (g.edge_count() == 0)
        return make_solution({}, w.get());
    DominatingCertificate cert = connected_dominating_set(g, cfg.s);
    const VertexSet& d = cert.vertices;
    bool clique = is_clique(g, d);

    std::optional<CoverSolution> best;
    for (const VertexSet& excluded : guesses(d, clique)) {
        if (excluded.empty()) {
            VcResult vc = min_vertex_cover(g.without(d), w.get());
            keep_best(best, make_solution(set_union(d, vc.cover), w.get()));
            continue;
        }
        if (!is_independent(g, excluded))
            continue;
        Graph rest = g.without(excluded);
        if (!is_connected(rest))
            continue;
        VertexSet kept = set_difference(d, excluded);
        if (kept.empty()) {
            CoverSolution all = make_solution(rest.vertices(), w.get());
            verify_against(all, g);
            if (all.verified())
                keep_best(best, std::move(all));
            continue;
        }
        for (const VertexSet& x : connected_extensions(g, kept, excluded, cfg.s))
            keep_best(best, solve_excluding(g, x, excluded, cfg.s, w));
    }
    if (!best)
        throw std::logic_error("no guess produced a connected vertex cover");
    return *best;
}

} // namespace

CoverSolution solve_cvc(const Graph& g, const SolverConfig& cfg, const WeightMap* w)
{
    if (cfg.verify_freeness && !is_free(g, cfg.s))
        throw NotFree(cfg.s);

    std::shared_ptr<const WeightMap> weights;
    if (cfg.weighted) {
        if (w) {
            if (!w->covers(g.vertices()))
                throw PreconditionViolation("weight missing for some vertex");
            weights = std::make_shared<const WeightMap>(*w);
        } else {
            weights = std::make_shared<const WeightMap>(WeightMap::uniform(g.vertices(), 1));
        }
    }

    std::optional<VertexSet> target;
    for (const VertexSet& part : components(g)) {
        if (part.size() < 2)
            continue;
        if (target)
            throw Infeasible("two components carry edges");
        target = part;
    }

    CoverSolution sol = target ? solve_connected(g.induced(*target), cfg, weights)
                               : make_solution({}, weights.get());
    verify_against(sol, g);
    if (!sol.verified())
        throw std::logic_error("solver produced an invalid cover");
    return sol;
}

} // namespace cvc
