#include "cvc/testkit.hpp"

#include <bit>
#include <functional>
#include <vector>

#include "cvc/detection.hpp"
#include "cvc/errors.hpp"

namespace cvc {

namespace {

constexpr std::size_t oracle_limit = 22;

// Draws are hand-rolled on top of mt19937_64, whose output sequence is fixed
// by the standard; distribution classes are not.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    return rng() % bound;
}

bool coin(std::mt19937_64& rng, double p)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

struct Masks {
    VertexSet labels;
    std::vector<std::uint32_t> adj;
};

Masks to_masks(const Graph& g)
{
    if (g.order() > oracle_limit)
        throw TooLarge("exhaustive search is limited to 22 vertices");
    Masks m{g.vertices(), std::vector<std::uint32_t>(g.order(), 0)};
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        for (std::size_t j = 0; j < m.labels.size(); ++j)
            if (i != j && g.adjacent(m.labels[i], m.labels[j]))
                m.adj[i] |= 1u << j;
    return m;
}

bool covers(const Masks& m, std::uint32_t set)
{
    for (std::size_t i = 0; i < m.adj.size(); ++i)
        if (!(set >> i & 1u) && (m.adj[i] & ~set))
            return false;
    return true;
}

bool connected(const Masks& m, std::uint32_t set)
{
    if (set == 0)
        return true;
    std::uint32_t seen = set & (~set + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
            next |= m.adj[std::countr_zero(f)];
        next &= set & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == set;
}

VertexSet members(const Masks& m, std::uint32_t set)
{
    VertexSet out;
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        if (set >> i & 1u)
            out.push_back(m.labels[i]);
    return out;
}

std::vector<Rational> weight_vector(const Masks& m, const WeightMap* w)
{
    std::vector<Rational> out;
    for (Vertex v : m.labels)
        out.push_back(w ? w->at(v) : Rational(1));
    return out;
}

struct Best {
    std::optional<std::uint32_t> set;
    Rational weight;
    int size = 0;
    VertexSet list;
};

// Keeps the minimum of (weight, size, sorted label list).
void offer(Best& best, const Masks& m, const std::vector<Rational>& wv, std::uint32_t set)
{
    Rational weight = 0;
    for (std::uint32_t f = set; f; f &= f - 1)
        weight += wv[std::countr_zero(f)];
    int size = std::popcount(set);
    if (best.set) {
        if (weight > best.weight || (weight == best.weight && size > best.size))
            return;
        if (weight == best.weight && size == best.size) {
            VertexSet list = members(m, set);
            if (!(list < best.list))
                return;
            best.list = std::move(list);
            best.set = set;
            return;
        }
    }
    best.set = set;
    best.weight = weight;
    best.size = size;
    best.list = members(m, set);
}

} // namespace

std::optional<CoverSolution> brute_force_cvc(const Graph& g, const VertexSet& must_contain,
                                             const WeightMap* w)
{
    Masks m = to_masks(g);
    std::uint32_t need = 0;
    for (Vertex v : must_contain) {
        if (!g.has_vertex(v))
            throw PreconditionViolation("must_contain names an unknown vertex");
        need |= 1u << (std::lower_bound(m.labels.begin(), m.labels.end(), v) - m.labels.begin());
    }
    std::vector<Rational> wv = weight_vector(m, w);
    Best best;
    std::uint64_t total = std::uint64_t{1} << m.labels.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        auto set = static_cast<std::uint32_t>(s);
        if ((set & need) == need && covers(m, set) && connected(m, set))
            offer(best, m, wv, set);
    }
    if (!best.set)
        return std::nullopt;
    CoverSolution out;
    out.cover = best.list;
    out.size = best.list.size();
    out.weight = best.weight;
    out.is_cover = true;
    out.is_connected = true;
    return out;
}

VcResult brute_force_vc(const Graph& g, const WeightMap* w)
{
    Masks m = to_masks(g);
    std::vector<Rational> wv = weight_vector(m, w);
    Best best;
    std::uint64_t total = std::uint64_t{1} << m.labels.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        auto set = static_cast<std::uint32_t>(s);
        if (covers(m, set))
            offer(best, m, wv, set);
    }
    return {best.list, best.list.size(), best.weight};
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::rejection: return "rejection";
    case Family::cograph: return "cograph";
    case Family::split_like: return "split-like";
    case Family::paper_figures: return "paper_figures";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s)
{
    for (Family f : {Family::rejection, Family::cograph, Family::split_like, Family::paper_figures})
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

Graph figure_graph(const std::string& name)
{
    if (name == "G1")
        return Graph::on_range(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}, {2, 5}});
    if (name == "G2")
        return Graph::on_range(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}});
    throw PreconditionViolation("unknown figure " + name);
}

namespace {

constexpr int max_attempts = 20000;

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng, p))
                edges.emplace_back(u, v);
    return Graph::on_range(n, edges);
}

Graph random_cograph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = static_cast<Vertex>(i);
    // The top split is a join so the result is connected.
    std::function<void(const std::vector<Vertex>&, bool)> build = [&](const std::vector<Vertex>& vs, bool top) {
        if (vs.size() < 2)
            return;
        std::vector<Vertex> left, right;
        left.push_back(vs[0]);
        right.push_back(vs[1]);
        for (std::size_t i = 2; i < vs.size(); ++i)
            (coin(rng, 0.5) ? left : right).push_back(vs[i]);
        if (top || coin(rng, p))
            for (Vertex a : left)
                for (Vertex b : right)
                    edges.emplace_back(std::min(a, b), std::max(a, b));
        build(left, false);
        build(right, false);
    };
    build(all, true);
    return Graph::on_range(n, edges);
}

Graph random_split(std::size_t n, double p, std::mt19937_64& rng)
{
    std::size_t k = 1 + draw_below(rng, n);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            edges.emplace_back(u, v);
    for (Vertex v = static_cast<Vertex>(k); v < n; ++v) {
        bool any = false;
        for (Vertex u = 0; u < k; ++u)
            if (coin(rng, p)) {
                edges.emplace_back(u, v);
                any = true;
            }
        if (!any)
            edges.emplace_back(static_cast<Vertex>(draw_below(rng, k)), v);
    }
    return Graph::on_range(n, edges);
}

} // namespace

Graph generate(const GeneratorSpec& spec)
{
    if (spec.family == Family::paper_figures) {
        Graph g = figure_graph(spec.figure);
        if (!is_free(g, spec.s))
            throw PreconditionViolation("figure is not free for the requested s");
        return g;
    }
    if (spec.n == 0)
        throw PreconditionViolation("n must be positive");
    if (!(spec.edge_density >= 0.0 && spec.edge_density <= 1.0))
        throw PreconditionViolation("edge density must lie in [0, 1]");
    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g;
        switch (spec.family) {
        case Family::rejection: g = random_graph(spec.n, spec.edge_density, rng); break;
        case Family::cograph: g = random_cograph(spec.n, spec.edge_density, rng); break;
        case Family::split_like: g = random_split(spec.n, spec.edge_density, rng); break;
        case Family::paper_figures: break;
        }
        if (is_connected(g) && is_free(g, spec.s))
            return g;
    }
    throw GenerationExhausted("no connected free graph after " + std::to_string(max_attempts) + " attempts");
}

WeightMap random_weights(const Graph& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    WeightMap w;
    for (Vertex v : g.vertices()) {
        auto q = static_cast<long long>(1 + draw_below(rng, 4));
        auto p = static_cast<long long>(draw_below(rng, static_cast<std::uint64_t>(10 * q + 1)));
        w.set(v, Rational(p, q));
    }
    return w;
}

CoverCompleteTriple generate_triple(const TripleSpec& spec)
{
    if (spec.forced < 1 || spec.forced >= spec.n)
        throw PreconditionViolation("need at least one forced and one outside vertex");
    if (spec.plant_clique && (spec.forced < 5 || spec.n < spec.forced + 5))
        throw PreconditionViolation("planting needs five forced and five outside vertices");
    std::mt19937_64 rng(spec.seed);
    auto nf = static_cast<Vertex>(spec.forced);
    auto n = static_cast<Vertex>(spec.n);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        std::vector<VertexSet> adj(n);
        auto link = [&](Vertex a, Vertex b) {
            edges.emplace_back(a, b);
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        Vertex w5 = nf + 4;
        auto planted = [&](Vertex v) { return spec.plant_clique && v >= nf && v <= w5; };
        for (Vertex u = nf; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (planted(u) && planted(v)) {
                    if (v != w5)
                        link(u, v);
                } else if (coin(rng, spec.edge_density)) {
                    link(u, v);
                }
            }
        }
        for (Vertex v = nf; v < n; ++v)
            link(0, v);
        if (spec.plant_clique) {
            bool any = false;
            for (Vertex i = 1; i <= 4; ++i) {
                link(i, nf + i - 1);
                if (coin(rng, 0.6)) {
                    link(i, w5);
                    any = true;
                }
            }
            if (!any)
                link(static_cast<Vertex>(1 + draw_below(rng, 4)), w5);
        }
        for (Vertex x = 1; x < nf; ++x) {
            std::vector<Vertex> order;
            for (Vertex v = nf; v < n; ++v)
                order.push_back(v);
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[draw_below(rng, i)]);
            std::vector<Vertex> picked(adj[x].begin(), adj[x].end());
            std::size_t planted_count = picked.size();
            for (Vertex v : order) {
                if (std::find(picked.begin(), picked.end(), v) != picked.end())
                    continue;
                if (!picked.empty() && !coin(rng, spec.attach_density))
                    continue;
                bool clash = false;
                for (Vertex u : picked)
                    clash = clash || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
                if (!clash)
                    picked.push_back(v);
            }
            for (std::size_t i = planted_count; i < picked.size(); ++i)
                link(x, picked[i]);
        }
        Graph g = Graph::on_range(n, edges);
        if (!is_free(g, spec.s))
            continue;
        VertexSet forced;
        for (Vertex x = 0; x < nf; ++x)
            forced.push_back(x);
        return validate_triple(std::move(g), forced, 0);
    }
    throw GenerationExhausted("no free cover-complete triple found");
}

bool star_contraction_check(const Graph& g, std::size_t k)
{
    if (g.order() > 10)
        throw TooLarge("star contraction check is limited to 10 vertices");
    if (k > g.order())
        throw PreconditionViolation("k exceeds the number of vertices");
    Masks m = to_masks(g);
    if (!connected(m, (1u << m.labels.size()) - 1))
        throw PreconditionViolation("star contraction check needs a connected graph");
    std::size_t leaves = g.order() - k;
    std::uint32_t all = (1u << m.labels.size()) - 1;
    for (std::uint32_t centre = 1; centre <= all; ++centre) {
        if (!connected(m, centre))
            continue;
        // Each leaf part must be a whole component of g - centre.
        std::uint32_t rest = all & ~centre;
        std::size_t parts = 0;
        while (rest) {
            std::uint32_t seen = rest & (~rest + 1);
            std::uint32_t frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1)
                    next |= m.adj[std::countr_zero(f)];
                next &= rest & ~seen;
                seen |= next;
                frontier = next;
            }
            rest &= ~seen;
            ++parts;
        }
        if (parts == leaves)
            return true;
    }
    return false;
}

} // namespace cvc
