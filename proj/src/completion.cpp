#include "cvc/completion.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "cvc/detection.hpp"
#include "cvc/vc_oracle.hpp"

namespace cvc {

namespace {

// Calls f on every k-subset of pool in lexicographic order; stops early when
// f returns false.
bool for_each_subset(const VertexSet& pool, std::size_t k,
                     const std::function<bool(const VertexSet&)>& f)
{
    if (k > pool.size())
        return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    VertexSet pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = pool[idx[i]];
        if (!f(pick))
            return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

VertexSet non_hub(const CoverCompleteTriple& t)
{
    return without(t.forced, t.hub);
}

bool single_forced(const CoverCompleteTriple& t)
{
    return t.forced.size() == 1;
}

} // namespace

VertexSet CoverCompleteTriple::frontier() const
{
    return set_difference(neighbourhood(graph, without(forced, hub)), forced);
}

VertexSet CoverCompleteTriple::forced_neighbours(Vertex w) const
{
    return set_intersection(graph.neighbours(w), forced);
}

VertexSet CoverCompleteTriple::originals() const
{
    return set_union(trace.lift(graph.vertices()), trace.deleted());
}

std::optional<TripleProperty> check_triple(const Graph& g, const VertexSet& forced, Vertex hub)
{
    if (!contains(forced, hub))
        return TripleProperty::membership;
    for (Vertex v : forced)
        if (!g.has_vertex(v))
            return TripleProperty::membership;
    if (!is_independent(g, forced))
        return TripleProperty::independent;
    for (Vertex v : g.vertices())
        if (!contains(forced, v) && !g.adjacent(hub, v))
            return TripleProperty::hub_universal;
    for (Vertex x : forced)
        if (x != hub && !is_independent(g, g.neighbours(x)))
            return TripleProperty::neighbourhoods_independent;
    if (!is_connected(g))
        return TripleProperty::connected;
    return std::nullopt;
}

CoverCompleteTriple validate_triple(Graph g, VertexSet forced, Vertex hub,
                                    std::optional<ContractionTrace> trace,
                                    std::shared_ptr<const WeightMap> weights)
{
    forced = make_set(std::move(forced));
    if (auto bad = check_triple(g, forced, hub))
        throw NotCoverComplete(*bad, std::string("not cover-complete: ") + to_string(*bad));
    ContractionTrace tr = trace ? std::move(*trace) : ContractionTrace::identity(g.vertices());
    for (Vertex v : g.vertices())
        if (!tr.tracks(v))
            throw PreconditionViolation("trace does not cover vertex " + std::to_string(v));
    if (weights && !weights->covers(tr.lift(g.vertices())))
        throw PreconditionViolation("weights missing for some vertex");
    return {std::move(g), std::move(forced), hub, std::move(tr), std::move(weights)};
}

CoverCompleteTriple force_into_cover(const CoverCompleteTriple& t, Vertex w)
{
    if (!t.graph.has_vertex(w) || contains(t.forced, w) || !t.graph.adjacent(t.hub, w))
        throw PreconditionViolation("cannot force vertex " + std::to_string(w));
    VertexSet group = with(t.forced_neighbours(w), w);
    Contracted c = contract_set(t.graph, t.trace, group);
    VertexSet forced = with(set_difference(t.forced, group), c.vertex);
    return {std::move(c.graph), std::move(forced), c.vertex, std::move(c.trace), t.weights};
}

CoverCompleteTriple set_contract(const CoverCompleteTriple& t, Vertex w)
{
    if (!contains(t.frontier(), w))
        throw PreconditionViolation("set_contract: " + std::to_string(w) + " is not in the frontier");
    return force_into_cover(t, w);
}

std::optional<CoverCompleteTriple> exclude_from_cover(const CoverCompleteTriple& t, Vertex w)
{
    if (!t.graph.has_vertex(w) || contains(t.forced, w))
        throw PreconditionViolation("cannot exclude vertex " + std::to_string(w));
    VertexSet outside = set_difference(t.graph.neighbours(w), t.forced);
    CoverCompleteTriple cur{t.graph.without({w}), t.forced, t.hub, t.trace.removed({w}), t.weights};
    if (!is_connected(cur.graph))
        return std::nullopt;
    for (Vertex u : outside)
        cur = force_into_cover(cur, u);
    return cur;
}

bool is_pseudo_pair(const CoverCompleteTriple& t, const PseudoPair& p)
{
    VertexSet l = t.frontier();
    const Graph& g = t.graph;
    if (!contains(l, p.first) || !contains(l, p.second) || g.adjacent(p.first, p.second))
        return false;
    auto ok = [&](Vertex x, Vertex mine, Vertex other) {
        return contains(t.forced, x) && g.adjacent(x, mine) && !g.adjacent(x, other);
    };
    return ok(p.first_witness, p.first, p.second) && ok(p.second_witness, p.second, p.first);
}

bool is_pseudo_triple(const CoverCompleteTriple& t, const PseudoTriple& p)
{
    VertexSet l = t.frontier();
    const Graph& g = t.graph;
    for (Vertex v : {p.lone, p.left, p.right})
        if (!contains(l, v))
            return false;
    if (g.adjacent(p.lone, p.left) || g.adjacent(p.lone, p.right) || !g.adjacent(p.left, p.right))
        return false;
    if (!contains(t.forced, p.lone_witness) || !contains(t.forced, p.shared_witness))
        return false;
    Vertex a = p.lone_witness, b = p.shared_witness;
    return g.adjacent(a, p.lone) && !g.adjacent(a, p.left) && !g.adjacent(a, p.right)
           && g.adjacent(b, p.lone) && g.adjacent(b, p.left) && !g.adjacent(b, p.right);
}

std::vector<PseudoPair> find_pseudo_pairs(const CoverCompleteTriple& t)
{
    std::vector<PseudoPair> out;
    VertexSet l = t.frontier();
    for (std::size_t i = 0; i < l.size(); ++i) {
        VertexSet a = t.forced_neighbours(l[i]);
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            if (t.graph.adjacent(l[i], l[j]))
                continue;
            VertexSet b = t.forced_neighbours(l[j]);
            VertexSet only_a = set_difference(a, b);
            VertexSet only_b = set_difference(b, a);
            if (!only_a.empty() && !only_b.empty())
                out.push_back({l[i], l[j], only_a.front(), only_b.front()});
        }
    }
    return out;
}

std::vector<PseudoTriple> find_pseudo_triples(const CoverCompleteTriple& t)
{
    std::vector<PseudoTriple> out;
    VertexSet l = t.frontier();
    const Graph& g = t.graph;
    for (Vertex w1 : l) {
        VertexSet x1 = t.forced_neighbours(w1);
        for (Vertex w2 : l) {
            if (w2 == w1 || g.adjacent(w1, w2))
                continue;
            VertexSet x2 = t.forced_neighbours(w2);
            for (Vertex w3 : g.neighbours(w2)) {
                if (w3 == w1 || !contains(l, w3) || g.adjacent(w1, w3))
                    continue;
                VertexSet x3 = t.forced_neighbours(w3);
                VertexSet lone = set_difference(set_difference(x1, x2), x3);
                VertexSet shared = set_difference(set_intersection(x1, x2), x3);
                if (!lone.empty() && !shared.empty())
                    out.push_back({w1, w2, w3, lone.front(), shared.front()});
            }
        }
    }
    return out;
}

void verify_in(const CoverCompleteTriple& t, CoverSolution& sol)
{
    VertexSet live = t.trace.project(sol.cover);
    bool exact = t.trace.lift(live) == sol.cover;
    sol.is_cover = exact && is_subset(t.forced, live) && is_vertex_cover(t.graph, live);
    sol.is_connected = exact && is_connected_set(t.graph, live);
}

CoverSolution solve_single_forced(const CoverCompleteTriple& t)
{
    if (!single_forced(t))
        throw PreconditionViolation("more than one forced vertex");
    WeightMap lw = live_weights(t.trace, t.weights.get());
    VcResult vc = min_vertex_cover(t.graph.without({t.hub}), &lw);
    CoverSolution sol = make_solution(t.trace.lift(with(vc.cover, t.hub)), t.weights.get());
    verify_in(t, sol);
    return sol;
}

std::vector<VertexSet> minimal_connectors(const CoverCompleteTriple& t, std::size_t max_size)
{
    if (single_forced(t))
        return {VertexSet{}};
    std::vector<VertexSet> out;
    VertexSet l = t.frontier();
    auto joins = [&](const VertexSet& c) { return is_connected_set(t.graph, set_union(t.forced, c)); };
    for (std::size_t k = 1; k <= max_size; ++k) {
        for_each_subset(l, k, [&](const VertexSet& c) {
            if (!joins(c))
                return true;
            for (Vertex v : c)
                if (joins(without(c, v)))
                    return true;
            out.push_back(c);
            return true;
        });
    }
    return out;
}

CoverSolution complete_with(const CoverCompleteTriple& t, const VertexSet& extra)
{
    CoverCompleteTriple cur = t;
    for (Vertex w : extra)
        cur = force_into_cover(cur, w);
    if (!single_forced(cur))
        throw PreconditionViolation("complete_with: forced set and extra vertices are not connected");
    CoverSolution sol = solve_single_forced(cur);
    verify_in(t, sol);
    return sol;
}

std::optional<CoverSolution> smallest_type1_cover(const CoverCompleteTriple& t, std::size_t s)
{
    std::optional<CoverSolution> best;
    std::set<VertexSet> tried;
    VertexSet l = t.frontier();
    std::size_t extra_max = s == 0 ? 0 : s - 1;

    auto explore = [&](const VertexSet& base) {
        VertexSet pool = set_difference(l, base);
        for (std::size_t k = 0; k <= extra_max; ++k) {
            for_each_subset(pool, k, [&](const VertexSet& extra) {
                VertexSet conn = set_union(base, extra);
                if (!tried.insert(conn).second)
                    return true;
                if (is_connected_set(t.graph, set_union(t.forced, conn)))
                    keep_best(best, complete_with(t, conn));
                return true;
            });
        }
    };

    for (const PseudoPair& p : find_pseudo_pairs(t))
        explore(make_set({p.first, p.second}));
    for (const PseudoTriple& p : find_pseudo_triples(t))
        explore(make_set({p.lone, p.left, p.right}));
    return best;
}

std::optional<RuleStep> apply_rule1(const CoverCompleteTriple& t)
{
    VertexSet l = t.frontier();
    for (const PseudoPair& p : find_pseudo_pairs(t)) {
        VertexSet common = set_intersection(
            set_intersection(t.graph.neighbours(p.first), t.graph.neighbours(p.second)), l);
        if (common.empty())
            continue;
        Vertex x = common.front();
        ReductionRecord r{ReductionRule::one, t, x, p, {}, true};
        return RuleStep{set_contract(t, x), std::move(r)};
    }
    return std::nullopt;
}

std::optional<RuleStep> apply_rule2(const CoverCompleteTriple& t)
{
    VertexSet l = t.frontier();
    if (l.size() < 5)
        return std::nullopt;
    Graph gl = t.graph.induced(l);
    for (Vertex w : l) {
        auto k4 = find_clique(gl, 4, w);
        if (!k4)
            continue;
        auto post = exclude_from_cover(t, w);
        bool feasible = post.has_value();
        ReductionRecord r{ReductionRule::two, t, w, std::nullopt, *k4, feasible};
        return RuleStep{std::move(post), std::move(r)};
    }
    return std::nullopt;
}

std::optional<CoverCompleteTriple> replay(const ReductionRecord& r)
{
    if (r.rule == ReductionRule::one)
        return set_contract(r.pre, r.site);
    return exclude_from_cover(r.pre, r.site);
}

bool is_free_triple(const CoverCompleteTriple& t)
{
    return !apply_rule1(t) && !apply_rule2(t);
}

FreeReduction reduce_to_free(const CoverCompleteTriple& t)
{
    FreeReduction out;
    CoverCompleteTriple cur = t;
    while (true) {
        while (auto step = apply_rule1(cur)) {
            out.records.push_back(std::move(step->record));
            cur = std::move(*step->post);
        }
        auto step = apply_rule2(cur);
        if (!step)
            break;
        out.records.push_back(std::move(step->record));
        if (!step->post)
            return out;
        cur = std::move(*step->post);
    }
    out.triple = std::move(cur);
    return out;
}

CoverSolution lift_through_records(std::optional<CoverSolution> sol,
                                   const std::vector<ReductionRecord>& records, std::size_t s)
{
    for (auto it = records.rbegin(); it != records.rend(); ++it)
        keep_best(sol, smallest_type1_cover(it->pre, s));
    if (!sol)
        throw std::logic_error("no connected vertex cover survived the reductions");
    if (!records.empty())
        verify_in(records.front().pre, *sol);
    return *sol;
}

VertexSet greedy_frontier_clique(const CoverCompleteTriple& t)
{
    VertexSet rest = non_hub(t);
    VertexSet l = t.frontier();
    VertexSet covered;
    VertexSet k;
    while (covered != rest) {
        VertexSet uncovered = set_difference(rest, covered);
        std::optional<Vertex> pick;
        std::size_t most = 0;
        for (Vertex w : l) {
            if (contains(k, w))
                continue;
            std::size_t n = set_intersection(t.graph.neighbours(w), uncovered).size();
            if (n > most) {
                most = n;
                pick = w;
            }
        }
        if (!pick)
            throw GreedyStuck("no frontier vertex reaches the uncovered forced vertices");
        const VertexSet& nb = t.graph.neighbours(*pick);
        if (intersects(nb, covered))
            throw GreedyStuck("pick " + std::to_string(*pick) + " sees an already covered forced vertex");
        if (!is_subset(k, nb))
            throw GreedyStuck("pick " + std::to_string(*pick) + " does not extend the clique");
        k = with(std::move(k), *pick);
        covered = set_union(covered, set_intersection(nb, rest));
    }
    return k;
}

namespace {

CoverSolution solve_free(const CoverCompleteTriple& t, std::size_t s)
{
    if (single_forced(t))
        return solve_single_forced(t);
    std::optional<CoverSolution> best = smallest_type1_cover(t, s);
    if (!find_pseudo_pairs(t).empty()) {
        for (const VertexSet& c : minimal_connectors(t, 5))
            keep_best(best, complete_with(t, c));
    } else {
        VertexSet k = greedy_frontier_clique(t);
        keep_best(best, complete_with(t, k));
        for (Vertex w : k) {
            auto rest = exclude_from_cover(t, w);
            if (!rest)
                continue;
            for (const VertexSet& c : minimal_connectors(*rest, 3)) {
                CoverSolution sol = complete_with(*rest, c);
                verify_in(t, sol);
                keep_best(best, std::move(sol));
            }
        }
    }
    if (!best)
        throw std::logic_error("free triple without a connected vertex cover");
    return *best;
}

} // namespace

CoverSolution solve_completion(const CoverCompleteTriple& t, std::size_t s)
{
    if (single_forced(t))
        return solve_single_forced(t);
    FreeReduction red = reduce_to_free(t);
    std::optional<CoverSolution> best;
    if (red.triple)
        best = solve_free(*red.triple, s);
    CoverSolution sol = lift_through_records(std::move(best), red.records, s);
    verify_in(t, sol);
    if (!sol.verified())
        throw std::logic_error("completion produced an invalid cover");
    return sol;
}

} // namespace cvc
