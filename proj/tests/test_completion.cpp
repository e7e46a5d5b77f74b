#include <doctest.h>

#include <memory>

#include "cvc/completion.hpp"
#include "cvc/detection.hpp"
#include "cvc/testkit.hpp"
#include "support.hpp"

using namespace cvc;
using namespace testing_support;

namespace {

// hub 0, forced 1..4, v=5, w=6, a=7, b=8, c=9, d=10
Graph contraction_example()
{
    return Graph::on_range(11, {{0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10},
                                {9, 10}, {5, 6}, {1, 6}, {2, 6}, {1, 7}, {3, 7},
                                {1, 8}, {2, 8}, {4, 8}, {1, 9}, {2, 10}, {3, 10}});
}

// hub 0, forced 1, 2; frontier 3, 4 form a pseudo pair
Graph pair_example()
{
    return Graph::on_range(5, {{0, 3}, {0, 4}, {1, 3}, {2, 4}});
}

// Frontier K4 on 6..9 (each with a private forced vertex 1..4), 10 sees
// forced 1 and 5 but no clique vertex, 11 keeps 5 attached when 10 goes.
Graph clique_example(bool with_backup)
{
    std::vector<Edge> e{{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9},
                        {1, 6}, {2, 7}, {3, 8}, {4, 9}, {1, 10}, {5, 10}};
    for (Vertex w = 6; w <= 10; ++w)
        e.emplace_back(0, w);
    if (with_backup) {
        e.emplace_back(0, 11);
        e.emplace_back(5, 11);
    }
    return Graph::on_range(with_backup ? 12 : 11, e);
}

std::size_t smallest_s(const Graph& g)
{
    std::size_t s = 0;
    while (!is_free(g, s))
        ++s;
    return s;
}

Rational best_weight(const Graph& g, const VertexSet& must, const WeightMap* w)
{
    auto b = brute_force_cvc(g, must, w);
    REQUIRE(b);
    return b->weight;
}

// Brute-force optimum of a (possibly contracted) triple in live labels.
Rational live_optimum(const CoverCompleteTriple& t)
{
    WeightMap lw = live_weights(t.trace, t.weights.get());
    return best_weight(t.graph, t.forced, &lw);
}

std::vector<CoverCompleteTriple> sample_triples(std::size_t count, std::uint64_t base)
{
    std::vector<CoverCompleteTriple> out;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        TripleSpec spec;
        spec.n = 7 + i % 6;
        spec.forced = 2 + i % 3;
        spec.s = 1 + i % 2;
        spec.edge_density = 0.3 + 0.1 * static_cast<double>(i % 5);
        spec.seed = base + i;
        out.push_back(generate_triple(spec));
    }
    return out;
}

} // namespace

TEST_SUITE("completion") {

TEST_CASE("validate_triple")
{
    CHECK_NOTHROW(validate_triple(star(4), {0}, 0));
    CHECK_NOTHROW(validate_triple(contraction_example(), {0, 1, 2, 3, 4}, 0));
    CHECK(check_triple(complete(3), {0, 1}, 0) == TripleProperty::independent);
    CHECK(check_triple(path(3), {0}, 0) == TripleProperty::hub_universal);
    CHECK(check_triple(star(3), {1}, 0) == TripleProperty::membership);
    // forced 1 sees the adjacent pair 2, 3
    Graph g = Graph::on_range(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(check_triple(g, {0, 1}, 0) == TripleProperty::neighbourhoods_independent);
    CHECK(check_triple(Graph::on_range(3, {{0, 1}}), {0, 2}, 0) == TripleProperty::connected);
    try {
        validate_triple(complete(3), {0, 1}, 0);
        FAIL("expected NotCoverComplete");
    } catch (const NotCoverComplete& e) {
        CHECK(e.property() == TripleProperty::independent);
    }
}

TEST_CASE("set-contraction of the worked example")
{
    auto t = validate_triple(contraction_example(), {0, 1, 2, 3, 4}, 0);
    CHECK(t.frontier() == VertexSet{6, 7, 8, 9, 10});
    auto c = set_contract(t, 6);
    CHECK(c.graph.order() == 8);
    CHECK(c.graph.neighbours(c.hub) == VertexSet{5, 7, 8, 9, 10});
    CHECK(c.forced == VertexSet{3, 4, c.hub});
    CHECK(c.trace.represented(c.hub) == VertexSet{0, 1, 2, 6});
    CHECK_FALSE(check_triple(c.graph, c.forced, c.hub));
    CHECK_THROWS_AS(set_contract(t, 5), PreconditionViolation);
}

TEST_CASE("set-contraction down to a single edge")
{
    // hub 0, forced 1, w = 2, a = 3
    auto t = validate_triple(Graph::on_range(4, {{0, 2}, {0, 3}, {1, 2}}), {0, 1}, 0);
    auto c = set_contract(t, 2);
    CHECK(c.graph.order() == 2);
    CHECK(c.graph.edge_count() == 1);
    CHECK(c.forced == VertexSet{c.hub});
}

TEST_CASE("pseudo pairs and triples")
{
    auto t = validate_triple(pair_example(), {0, 1, 2}, 0);
    auto pairs = find_pseudo_pairs(t);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == 3);
    CHECK(pairs[0].second == 4);
    CHECK(pairs[0].first_witness == 1);
    CHECK(pairs[0].second_witness == 2);
    CHECK(is_pseudo_pair(t, pairs[0]));
    CHECK_FALSE(is_pseudo_pair(t, PseudoPair{3, 4, 2, 1}));

    // the only cover keeps both pair vertices
    auto type1 = smallest_type1_cover(t, 1);
    REQUIRE(type1);
    CHECK(type1->cover == VertexSet{0, 1, 2, 3, 4});
    CHECK(solve_completion(t, 1).cover == VertexSet{0, 1, 2, 3, 4});

    auto single = validate_triple(star(3), {0}, 0);
    CHECK(find_pseudo_pairs(single).empty());
    CHECK(find_pseudo_triples(single).empty());
    CHECK_FALSE(smallest_type1_cover(single, 1));
}

TEST_CASE("pseudo triple")
{
    // lone 4 with witness 1; left 5 and right 6 adjacent, shared witness 2
    // sees lone and left; right has its own forced neighbour 3
    Graph g = Graph::on_range(7, {{0, 4}, {0, 5}, {0, 6}, {5, 6}, {1, 4}, {2, 4}, {2, 5}, {3, 6}});
    auto t = validate_triple(g, {0, 1, 2, 3}, 0);
    auto triples = find_pseudo_triples(t);
    REQUIRE_FALSE(triples.empty());
    bool seen = false;
    for (const auto& p : triples) {
        CHECK(is_pseudo_triple(t, p));
        seen |= p.lone == 4 && p.left == 5 && p.right == 6 && p.lone_witness == 1 && p.shared_witness == 2;
    }
    CHECK(seen);
}

TEST_CASE("solve_single_forced")
{
    CHECK(solve_single_forced(validate_triple(star(4), {0}, 0)).cover == VertexSet{0});
    // hub universal over the path 1-2-3
    Graph g = Graph::on_range(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(solve_single_forced(validate_triple(g, {0}, 0)).cover == VertexSet{0, 2});
    CHECK(solve_single_forced(validate_triple(complete(2), {0}, 0)).cover == VertexSet{0});
    CHECK_THROWS_AS(solve_single_forced(validate_triple(pair_example(), {0, 1, 2}, 0)),
                    PreconditionViolation);
}

TEST_CASE("minimal connectors")
{
    auto t = validate_triple(pair_example(), {0, 1, 2}, 0);
    CHECK(minimal_connectors(t, 1).empty());
    CHECK(minimal_connectors(t, 3) == std::vector<VertexSet>{{3, 4}});
    CHECK(minimal_connectors(validate_triple(star(2), {0}, 0), 2) == std::vector<VertexSet>{{}});
    CHECK(complete_with(t, {3, 4}).cover == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("rule one contracts a common frontier neighbour of a pseudo pair")
{
    // pair 3, 4 as before; 5 sees both, the hub and forced 6
    Graph g = Graph::on_range(7, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}});
    auto t = validate_triple(g, {0, 1, 2, 6}, 0);
    auto step = apply_rule1(t);
    REQUIRE(step);
    CHECK(step->record.rule == ReductionRule::one);
    CHECK(step->record.site == 5);
    REQUIRE(step->record.pair);
    CHECK(step->record.pair->first == 3);
    REQUIRE(step->post);
    CHECK(step->post->trace.represented(step->post->hub) == VertexSet{0, 5, 6});
    auto again = replay(step->record);
    REQUIRE(again);
    CHECK(again->graph == step->post->graph);
    CHECK(again->forced == step->post->forced);
    CHECK_FALSE(apply_rule1(validate_triple(pair_example(), {0, 1, 2}, 0)));
}

TEST_CASE("rule two deletes a vertex missing a frontier K4")
{
    auto t = validate_triple(clique_example(true), {0, 1, 2, 3, 4, 5}, 0);
    CHECK_FALSE(apply_rule1(t));
    auto step = apply_rule2(t);
    REQUIRE(step);
    CHECK(step->record.rule == ReductionRule::two);
    CHECK(step->record.site == 10);
    CHECK(step->record.clique == VertexSet{6, 7, 8, 9});
    CHECK(step->record.post_feasible);
    REQUIRE(step->post);
    CHECK_FALSE(step->post->graph.has_vertex(10));
    CHECK(step->post->graph.has_vertex(5));
    auto again = replay(step->record);
    REQUIRE(again);
    CHECK(again->graph == step->post->graph);
    CHECK(solve_completion(t, smallest_s(t.graph)).weight == best_weight(t.graph, t.forced, nullptr));

    auto stuck = validate_triple(clique_example(false), {0, 1, 2, 3, 4, 5}, 0);
    auto dead = apply_rule2(stuck);
    REQUIRE(dead);
    CHECK_FALSE(dead->post);
    CHECK_FALSE(dead->record.post_feasible);
    CHECK(solve_completion(stuck, smallest_s(stuck.graph)).weight == best_weight(stuck.graph, stuck.forced, nullptr));
}

TEST_CASE("reduce_to_free and lifting")
{
    auto t = validate_triple(pair_example(), {0, 1, 2}, 0);
    CHECK(is_free_triple(t));
    auto red = reduce_to_free(t);
    CHECK(red.records.empty());
    REQUIRE(red.triple);
    CHECK(red.triple->graph == t.graph);

    CoverSolution sol = complete_with(t, {3, 4});
    CHECK(lift_through_records(sol, {}, 1).cover == sol.cover);
}

TEST_CASE("greedy frontier clique")
{
    auto one = validate_triple(Graph::on_range(4, {{0, 3}, {1, 3}, {2, 3}}), {0, 1, 2}, 0);
    CHECK(greedy_frontier_clique(one) == VertexSet{3});

    // 4 covers forced 1 and 2, 5 is adjacent to 4 and covers forced 3
    Graph g = Graph::on_range(6, {{0, 4}, {0, 5}, {4, 5}, {1, 4}, {2, 4}, {3, 5}});
    CHECK(greedy_frontier_clique(validate_triple(g, {0, 1, 2, 3}, 0)) == VertexSet{4, 5});

    CHECK_THROWS_AS(greedy_frontier_clique(validate_triple(pair_example(), {0, 1, 2}, 0)), GreedyStuck);
}

TEST_CASE("property: set-contraction keeps the triple valid and matches forcing w")
{
    for (const auto& t : sample_triples(60, 100)) {
        for (Vertex w : t.frontier()) {
            auto c = set_contract(t, w);
            CHECK_FALSE(check_triple(c.graph, c.forced, c.hub));
            CHECK(c.trace.consistent_with(c.graph, t.graph.vertices()));
            CHECK(live_optimum(c) == best_weight(t.graph, with(t.forced, w), nullptr));
        }
    }
}

TEST_CASE("property: excluding a vertex matches covers that avoid it")
{
    for (const auto& t : sample_triples(60, 300)) {
        for (Vertex w : set_difference(t.graph.vertices(), t.forced)) {
            auto rest = exclude_from_cover(t, w);
            // brute force on g with w removed and N(w) forced
            Graph h = t.graph.without({w});
            VertexSet must = set_union(t.forced, t.graph.neighbours(w));
            auto direct = is_connected(h) ? brute_force_cvc(h, must) : std::nullopt;
            CHECK(rest.has_value() == direct.has_value());
            if (rest && direct)
                CHECK(live_optimum(*rest) == direct->weight);
        }
    }
}

TEST_CASE("property: connectors join the forced set minimally")
{
    for (const auto& t : sample_triples(60, 500)) {
        auto conns = minimal_connectors(t, t.forced.size() - 1);
        CHECK_FALSE(conns.empty());
        for (const auto& c : conns) {
            CHECK(is_subset(c, t.frontier()));
            CHECK(is_connected_set(t.graph, set_union(t.forced, c)));
            for (Vertex v : c)
                CHECK_FALSE(is_connected_set(t.graph, set_union(t.forced, without(c, v))));
        }
    }
}

TEST_CASE("property: type-1 cover is the best cover containing a pseudo structure")
{
    std::size_t with_structure = 0;
    for (const auto& t : sample_triples(150, 700)) {
        std::optional<Rational> restricted;
        auto consider = [&](const VertexSet& base) {
            auto b = brute_force_cvc(t.graph, set_union(t.forced, base));
            if (b && (!restricted || b->weight < *restricted))
                restricted = b->weight;
        };
        for (const auto& p : find_pseudo_pairs(t))
            consider(make_set({p.first, p.second}));
        for (const auto& p : find_pseudo_triples(t))
            consider(make_set({p.lone, p.left, p.right}));
        std::size_t s = smallest_s(t.graph);
        auto type1 = smallest_type1_cover(t, s);
        CHECK(type1.has_value() == restricted.has_value());
        if (type1 && restricted) {
            ++with_structure;
            CHECK(type1->verified());
            CHECK(type1->weight == *restricted);
        }
    }
    CHECK(with_structure > 10);
}

TEST_CASE("property: completion matches exhaustive search")
{
    for (const auto& t : sample_triples(120, 900)) {
        std::size_t s = smallest_s(t.graph);
        auto sol = solve_completion(t, s);
        CHECK(sol.verified());
        CHECK(is_subset(t.forced, sol.cover));
        CHECK(sol.weight == best_weight(t.graph, t.forced, nullptr));
        auto red = reduce_to_free(t);
        if (red.triple)
            CHECK(is_free_triple(*red.triple));
    }
}

TEST_CASE("property: weighted completion matches exhaustive search")
{
    std::uint64_t seed = 1100;
    for (const auto& base : sample_triples(80, seed)) {
        auto w = std::make_shared<const WeightMap>(random_weights(base.graph, seed++));
        auto t = validate_triple(base.graph, base.forced, base.hub, std::nullopt, w);
        std::size_t s = smallest_s(t.graph);
        auto sol = solve_completion(t, s);
        CHECK(sol.verified());
        CHECK(sol.weight == best_weight(t.graph, t.forced, w.get()));
    }
}

}
