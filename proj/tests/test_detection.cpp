#include <doctest.h>

#include "cvc/detection.hpp"
#include "cvc/errors.hpp"
#include "cvc/testkit.hpp"
#include "support.hpp"

using namespace cvc;
using namespace testing_support;

namespace {

// Independent check: some (r+5)-subset induces r isolated vertices plus a
// connected part with degrees 1,1,2,2,2 and four edges, i.e. rP1+P5.
bool brute_contains(const Graph& g, std::size_t r)
{
    const VertexSet& vs = g.vertices();
    std::size_t n = vs.size(), k = r + 5;
    if (n < k)
        return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k)
            continue;
        VertexSet sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                sub.push_back(vs[i]);
        Graph h = g.induced(sub);
        std::size_t zero = 0, one = 0, two = 0;
        VertexSet body;
        for (Vertex v : sub) {
            std::size_t d = h.degree(v);
            zero += d == 0;
            one += d == 1;
            two += d == 2;
            if (d > 0)
                body.push_back(v);
        }
        if (zero == r && one == 2 && two == 3 && h.edge_count() == 4 && is_connected_set(h, body))
            return true;
    }
    return false;
}

} // namespace

TEST_SUITE("detection") {

TEST_CASE("P5 is its own hit and C5 has none")
{
    auto hit = find_induced_linear(path(5), 0);
    REQUIRE(hit);
    CHECK(hit->path == std::array<Vertex, 5>{0, 1, 2, 3, 4});
    CHECK(hit->isolated.empty());
    CHECK_FALSE(find_induced_linear(cycle(5), 0));
}

TEST_CASE("G2 contains P5 on u,t,p,q,r but no P1+P5")
{
    Graph g2 = figure_graph("G2"); // p,q,r,s,t,u = 0..5
    auto hit = find_induced_linear(g2, 0);
    REQUIRE(hit);
    CHECK(hit->vertices() == VertexSet{0, 1, 2, 4, 5});
    std::array<Vertex, 5> forward{5, 4, 0, 1, 2}, backward{2, 1, 0, 4, 5};
    CHECK((hit->path == forward || hit->path == backward));
    CHECK(verify_hit(g2, *hit));
    CHECK_FALSE(find_induced_linear(g2, 1));
}

TEST_CASE("is_free on the example graphs and tiny graphs")
{
    CHECK(is_free(figure_graph("G1"), 0));
    CHECK_FALSE(is_free(figure_graph("G2"), 0));
    CHECK(is_free(figure_graph("G2"), 1));
    for (std::size_t n = 0; n < 5; ++n)
        for (std::size_t s = 0; s < 3; ++s)
            CHECK(is_free(path(n), s));
}

TEST_CASE("isolated vertices are found")
{
    // P5 on 0..4 plus two isolated vertices 5, 6
    Graph g = Graph::on_range(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto hit = find_induced_linear(g, 2);
    REQUIRE(hit);
    CHECK(hit->isolated == VertexSet{5, 6});
    CHECK(verify_hit(g, *hit));
    CHECK_FALSE(find_induced_linear(g, 3));
}

TEST_CASE("verify_hit rejects a wrong pattern")
{
    PatternHit fake{{}, {0, 1, 2, 3, 4}};
    CHECK_FALSE(verify_hit(cycle(5), fake));
    CHECK(verify_hit(path(5), fake));
}

TEST_CASE("find_clique")
{
    Graph k4_plus = Graph::on_range(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(find_clique(k4_plus, 4, 4) == VertexSet{0, 1, 2, 3});
    CHECK_FALSE(find_clique(cycle(5), 3));
    CHECK_FALSE(find_clique(figure_graph("G1"), 3));
    CHECK(find_clique(cycle(5), 2) == VertexSet{0, 1});
    CHECK_FALSE(find_clique(complete(5), 4, 0)); // every other vertex sees 0
    CHECK_THROWS_AS(find_clique(cycle(5), 0), PreconditionViolation);
}

TEST_CASE("property: detector agrees with subset enumeration")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_graph(5 + seed % 5, 0.25 + 0.05 * static_cast<double>(seed % 8), seed);
        for (std::size_t r = 0; r < 3; ++r) {
            auto hit = find_induced_linear(g, r);
            CHECK(hit.has_value() == brute_contains(g, r));
            if (hit)
                CHECK(verify_hit(g, *hit));
        }
    }
}

TEST_CASE("property: (s+1)P1+P5 implies sP1+P5")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(7 + seed % 5, 0.3, 1000 + seed);
        for (std::size_t s = 0; s < 3; ++s)
            if (find_induced_linear(g, s + 1))
                CHECK(find_induced_linear(g, s));
    }
}

TEST_CASE("property: (sP1+P5)-free graphs are P_{2s+5}-free")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_graph(9, 0.3, 2000 + seed);
        for (std::size_t s = 0; s < 2; ++s)
            if (is_free(g, s))
                CHECK_FALSE(has_induced_path(g, 2 * s + 5));
    }
}

}
