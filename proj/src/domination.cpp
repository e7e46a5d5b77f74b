#include "cvc/domination.hpp"

#include <functional>
#include <optional>
#include <string>

#include "cvc/detection.hpp"
#include "cvc/errors.hpp"

namespace cvc {

std::string_view to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::p3: return "P3";
    case CertificateKind::clique: return "clique";
    case CertificateKind::small: return "small";
    }
    return "?";
}

std::size_t small_certificate_bound(std::size_t s)
{
    return 2 * s * s + s + 3;
}

namespace {

// Visits k-cliques in lexicographic order until `visit` returns true.
bool each_clique(const Graph& g, const VertexSet& pool, std::size_t k, VertexSet& clique,
                 const std::function<bool(const VertexSet&)>& visit)
{
    if (clique.size() == k)
        return visit(clique);
    for (Vertex v : pool) {
        if (!clique.empty() && v <= clique.back())
            continue;
        clique.push_back(v);
        if (each_clique(g, set_intersection(pool, g.neighbours(v)), k, clique, visit))
            return true;
        clique.pop_back();
    }
    return false;
}

std::optional<DominatingCertificate> dominating_triple(const Graph& g)
{
    const VertexSet& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t l = j + 1; l < vs.size(); ++l) {
                VertexSet t{vs[i], vs[j], vs[l]};
                std::size_t edges = g.adjacent(vs[i], vs[j]) + g.adjacent(vs[i], vs[l])
                                    + g.adjacent(vs[j], vs[l]);
                if (edges < 2 || !is_dominating(g, t))
                    continue;
                return DominatingCertificate{t, edges == 3 ? CertificateKind::clique
                                                           : CertificateKind::p3};
            }
    return std::nullopt;
}

} // namespace

DominatingCertificate bacso_tuza(const Graph& g)
{
    if (g.empty() || !is_connected(g))
        throw NoCertificate("bacso_tuza: graph must be connected and non-empty");

    for (std::size_t k = 1; k <= g.order(); ++k) {
        if (k == 3) {
            if (auto t = dominating_triple(g))
                return *t;
            continue;
        }
        VertexSet clique;
        std::optional<VertexSet> found;
        bool any = false;
        each_clique(g, g.vertices(), k, clique, [&](const VertexSet& c) {
            any = true;
            if (!is_dominating(g, c))
                return false;
            found = c;
            return true;
        });
        if (found)
            return {*found, CertificateKind::clique};
        if (!any && k > 3)
            break; // no k-clique, so no larger one either
    }
    throw NoCertificate("no dominating P3 or clique; graph is not P5-free");
}

DominatingCertificate connected_dominating_set(const Graph& g, std::size_t s)
{
    if (g.empty() || !is_connected(g))
        throw NoCertificate("connected_dominating_set: graph must be connected and non-empty");

    auto hit = find_induced_linear(g, 0);
    if (!hit)
        return bacso_tuza(g);

    std::size_t r = 0;
    while (auto next = find_induced_linear(g, r + 1)) {
        ++r;
        hit = next;
        if (r >= s)
            throw NoCertificate("graph contains an induced " + std::to_string(s) + "P1+P5");
    }
    if (r >= s)
        throw NoCertificate("graph contains an induced " + std::to_string(s) + "P1+P5");

    std::vector<Vertex> all(hit->path.begin(), hit->path.end());
    all.insert(all.end(), hit->isolated.begin(), hit->isolated.end());
    for (Vertex a : hit->isolated) {
        auto path = shortest_path(g, a, hit->path[0]);
        if (path.empty() || path.size() > 2 * s + 4)
            throw NoCertificate("connecting path exceeds 2s+4 vertices");
        all.insert(all.end(), path.begin(), path.end());
    }
    VertexSet d = make_set(std::move(all));
    if (d.size() > small_certificate_bound(s) || !is_dominating(g, d) || !is_connected_set(g, d))
        throw NoCertificate("path-augmented pattern is not a small connected dominating set");
    return {d, CertificateKind::small};
}

} // namespace cvc
