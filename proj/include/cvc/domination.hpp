#pragma once

#include <cstddef>
#include <string_view>

#include "cvc/graph.hpp"

namespace cvc {

enum class CertificateKind { p3, clique, small };

std::string_view to_string(CertificateKind k);

/// A connected dominating set of a known shape.
struct DominatingCertificate {
    VertexSet vertices;
    CertificateKind kind;
};

/// Dominating set inducing P3 or a clique, which every connected P5-free graph
/// has. Smallest certificate first (a vertex, an edge, then triples, then
/// larger cliques), lexicographically least within a size. Throws
/// NoCertificate when none exists, which means the input was not a connected
/// P5-free graph.
DominatingCertificate bacso_tuza(const Graph& g);

/// Connected dominating set that is a clique or has at most 2s^2+s+3
/// vertices. P5-free inputs go through bacso_tuza; otherwise the vertices of
/// a maximal induced rP1+P5 plus a shortest path from each isolated vertex to
/// the first path vertex. Throws NoCertificate if g is disconnected or not
/// (sP1+P5)-free.
DominatingCertificate connected_dominating_set(const Graph& g, std::size_t s);

/// Largest size 2s^2+s+3 allowed for a non-clique certificate.
std::size_t small_certificate_bound(std::size_t s);

} // namespace cvc
