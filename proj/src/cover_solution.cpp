#include "cvc/cover_solution.hpp"

namespace cvc {

CoverSolution make_solution(VertexSet cover, const WeightMap* w)
{
    CoverSolution s;
    s.size = cover.size();
    s.weight = total_weight(cover, w);
    s.cover = std::move(cover);
    return s;
}

void verify_against(CoverSolution& s, const Graph& g)
{
    s.is_cover = is_vertex_cover(g, s.cover);
    s.is_connected = is_connected_set(g, s.cover);
}

bool better(const CoverSolution& a, const CoverSolution& b)
{
    if (a.weight != b.weight)
        return a.weight < b.weight;
    if (a.size != b.size)
        return a.size < b.size;
    return a.cover < b.cover;
}

void keep_best(std::optional<CoverSolution>& best, std::optional<CoverSolution> cand)
{
    if (cand && (!best || better(*cand, *best)))
        best = std::move(cand);
}

} // namespace cvc
