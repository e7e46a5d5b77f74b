#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace cvc {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex labels. All set helpers below assume
/// (and preserve) that representation.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_set(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool contains(const VertexSet& s, Vertex v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const VertexSet& a, const VertexSet& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

inline VertexSet with(VertexSet s, Vertex v)
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v)
        s.insert(it, v);
    return s;
}

inline VertexSet without(VertexSet s, Vertex v)
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v)
        s.erase(it);
    return s;
}

} // namespace cvc
