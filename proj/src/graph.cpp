#include "cvc/graph.hpp"

#include <deque>
#include <string>

#include "cvc/errors.hpp"

namespace cvc {

const char* to_string(TripleProperty p)
{
    switch (p) {
    case TripleProperty::membership: return "membership";
    case TripleProperty::independent: return "A";
    case TripleProperty::hub_universal: return "B";
    case TripleProperty::neighbourhoods_independent: return "C";
    case TripleProperty::connected: return "connected";
    }
    return "?";
}

Graph Graph::from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
{
    Graph g;
    g.labels_ = make_set(vertices);
    if (g.labels_.size() != vertices.size())
        throw PreconditionViolation("duplicate vertex label");
    g.index();
    g.adj_.assign(g.labels_.size(), {});
    for (auto [u, v] : edges) {
        if (u == v)
            throw PreconditionViolation("self-loop at " + std::to_string(u));
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw PreconditionViolation("edge endpoint is not a vertex");
        g.adj_[g.slot(u)].push_back(v);
        g.adj_[g.slot(v)].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::size_t before = a.size();
        a = make_set(std::move(a));
        if (a.size() != before)
            throw PreconditionViolation("parallel edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::on_range(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i)
        vs[i] = static_cast<Vertex>(i);
    return from_edges(std::move(vs), edges);
}

void Graph::index()
{
    Vertex top = labels_.empty() ? 0 : labels_.back() + 1;
    next_label_ = std::max(next_label_, top);
    slot_.assign(top, -1);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        slot_[labels_[i]] = static_cast<std::int32_t>(i);
}

bool Graph::has_vertex(Vertex v) const
{
    return v < slot_.size() && slot_[v] >= 0;
}

std::size_t Graph::slot(Vertex v) const
{
    if (!has_vertex(v))
        throw PreconditionViolation("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(slot_[v]);
}

const VertexSet& Graph::neighbours(Vertex v) const
{
    return adj_[slot(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    return contains(adj_[slot(u)], v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (Vertex v : adj_[i])
            if (labels_[i] < v)
                out.emplace_back(labels_[i], v);
    return out;
}

Graph Graph::induced(const VertexSet& keep) const
{
    Graph g;
    g.next_label_ = next_label_;
    for (Vertex v : keep)
        slot(v);
    g.labels_ = keep;
    g.index();
    g.adj_.reserve(keep.size());
    std::size_t twice = 0;
    for (Vertex v : keep) {
        g.adj_.push_back(set_intersection(adj_[slot(v)], keep));
        twice += g.adj_.back().size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

Graph Graph::without(const VertexSet& drop) const
{
    return induced(set_difference(labels_, drop));
}

std::pair<Graph, Vertex> Graph::merge(const VertexSet& group) const
{
    if (group.empty())
        throw PreconditionViolation("cannot merge an empty set");
    VertexSet outside = neighbourhood(*this, group);
    Vertex fresh = next_label_;

    Graph g;
    g.next_label_ = fresh + 1;
    g.labels_ = with(set_difference(labels_, group), fresh);
    g.index();
    g.adj_.reserve(g.labels_.size());
    std::size_t twice = 0;
    for (Vertex v : g.labels_) {
        if (v == fresh) {
            g.adj_.push_back(outside);
        } else {
            const VertexSet& old = adj_[slot(v)];
            VertexSet nb = set_difference(old, group);
            if (nb.size() != old.size())
                nb.push_back(fresh); // fresh exceeds every existing label
            g.adj_.push_back(std::move(nb));
        }
        twice += g.adj_.back().size();
    }
    g.edge_count_ = twice / 2;
    return {std::move(g), fresh};
}

ContractionTrace ContractionTrace::identity(const VertexSet& originals)
{
    ContractionTrace t;
    for (Vertex v : originals)
        t.repr_.emplace(v, VertexSet{v});
    return t;
}

const VertexSet& ContractionTrace::represented(Vertex live) const
{
    auto it = repr_.find(live);
    if (it == repr_.end())
        throw PreconditionViolation("vertex " + std::to_string(live) + " is not traced");
    return it->second;
}

VertexSet ContractionTrace::lift(const VertexSet& live) const
{
    std::vector<Vertex> out;
    for (Vertex v : live) {
        const VertexSet& r = represented(v);
        out.insert(out.end(), r.begin(), r.end());
    }
    return make_set(std::move(out));
}

VertexSet ContractionTrace::project(const VertexSet& originals) const
{
    VertexSet out;
    for (const auto& [live, r] : repr_)
        if (is_subset(r, originals))
            out.push_back(live);
    return out;
}

ContractionTrace ContractionTrace::merged(const VertexSet& group, Vertex into) const
{
    ContractionTrace t = *this;
    std::vector<Vertex> all;
    for (Vertex v : group) {
        auto it = t.repr_.find(v);
        if (it == t.repr_.end())
            throw PreconditionViolation("vertex " + std::to_string(v) + " is not traced");
        all.insert(all.end(), it->second.begin(), it->second.end());
        t.repr_.erase(it);
    }
    if (t.repr_.count(into))
        throw PreconditionViolation("merge target label already live");
    t.repr_.emplace(into, make_set(std::move(all)));
    t.events_.push_back({group, into});
    return t;
}

ContractionTrace ContractionTrace::removed(const VertexSet& live) const
{
    ContractionTrace t = *this;
    VertexSet gone = lift(live);
    for (Vertex v : live)
        t.repr_.erase(v);
    t.deleted_ = set_union(t.deleted_, gone);
    return t;
}

bool ContractionTrace::consistent_with(const Graph& g, const VertexSet& originals) const
{
    VertexSet keys;
    std::size_t total = deleted_.size();
    std::vector<Vertex> all(deleted_.begin(), deleted_.end());
    for (const auto& [live, r] : repr_) {
        if (r.empty())
            return false;
        keys.push_back(live);
        total += r.size();
        all.insert(all.end(), r.begin(), r.end());
    }
    VertexSet uni = make_set(std::move(all));
    return keys == g.vertices() && uni.size() == total && uni == originals;
}

std::pair<Graph, ContractionTrace> contract_edge(const Graph& g, Vertex u, Vertex v,
                                                 const ContractionTrace& t)
{
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v))
        throw PreconditionViolation("contract_edge: not an edge");
    auto c = contract_set(g, t, make_set({u, v}));
    return {std::move(c.graph), std::move(c.trace)};
}

Contracted contract_set(const Graph& g, const ContractionTrace& t, const VertexSet& group)
{
    auto [h, fresh] = g.merge(group);
    return {std::move(h), t.merged(group, fresh), fresh};
}

VertexSet neighbourhood(const Graph& g, const VertexSet& s)
{
    std::vector<Vertex> all;
    for (Vertex v : s) {
        const VertexSet& nb = g.neighbours(v);
        all.insert(all.end(), nb.begin(), nb.end());
    }
    return set_difference(make_set(std::move(all)), s);
}

bool is_connected(const Graph& g)
{
    return is_connected_set(g, g.vertices());
}

bool is_connected_set(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        return true;
    VertexSet seen{s.front()};
    std::deque<Vertex> queue{s.front()};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbours(u)) {
            if (contains(s, v) && !contains(seen, v)) {
                seen = with(std::move(seen), v);
                queue.push_back(v);
            }
        }
    }
    return seen.size() == s.size();
}

bool is_dominating(const Graph& g, const VertexSet& d)
{
    for (Vertex v : d)
        if (!g.has_vertex(v))
            throw PreconditionViolation("unknown vertex " + std::to_string(v));
    for (Vertex v : g.vertices())
        if (!contains(d, v) && !intersects(g.neighbours(v), d))
            return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (intersects(g.neighbours(v), s))
            return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (set_intersection(g.neighbours(v), s).size() + 1 != s.size())
            return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s)
{
    for (Vertex v : g.vertices())
        if (!contains(s, v) && !is_subset(g.neighbours(v), s))
            return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet seen;
    for (Vertex root : g.vertices()) {
        if (contains(seen, root))
            continue;
        std::vector<Vertex> comp{root};
        seen = with(std::move(seen), root);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex v : g.neighbours(comp[i])) {
                if (!contains(seen, v)) {
                    seen = with(std::move(seen), v);
                    comp.push_back(v);
                }
            }
        }
        out.push_back(make_set(std::move(comp)));
    }
    return out;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to)
{
    std::map<Vertex, Vertex> parent{{from, from}};
    std::deque<Vertex> queue{from};
    while (!queue.empty() && !parent.count(to)) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbours(u)) {
            if (!parent.count(v)) {
                parent.emplace(v, u);
                queue.push_back(v);
            }
        }
    }
    if (!parent.count(to))
        return {};
    std::vector<Vertex> path{to};
    while (path.back() != from)
        path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace cvc
