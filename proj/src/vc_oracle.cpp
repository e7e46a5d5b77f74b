#include "cvc/vc_oracle.hpp"

#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cvc {

namespace {

using Bits = boost::dynamic_bitset<>;

// Lexicographic (weight, count) objective; it is an ordered group, so the
// exchange arguments behind the reductions hold for it as for plain sizes.
struct Cost {
    Rational weight = 0;
    long count = 0;

    Cost& operator+=(const Cost& o)
    {
        weight += o.weight;
        count += o.count;
        return *this;
    }
    Cost& operator-=(const Cost& o)
    {
        weight -= o.weight;
        count -= o.count;
        return *this;
    }
    friend Cost operator+(Cost a, const Cost& b) { return a += b; }
    friend Cost operator-(Cost a, const Cost& b) { return a -= b; }
    friend bool operator<(const Cost& a, const Cost& b)
    {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        return a.count < b.count;
    }
    friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
};

using Budget = std::optional<Cost>; // exclusive upper bound; empty = none

Budget minus(const Budget& b, const Cost& c)
{
    if (!b)
        return b;
    return *b - c;
}

struct Partial {
    Cost cost;
    Bits chosen;
};

class Engine {
public:
    Engine(const Graph& g, const WeightMap* w)
        : n_(g.order()), adj_(n_, Bits(n_)), cost_(n_)
    {
        const VertexSet& vs = g.vertices();
        for (std::size_t i = 0; i < n_; ++i) {
            cost_[i] = Cost{w ? w->at(vs[i]) : Rational(1), 1};
            for (Vertex u : g.neighbours(vs[i]))
                adj_[i].set(index_of(vs, u));
        }
    }

    std::size_t size() const { return n_; }
    const Bits& adj(std::size_t i) const { return adj_[i]; }
    const Cost& cost(std::size_t i) const { return cost_[i]; }

    Cost cost_of(const Bits& s) const
    {
        Cost c;
        for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
            c += cost_[i];
        return c;
    }

    std::optional<Partial> solve(Bits alive, const Budget& budget) const
    {
        Bits chosen(n_);
        Cost acc;
        reduce(alive, chosen, acc);
        auto fits = [&](const Cost& c) { return !budget || c < *budget; };

        std::vector<Bits> comps = split(alive);
        std::vector<Cost> bounds;
        Cost pending;
        for (const Bits& c : comps) {
            bounds.push_back(lower_bound(c));
            pending += bounds.back();
        }
        if (!fits(acc + pending))
            return std::nullopt;

        for (std::size_t i = 0; i < comps.size(); ++i) {
            pending -= bounds[i];
            auto r = branch(comps[i], minus(minus(budget, acc), pending));
            if (!r)
                return std::nullopt;
            acc += r->cost;
            chosen |= r->chosen;
        }
        if (!fits(acc))
            return std::nullopt;
        return Partial{acc, chosen};
    }

private:
    static std::size_t index_of(const VertexSet& vs, Vertex v)
    {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    }

    void take(std::size_t v, Bits& alive, Bits& chosen, Cost& acc) const
    {
        chosen.set(v);
        alive.reset(v);
        acc += cost_[v];
    }

    void reduce(Bits& alive, Bits& chosen, Cost& acc) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
                Bits nb = adj_[v] & alive;
                auto deg = nb.count();
                if (deg == 0) {
                    alive.reset(v);
                    changed = true;
                    continue;
                }
                if (deg == 1) {
                    auto u = nb.find_first();
                    if (cost_[u] <= cost_[v]) {
                        take(u, alive, chosen, acc);
                        alive.reset(v);
                        changed = true;
                        continue;
                    }
                }
                // v dominates a neighbour u (N[u] within N[v]) and is no
                // dearer: some optimum contains v.
                Bits closed = nb;
                closed.set(v);
                for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
                    Bits cu = adj_[u] & alive;
                    cu.set(u);
                    if (cu.is_subset_of(closed) && cost_[v] <= cost_[u]) {
                        take(v, alive, chosen, acc);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    std::vector<Bits> split(const Bits& alive) const
    {
        std::vector<Bits> out;
        Bits left = alive;
        while (left.any()) {
            Bits comp(n_);
            Bits frontier(n_);
            frontier.set(left.find_first());
            while (frontier.any()) {
                comp |= frontier;
                Bits next(n_);
                for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v))
                    next |= adj_[v];
                frontier = next & left & ~comp;
            }
            left &= ~comp;
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Greedy matching; every matched edge needs its own cover vertex.
    Cost lower_bound(const Bits& alive) const
    {
        Bits free = alive;
        Cost lb;
        for (auto v = free.find_first(); v != Bits::npos; v = free.find_next(v)) {
            Bits nb = adj_[v] & free;
            auto u = nb.find_first();
            if (u == Bits::npos)
                continue;
            free.reset(u);
            free.reset(v);
            lb += cost_[u] < cost_[v] ? cost_[u] : cost_[v];
        }
        return lb;
    }

    std::optional<Partial> branch(const Bits& comp, Budget budget) const
    {
        std::size_t pivot = comp.find_first();
        std::size_t best_deg = 0;
        for (auto v = comp.find_first(); v != Bits::npos; v = comp.find_next(v)) {
            auto d = (adj_[v] & comp).count();
            if (d > best_deg) {
                best_deg = d;
                pivot = v;
            }
        }

        std::optional<Partial> best;
        Bits nb = adj_[pivot] & comp;
        Cost nb_cost = cost_of(nb);

        Bits rest = comp;
        rest.reset(pivot);
        if (auto r = solve(rest, minus(budget, cost_[pivot]))) {
            r->cost += cost_[pivot];
            r->chosen.set(pivot);
            budget = r->cost;
            best = std::move(r);
        }

        Bits outside = comp & ~nb;
        outside.reset(pivot);
        if (auto r = solve(outside, minus(budget, nb_cost))) {
            r->cost += nb_cost;
            r->chosen |= nb;
            best = std::move(r);
        }
        return best;
    }

    std::size_t n_;
    std::vector<Bits> adj_;
    std::vector<Cost> cost_;
};

} // namespace

VcResult min_vertex_cover(const Graph& g, const WeightMap* w)
{
    Engine engine(g, w);
    const std::size_t n = engine.size();
    Bits all(n);
    all.set();
    auto opt = engine.solve(all, std::nullopt);
    Cost target = opt->cost;

    // Lexicographically least optimum: walk labels upwards, keeping a vertex
    // whenever some optimum still contains it.
    Bits alive = all;
    Bits chosen(n);
    Cost fixed;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive.test(i))
            continue;
        Bits nb = engine.adj(i) & alive;
        alive.reset(i);
        if (nb.none())
            continue;
        Cost with_i = fixed + engine.cost(i);
        auto probe = engine.solve(alive, target - with_i + Cost{0, 1});
        if (probe) {
            chosen.set(i);
            fixed = with_i;
        } else {
            chosen |= nb;
            alive &= ~nb;
            fixed += engine.cost_of(nb);
        }
    }

    VcResult res;
    const VertexSet& vs = g.vertices();
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i))
        res.cover.push_back(vs[i]);
    res.size = res.cover.size();
    res.weight = total_weight(res.cover, w);
    return res;
}

} // namespace cvc
