#include "cvc/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cvc/errors.hpp"

namespace cvc {

namespace {

std::vector<std::string> words(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string w;
    while (ss >> w)
        out.push_back(w);
    return out;
}

std::size_t number(const std::string& text, std::size_t line)
{
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
        throw ParseError(line, "expected a non-negative integer, got '" + text + "'");
    return v;
}

} // namespace

Instance parse_instance(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n, m;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::optional<WeightMap> weights;

    auto vertex = [&](const std::string& text) {
        std::size_t v = number(text, lineno);
        if (v >= *n)
            throw ParseError(lineno, "vertex " + text + " out of range");
        return static_cast<Vertex>(v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto ws = words(line);
        if (ws.empty() || ws[0][0] == '#')
            continue;
        if (!n) {
            if (ws.size() != 3 || ws[0] != "cvc")
                throw ParseError(lineno, "expected header 'cvc <n> <m>'");
            n = number(ws[1], lineno);
            m = number(ws[2], lineno);
            continue;
        }
        if (ws[0] == "w") {
            if (ws.size() != 3)
                throw ParseError(lineno, "expected 'w <u> <weight>'");
            Vertex v = vertex(ws[1]);
            if (!weights)
                weights.emplace();
            if (weights->has(v))
                throw ParseError(lineno, "second weight for vertex " + ws[1]);
            try {
                weights->set(v, parse_rational(ws[2]));
            } catch (const PreconditionViolation& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        if (ws.size() != 2)
            throw ParseError(lineno, "expected an edge '<u> <v>'");
        Vertex u = vertex(ws[0]), v = vertex(ws[1]);
        if (u == v)
            throw ParseError(lineno, "self-loop");
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
    }
    if (!n)
        throw ParseError(lineno, "missing header");
    if (edges.size() != *m)
        throw ParseError(lineno, "header announces " + std::to_string(*m) + " edges, found "
                                     + std::to_string(edges.size()));
    Instance inst{Graph::on_range(*n, edges), std::nullopt};
    if (weights) {
        for (Vertex v = 0; v < *n; ++v)
            if (!weights->has(v))
                weights->set(v, 1);
        inst.weights = std::move(weights);
    }
    return inst;
}

Instance parse_instance_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Graph& g, const WeightMap* w)
{
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.vertices()[i] != i)
            throw PreconditionViolation("serialize_instance needs labels 0..n-1");
    std::ostringstream out;
    out << "cvc " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    if (w)
        for (Vertex v : g.vertices())
            out << "w " << v << ' ' << to_string(w->at(v)) << '\n';
    return out.str();
}

WeightMap weights_or_unit(const Instance& inst)
{
    return inst.weights ? *inst.weights : WeightMap::uniform(inst.graph.vertices(), 1);
}

} // namespace cvc
