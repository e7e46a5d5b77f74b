#include "cvc/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvc/detection.hpp"
#include "cvc/domination.hpp"
#include "cvc/errors.hpp"
#include "cvc/instance_io.hpp"
#include "cvc/solver.hpp"
#include "cvc/testkit.hpp"
#include "cvc/vc_oracle.hpp"

namespace cvc {

namespace {

using nlohmann::json;

struct Options {
    std::string input;
    std::size_t s = 0;
    std::optional<std::size_t> k;
    bool weighted = false;
    bool verify_free = false;
    bool auto_s = false;
    bool as_json = false;

    std::string family = "rejection";
    std::string figure = "G1";
    std::size_t n = 8;
    double density = 0.5;
    std::uint64_t seed = 0;
    bool random_weights = false;
    std::string output;
};

std::string join(const VertexSet& vs)
{
    std::string out;
    for (Vertex v : vs) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

void print_cover(const Options& o, std::ostream& out, const VertexSet& cover, std::size_t size,
                 const Rational& weight, json extra)
{
    if (o.as_json) {
        extra["cover"] = cover;
        extra["size"] = size;
        extra["weight"] = to_string(weight);
        extra["feasible"] = true;
        if (o.k) {
            extra["k"] = *o.k;
            extra["decision"] = size <= *o.k;
        }
        emit(out, extra);
        return;
    }
    out << "size " << size << '\n' << "weight " << to_string(weight) << '\n'
        << "cover " << join(cover) << '\n';
    if (extra.contains("s_used"))
        out << "s " << extra["s_used"].get<std::size_t>() << '\n';
    if (o.k)
        out << "decision " << (size <= *o.k ? "yes" : "no") << '\n';
}

std::size_t smallest_free_s(const Graph& g)
{
    std::size_t s = 0;
    while (!is_free(g, s))
        ++s;
    return s;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    Instance inst = read_instance_file(o.input);
    std::size_t s = o.auto_s ? smallest_free_s(inst.graph) : o.s;
    WeightMap w = weights_or_unit(inst);
    SolverConfig cfg{s, o.weighted, o.verify_free};
    try {
        CoverSolution sol = solve_cvc(inst.graph, cfg, o.weighted ? &w : nullptr);
        print_cover(o, out, sol.cover, sol.size, sol.weight, json{{"s_used", s}});
    } catch (const Infeasible&) {
        if (o.as_json)
            emit(out, json{{"feasible", false}, {"s_used", s}});
        else
            out << "infeasible\n";
        return exit_infeasible;
    }
    return exit_ok;
}

int cmd_vc(const Options& o, std::ostream& out)
{
    Instance inst = read_instance_file(o.input);
    WeightMap w = weights_or_unit(inst);
    VcResult r = min_vertex_cover(inst.graph, o.weighted ? &w : nullptr);
    print_cover(o, out, r.cover, r.size, r.weight, json::object());
    return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    Instance inst = read_instance_file(o.input);
    WeightMap w = weights_or_unit(inst);
    auto best = brute_force_cvc(inst.graph, {}, o.weighted ? &w : nullptr);
    if (!best) {
        if (o.as_json)
            emit(out, json{{"feasible", false}});
        else
            out << "infeasible\n";
        return exit_infeasible;
    }
    print_cover(o, out, best->cover, best->size, best->weight, json::object());
    return exit_ok;
}

int cmd_check_free(const Options& o, std::ostream& out)
{
    Instance inst = read_instance_file(o.input);
    auto hit = find_induced_linear(inst.graph, o.s);
    if (o.as_json) {
        json j{{"free", !hit}, {"s", o.s}};
        if (hit) {
            j["path"] = std::vector<Vertex>(hit->path.begin(), hit->path.end());
            j["isolated"] = hit->isolated;
        }
        emit(out, j);
        return exit_ok;
    }
    if (!hit) {
        out << "free\n";
        return exit_ok;
    }
    out << "not free\n" << "path " << join(VertexSet(hit->path.begin(), hit->path.end())) << '\n';
    if (!hit->isolated.empty())
        out << "isolated " << join(hit->isolated) << '\n';
    return exit_ok;
}

int cmd_dominate(const Options& o, std::ostream& out)
{
    Instance inst = read_instance_file(o.input);
    DominatingCertificate c = connected_dominating_set(inst.graph, o.s);
    if (o.as_json)
        emit(out, json{{"kind", std::string(to_string(c.kind))}, {"vertices", c.vertices}});
    else
        out << "kind " << to_string(c.kind) << '\n' << "vertices " << join(c.vertices) << '\n';
    return exit_ok;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    auto family = family_from_string(o.family);
    if (!family)
        throw PreconditionViolation("unknown family " + o.family);
    GeneratorSpec spec{o.n, o.s, o.density, o.seed, *family, o.figure};
    Graph g = generate(spec);
    std::optional<WeightMap> w;
    if (o.random_weights)
        w = random_weights(g, o.seed);
    std::string text = serialize_instance(g, w ? &*w : nullptr);
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output);
        if (!(f << text))
            throw PreconditionViolation("cannot write " + o.output);
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact connected vertex cover for (sP1+P5)-free graphs", "cvc"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* c) { c->add_option("--input,-i", o.input, "instance file")->required(); };
    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "machine-readable output"); };

    CLI::App* solve = app.add_subcommand("solve", "minimum connected vertex cover");
    input(solve);
    solve->add_option("--s", o.s, "number of isolated vertices in the excluded pattern");
    solve->add_option("--k", o.k, "answer whether a cover of size at most k exists");
    solve->add_flag("--weighted", o.weighted, "minimise total weight");
    solve->add_flag("--verify-free", o.verify_free, "reject graphs that are not (sP1+P5)-free");
    solve->add_flag("--auto-s", o.auto_s, "use the smallest s for which the graph is free");
    json_flag(solve);

    CLI::App* vc = app.add_subcommand("vc", "minimum vertex cover");
    input(vc);
    vc->add_flag("--weighted", o.weighted, "minimise total weight");
    json_flag(vc);

    CLI::App* check = app.add_subcommand("check-free", "look for an induced sP1+P5");
    input(check);
    check->add_option("--s", o.s, "number of isolated vertices");
    json_flag(check);

    CLI::App* dom = app.add_subcommand("dominate", "connected dominating set certificate");
    input(dom);
    dom->add_option("--s", o.s, "number of isolated vertices in the excluded pattern");
    json_flag(dom);

    CLI::App* gen = app.add_subcommand("gen", "write a generated instance");
    gen->add_option("--family", o.family, "rejection, cograph, split-like or paper_figures");
    gen->add_option("--figure", o.figure, "G1 or G2 for paper_figures");
    gen->add_option("--n", o.n, "number of vertices");
    gen->add_option("--s", o.s, "freeness parameter");
    gen->add_option("--density", o.density, "edge density in [0, 1]");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_flag("--weights", o.random_weights, "add random rational weights");
    gen->add_option("--output,-o", o.output, "output file (default stdout)");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive connected vertex cover (n <= 22)");
    input(oracle);
    oracle->add_flag("--weighted", o.weighted, "minimise total weight");
    json_flag(oracle);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(o, out);
        if (vc->parsed())
            return cmd_vc(o, out);
        if (check->parsed())
            return cmd_check_free(o, out);
        if (dom->parsed())
            return cmd_dominate(o, out);
        if (gen->parsed())
            return cmd_gen(o, out);
        return cmd_oracle(o, out);
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const NotFree& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_free;
    } catch (const NoCertificate& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_free;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace cvc
