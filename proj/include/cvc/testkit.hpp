#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "cvc/completion.hpp"
#include "cvc/cover_solution.hpp"
#include "cvc/graph.hpp"
#include "cvc/vc_oracle.hpp"
#include "cvc/weights.hpp"

namespace cvc {

// Exhaustive oracles. They share nothing with the solver beyond Graph and
// the result types, and guard n <= 22 (TooLarge).

/// Minimum (weight, then size, then lexicographic) connected vertex cover
/// containing `must_contain`; empty when none exists.
std::optional<CoverSolution> brute_force_cvc(const Graph& g, const VertexSet& must_contain = {},
                                             const WeightMap* w = nullptr);

VcResult brute_force_vc(const Graph& g, const WeightMap* w = nullptr);

enum class Family { rejection, cograph, split_like, paper_figures };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct GeneratorSpec {
    std::size_t n = 8;
    std::size_t s = 0;
    double edge_density = 0.5;
    std::uint64_t seed = 0;
    Family family = Family::rejection;
    std::string figure = "G1"; // paper_figures only: "G1" or "G2"
};

/// Connected graph on 0..n-1 passing is_free(., s). Same spec, same graph.
/// Throws GenerationExhausted when rejection sampling gives up, and
/// PreconditionViolation on a bad spec.
Graph generate(const GeneratorSpec& spec);

/// The two six-vertex example graphs: "G1" is the 6-cycle 0..5 with chords
/// 0-3 and 2-5, "G2" is the 4-cycle 0-1-2-3 with the pendant path 0-4-5.
Graph figure_graph(const std::string& name);

/// Non-negative rationals p/q with q in 1..4 and value at most 10.
WeightMap random_weights(const Graph& g, std::uint64_t seed);

struct TripleSpec {
    std::size_t n = 10;            // total vertices including the forced ones
    std::size_t forced = 3;        // forced vertices, the hub included
    std::size_t s = 1;
    double edge_density = 0.5;     // among the vertices outside the forced set
    double attach_density = 0.4;   // chance a forced vertex picks an outside vertex
    std::uint64_t seed = 0;
    // Plant a frontier K4 w1..w4 (vertices forced..forced+3, wi seeing forced
    // vertex i) and w5 = forced+4 adjacent to none of them but to a random
    // nonempty subset of forced vertices 1..4. Needs forced >= 5, n >= forced + 5.
    bool plant_clique = false;
};

/// Random valid cover-complete triple whose graph is (sP1+P5)-free. The hub
/// is vertex 0, the other forced vertices are 1..forced-1.
CoverCompleteTriple generate_triple(const TripleSpec& spec);

/// True iff g contracts to the star K_{1,n-k}: some connected set A leaves
/// exactly n-k components in g - A. Requires g connected, n <= 10.
bool star_contraction_check(const Graph& g, std::size_t k);

} // namespace cvc
