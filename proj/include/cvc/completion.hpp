#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cvc/cover_solution.hpp"
#include "cvc/errors.hpp"
#include "cvc/graph.hpp"
#include "cvc/weights.hpp"

namespace cvc {

/// Instance of connected vertex cover completion: find a smallest connected
/// vertex cover of `graph` that contains `forced`.
///
/// Valid triples satisfy
///   (A) `forced` is independent,
///   (B) `hub` (a member of `forced`) is adjacent to every vertex outside it,
///   (C) each other forced vertex has an independent neighbourhood,
/// and `graph` is connected. The trace maps live vertices back to original
/// labels; `weights`, when set, is keyed by original labels and the weight of
/// a live vertex is the sum over what it represents.
struct CoverCompleteTriple {
    Graph graph;
    VertexSet forced;
    Vertex hub = 0;
    ContractionTrace trace;
    std::shared_ptr<const WeightMap> weights;

    /// N(forced \ {hub}): the outside neighbours of the non-hub forced vertices.
    VertexSet frontier() const;

    /// N(w) intersected with the forced set.
    VertexSet forced_neighbours(Vertex w) const;

    VertexSet originals() const;
};

/// The first violated property, if any.
std::optional<TripleProperty> check_triple(const Graph& g, const VertexSet& forced, Vertex hub);

/// Builds a triple after checking (A), (B), (C) and connectivity. The trace
/// defaults to the identity on g. Throws NotCoverComplete.
CoverCompleteTriple validate_triple(Graph g, VertexSet forced, Vertex hub,
                                    std::optional<ContractionTrace> trace = std::nullopt,
                                    std::shared_ptr<const WeightMap> weights = nullptr);

/// Set-contraction via a frontier vertex w: N(w) ∩ forced together with w
/// collapse into a new hub. Throws PreconditionViolation if w is not in the
/// frontier.
CoverCompleteTriple set_contract(const CoverCompleteTriple& t, Vertex w);

/// Same contraction for any vertex w outside the forced set (the hub is then
/// the only forced neighbour when w is off the frontier). Used wherever w is
/// known to belong to every cover under consideration.
CoverCompleteTriple force_into_cover(const CoverCompleteTriple& t, Vertex w);

/// Removes w, forces every outside neighbour of w into the cover, and checks
/// the result. Empty when the result is disconnected, i.e. no connected cover
/// avoids w.
std::optional<CoverCompleteTriple> exclude_from_cover(const CoverCompleteTriple& t, Vertex w);

/// Non-adjacent frontier vertices, each with a forced neighbour the other
/// one misses.
struct PseudoPair {
    Vertex first;
    Vertex second;
    Vertex first_witness;
    Vertex second_witness;
};

/// `lone` is adjacent to neither `left` nor `right`, which are adjacent;
/// `lone_witness` sees only `lone`, `shared_witness` sees `lone` and `left`
/// but not `right`.
struct PseudoTriple {
    Vertex lone;
    Vertex left;
    Vertex right;
    Vertex lone_witness;
    Vertex shared_witness;
};

/// All pseudo-dominating pairs (first < second), least witnesses, in
/// lexicographic order.
std::vector<PseudoPair> find_pseudo_pairs(const CoverCompleteTriple& t);

/// All pseudo-dominating triples with least witnesses, lexicographic order.
std::vector<PseudoTriple> find_pseudo_triples(const CoverCompleteTriple& t);

bool is_pseudo_pair(const CoverCompleteTriple& t, const PseudoPair& p);
bool is_pseudo_triple(const CoverCompleteTriple& t, const PseudoTriple& p);

/// Smallest connected cover containing the hub when the hub is the only
/// forced vertex: the hub plus a minimum (weight) vertex cover of the rest.
/// Throws PreconditionViolation if more vertices are forced.
CoverSolution solve_single_forced(const CoverCompleteTriple& t);

/// Subsets C of the frontier with |C| <= max_size such that forced ∪ C is
/// connected and no proper subset of C has that property, in order of size
/// and then lexicographically. When only the hub is forced the single
/// connector is the empty set.
std::vector<VertexSet> minimal_connectors(const CoverCompleteTriple& t, std::size_t max_size);

/// Smallest connected cover containing forced ∪ extra, by forcing each vertex
/// of `extra` (all outside the forced set, forced ∪ extra connected) and
/// solving the single-forced instance.
CoverSolution complete_with(const CoverCompleteTriple& t, const VertexSet& extra);

/// Smallest connected cover that contains both vertices of some pseudo pair
/// or all three of some pseudo triple; empty when no such structure exists.
std::optional<CoverSolution> smallest_type1_cover(const CoverCompleteTriple& t, std::size_t s);

enum class ReductionRule { one, two };

/// One application of a reduction rule.
///
/// Rule one: `site` = {x}, a frontier vertex adjacent to both vertices of the
/// pseudo pair `pair`; x is set-contracted. Rule two: `site` = {w5}, a
/// frontier vertex with no neighbour in the frontier clique `clique`; w5 is
/// deleted and its outside neighbours are forced.
struct ReductionRecord {
    ReductionRule rule;
    CoverCompleteTriple pre;
    Vertex site;
    std::optional<PseudoPair> pair;
    VertexSet clique;
    bool post_feasible = true; // false: no connected cover avoids the deleted vertex
};

struct RuleStep {
    std::optional<CoverCompleteTriple> post;
    ReductionRecord record;
};

std::optional<RuleStep> apply_rule1(const CoverCompleteTriple& t);
std::optional<RuleStep> apply_rule2(const CoverCompleteTriple& t);

/// Reapplies a record to its pre-state.
std::optional<CoverCompleteTriple> replay(const ReductionRecord& r);

/// No pseudo pair shares a frontier neighbour and G[frontier] is (P1+K4)-free.
bool is_free_triple(const CoverCompleteTriple& t);

struct FreeReduction {
    /// Empty when a rule-two step left no connected cover avoiding its
    /// deleted vertex; the answer then comes from the records alone.
    std::optional<CoverCompleteTriple> triple;
    std::vector<ReductionRecord> records;
};

/// Applies rule one exhaustively, then rule two once, and repeats until
/// neither applies.
FreeReduction reduce_to_free(const CoverCompleteTriple& t);

/// Undoes the records last to first: at each step the carried solution is
/// compared with the smallest type-1 cover of the pre-state.
CoverSolution lift_through_records(std::optional<CoverSolution> sol,
                                   const std::vector<ReductionRecord>& records, std::size_t s);

/// Clique K in the frontier with N(K) ∩ forced = forced, grown greedily from
/// a vertex with the largest forced neighbourhood. Requires a free triple
/// without pseudo pairs; throws GreedyStuck otherwise.
VertexSet greedy_frontier_clique(const CoverCompleteTriple& t);

/// Smallest (minimum weight) connected vertex cover containing the forced
/// set, for (sP1+P5)-free triples.
CoverSolution solve_completion(const CoverCompleteTriple& t, std::size_t s);

/// Sets the solution's flags by checking it against the triple's graph.
void verify_in(const CoverCompleteTriple& t, CoverSolution& sol);

} // namespace cvc
