#pragma once

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvc/graph.hpp"

namespace cvc {

using Rational = boost::multiprecision::cpp_rational;

/// Non-negative rational weights keyed by vertex label.
class WeightMap {
public:
    WeightMap() = default;

    static WeightMap uniform(const VertexSet& vertices, const Rational& w);

    /// Throws PreconditionViolation on a negative weight.
    void set(Vertex v, const Rational& w);
    const Rational& at(Vertex v) const;
    bool has(Vertex v) const { return weights_.count(v) != 0; }
    bool covers(const VertexSet& vs) const;

    const std::map<Vertex, Rational>& entries() const { return weights_; }

    friend bool operator==(const WeightMap&, const WeightMap&) = default;

private:
    std::map<Vertex, Rational> weights_;
};

/// Sum of weights over `s`; with no map every vertex weighs 1.
Rational total_weight(const VertexSet& s, const WeightMap* w);

/// Weights of live vertices as the sums over the originals they represent.
WeightMap live_weights(const ContractionTrace& trace, const WeightMap* original);

/// "7", "7/3" or a finite decimal such as "2.25". Throws PreconditionViolation.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

} // namespace cvc
