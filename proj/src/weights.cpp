#include "cvc/weights.hpp"

#include <cctype>

#include "cvc/errors.hpp"

namespace cvc {

WeightMap WeightMap::uniform(const VertexSet& vertices, const Rational& w)
{
    WeightMap m;
    for (Vertex v : vertices)
        m.set(v, w);
    return m;
}

void WeightMap::set(Vertex v, const Rational& w)
{
    if (w < 0)
        throw PreconditionViolation("negative weight on vertex " + std::to_string(v));
    weights_[v] = w;
}

const Rational& WeightMap::at(Vertex v) const
{
    auto it = weights_.find(v);
    if (it == weights_.end())
        throw PreconditionViolation("no weight for vertex " + std::to_string(v));
    return it->second;
}

bool WeightMap::covers(const VertexSet& vs) const
{
    for (Vertex v : vs)
        if (!has(v))
            return false;
    return true;
}

Rational total_weight(const VertexSet& s, const WeightMap* w)
{
    if (!w)
        return Rational(static_cast<long long>(s.size()));
    Rational sum = 0;
    for (Vertex v : s)
        sum += w->at(v);
    return sum;
}

WeightMap live_weights(const ContractionTrace& trace, const WeightMap* original)
{
    WeightMap m;
    for (const auto& [live, repr] : trace.representation())
        m.set(live, total_weight(repr, original));
    return m;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

boost::multiprecision::cpp_int parse_int(std::string_view s)
{
    return boost::multiprecision::cpp_int(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return PreconditionViolation("malformed rational '" + std::string(text) + "'"); };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw fail();
        auto d = parse_int(den);
        if (d == 0)
            throw fail();
        r = Rational(parse_int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            throw fail();
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        boost::multiprecision::cpp_int w = whole.empty() ? 0 : parse_int(whole);
        boost::multiprecision::cpp_int f = frac.empty() ? 0 : parse_int(frac);
        r = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s))
            throw fail();
        r = Rational(parse_int(s));
    }
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r)
{
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace cvc
