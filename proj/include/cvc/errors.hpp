#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

enum class TripleProperty {
    membership,                 // hub not in the forced set, or labels unknown
    independent,                // (A)
    hub_universal,              // (B)
    neighbourhoods_independent, // (C)
    connected,
};

const char* to_string(TripleProperty p);

class NotCoverComplete : public Error {
public:
    NotCoverComplete(TripleProperty p, const std::string& what)
        : Error(what), property_(p)
    {
    }
    TripleProperty property() const { return property_; }

private:
    TripleProperty property_;
};

/// A dominating certificate that must exist for the input class was not found.
class NoCertificate : public Error {
public:
    using Error::Error;
};

/// The greedy frontier clique hit a vertex the construction rules out.
class GreedyStuck : public Error {
public:
    using Error::Error;
};

class NotFree : public Error {
public:
    explicit NotFree(std::size_t s)
        : Error("graph is not (" + std::to_string(s) + "P1+P5)-free"), s_(s)
    {
    }
    std::size_t s() const { return s_; }

private:
    std::size_t s_;
};

/// No connected vertex cover exists (two or more components carry edges).
class Infeasible : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class GenerationExhausted : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace cvc
