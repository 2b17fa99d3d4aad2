#pragma once

#include <stdexcept>
#include <string>

namespace l1embed {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input documents, unparsable rationals, bad CLI arguments.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Violated preconditions on otherwise well-formed values
// (negative simplex distance, empty subset, bad cardinality, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An instance exceeds a configured exact-search budget. The caller may retry
// with a larger budget; the library never falls back to approximation.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// An internal cross-check failed: two routes that must agree disagreed, or a
// certified witness did not verify. Always a bug, never a data error.
class InternalCheckError : public Error {
public:
    explicit InternalCheckError(const std::string& what) : Error(what) {}
};

enum class MetricDefect {
    NonzeroDiagonal,
    NegativeDistance,
    Asymmetric,
    ZeroOffDiagonal,
    TriangleViolation,
};

inline const char* to_string(MetricDefect d) {
    switch (d) {
        case MetricDefect::NonzeroDiagonal: return "NonzeroDiagonal";
        case MetricDefect::NegativeDistance: return "NegativeDistance";
        case MetricDefect::Asymmetric: return "Asymmetric";
        case MetricDefect::ZeroOffDiagonal: return "ZeroOffDiagonal";
        case MetricDefect::TriangleViolation: return "TriangleViolation";
    }
    return "?";
}

// First violated metric axiom, with the offending indices. For
// TriangleViolation the triple (i,j,k) means dist(i,j) > dist(i,k) + dist(k,j).
class MetricValidationError : public Error {
public:
    MetricValidationError(MetricDefect defect, int i, int j = -1, int k = -1)
        : Error(format(defect, i, j, k)), defect_(defect), i_(i), j_(j), k_(k) {}

    MetricDefect defect() const { return defect_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    static std::string format(MetricDefect d, int i, int j, int k) {
        std::string s = std::string(to_string(d)) + "(" + std::to_string(i);
        if (j >= 0) s += "," + std::to_string(j);
        if (k >= 0) s += "," + std::to_string(k);
        return s + ")";
    }

    MetricDefect defect_;
    int i_, j_, k_;
};

}  // namespace l1embed
