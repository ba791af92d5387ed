#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mdim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    int vertex;
    explicit SelfLoopError(int v)
        : Error("self-loop on vertex " + std::to_string(v)), vertex(v) {}
};

struct VertexOutOfRangeError : Error {
    int vertex;
    int n_vertices;
    VertexOutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")"),
          vertex(v), n_vertices(n) {}
};

struct TooSmallError : Error {
    int n;
    TooSmallError(const std::string& what_family, int n_, int minimum)
        : Error(what_family + " requires n >= " + std::to_string(minimum) +
                ", got n = " + std::to_string(n_)),
          n(n_) {}
};

struct BadSkipError : Error {
    int n, m;
    BadSkipError(int n_, int m_)
        : Error("skip m = " + std::to_string(m_) + " invalid for n = " + std::to_string(n_) +
                " (need 1 <= m < ceil(n/2))"),
          n(n_), m(m_) {}
};

struct DisconnectedGraphError : Error {
    DisconnectedGraphError() : Error("graph is not connected") {}
};

struct NotResolvingError : Error {
    std::vector<int> landmarks;
    explicit NotResolvingError(std::vector<int> w)
        : Error("landmark set is not resolving"), landmarks(std::move(w)) {}
};

// Raised when the fault-tolerant construction produces a set that fails the
// fault-tolerance check. This is a reportable audit outcome, not a bug trap:
// callers are expected to catch it and emit the counterexample.
struct LemmaViolationError : Error {
    std::vector<int> input_set;
    std::vector<int> constructed_set;
    int failing_deletion;
    LemmaViolationError(std::vector<int> w, std::vector<int> w_prime, int failing)
        : Error("constructed set is not fault-tolerant (deleting vertex " +
                std::to_string(failing) + " leaves a non-resolving set)"),
          input_set(std::move(w)), constructed_set(std::move(w_prime)),
          failing_deletion(failing) {}
};

struct NotApplicableError : Error {
    NotApplicableError(const std::string& case_id, int n)
        : Error("claim case " + case_id + " not applicable to n = " + std::to_string(n)) {}
};

struct BudgetExceededError : Error {
    BudgetExceededError() : Error("search budget exceeded") {}
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace mdim
