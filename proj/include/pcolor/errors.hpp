#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcolor {

// Input file could not be parsed; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A documented precondition was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rejected parameter combination (CLI exit code 2).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact oracle invoked on an instance above its hard size guard.
class OracleGuardError : public std::invalid_argument {
public:
    OracleGuardError(const std::string& op, int n, int limit)
        : std::invalid_argument(op + ": n=" + std::to_string(n) + " exceeds oracle guard " +
                                std::to_string(limit)) {}
};

// A graph promised to be free of odd cycles of length <= bound turned out
// not to be; carries the discovered cycle as a certificate.
class ShortOddCycleError : public std::runtime_error {
public:
    ShortOddCycleError(std::vector<int> cycle, int bound)
        : std::runtime_error("precondition violated: found odd cycle of length " +
                             std::to_string(cycle.size()) + " <= " + std::to_string(bound)),
          cycle_(std::move(cycle)),
          bound_(bound) {}
    const std::vector<int>& cycle() const { return cycle_; }
    int bound() const { return bound_; }

private:
    std::vector<int> cycle_;
    int bound_;
};

// Certificate that a graph is not 3-colorable: an odd cycle inside the
// neighborhood of apex, so {apex} + cycle needs 4 colors.
class NotThreeColorableError : public std::runtime_error {
public:
    NotThreeColorableError(int apex, std::vector<int> odd_cycle)
        : std::runtime_error("graph is not 3-colorable: vertex " + std::to_string(apex) +
                             " has an odd cycle of length " + std::to_string(odd_cycle.size()) +
                             " in its neighborhood"),
          apex_(apex),
          cycle_(std::move(odd_cycle)) {}
    int apex() const { return apex_; }
    const std::vector<int>& cycle() const { return cycle_; }

private:
    int apex_;
    std::vector<int> cycle_;
};

// Solver could not reach the requested feasibility tolerance (CLI exit code 3).
class SolverStallError : public std::runtime_error {
public:
    SolverStallError(double best_residual, double tol)
        : std::runtime_error("sdp solver stalled: best residual " +
                             std::to_string(best_residual) + " > tolerance " +
                             std::to_string(tol)),
          best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

// Instance generator rejected an adversary specification.
class GenerateError : public std::invalid_argument {
public:
    GenerateError(const std::string& what, std::vector<std::pair<int, int>> offending = {})
        : std::invalid_argument(what), offending_(std::move(offending)) {}
    const std::vector<std::pair<int, int>>& offending_edges() const { return offending_; }

private:
    std::vector<std::pair<int, int>> offending_;
};

}  // namespace pcolor
