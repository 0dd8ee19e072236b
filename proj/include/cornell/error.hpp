#ifndef CORNELL_ERROR_HPP
#define CORNELL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cornell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (bad parameter, r <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

enum class SolverFailure {
    NoRoot,
    NoConvergence,
    GridTooCoarse,
    DomainTooSmall,
    BracketInvalid,
};

const char* to_string(SolverFailure kind) noexcept;

/// A numerical procedure could not deliver its post-condition.
class SolverError : public Error {
public:
    SolverError(SolverFailure kind, const std::string& what)
        : Error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    SolverFailure kind() const noexcept { return kind_; }
    /// what() without the failure-kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    SolverFailure kind_;
    std::string detail_;
};

}  // namespace cornell

#endif  // CORNELL_ERROR_HPP
