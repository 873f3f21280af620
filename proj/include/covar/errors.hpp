#ifndef COVAR_ERRORS_HPP
#define COVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covar {

/// Malformed or out-of-range input. `field()` names the offending argument
/// when one is known; the CLI turns this into exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& message, std::string field = {})
        : std::invalid_argument(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A documented precondition of an operation does not hold
/// (e.g. a highest-weight vector that is not killed by e).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A point lies outside the open stratum where the evaluated distribution
/// has maximal rank.
class StratumError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency assertion failed. Never expected in practice.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace covar

#endif
