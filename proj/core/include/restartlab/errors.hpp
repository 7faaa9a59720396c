#ifndef RESTARTLAB_ERRORS_HPP
#define RESTARTLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace restartlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strategy parameter violates its constraint (nu < 1, rho <= 1, ...).
class InvalidParameter : public Error {
public:
    InvalidParameter(std::string field, const std::string& reason)
        : Error(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Input outside the domain of the requested quantity (e.g. lambda_hat < lambda0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A lambda value or accumulator exceeded the 2^62 magnitude cap.
class Overflow : public Error {
public:
    using Error::Error;
};

/// The restart driver hit its run cap without a successful run.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::int64_t k_cap)
        : Error("no success within " + std::to_string(k_cap) + " runs"), k_cap_(k_cap) {}

    std::int64_t k_cap() const noexcept { return k_cap_; }

private:
    std::int64_t k_cap_;
};

/// The requested quantity does not exist for this strategy type
/// (e.g. a finite asymptotic upper bound for the additive type).
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace restartlab

#endif
