#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowgamma {

/// Precondition violation on caller-supplied input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by gamma extraction when coefficient j differs from coefficient d-j.
class PalindromyError : public DomainError {
public:
    PalindromyError(std::size_t index, const std::string& what)
        : DomainError(what), index_(index) {}

    /// Smallest j with coeff(t^j) != coeff(t^{d-j}).
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A configured size cap (group order, monomial count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity that must hold exactly did not (non-integral
/// trace, non-integral multiplicity, broken Moebius round trip).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace chowgamma
