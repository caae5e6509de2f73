#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcgap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A factorization met a nonpositive pivot / eigenvalue outside the domain.
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::size_t index)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The requested size is beyond what the working precision can resolve.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, std::size_t index)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Evaluation point lies on the orthogonality arc.
class BoundaryError : public Error {
public:
    using Error::Error;
};

/// Asymptotic formula requested outside the regime it describes.
class RegimeError : public Error {
public:
    using Error::Error;
};

}  // namespace arcgap
