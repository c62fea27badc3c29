#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace niep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or a value outside its schema.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Incompatible matrix/vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A construction hypothesis does not hold for the given input.
/// condition() names the violated gate so callers can report it.
class GateError : public Error {
public:
    GateError(std::string condition, const std::string& detail)
        : Error(condition + ": " + detail), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Eigenvalue iteration exhausted its budget. Carries whatever eigenvalues
/// were already deflated so callers can report partial results.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<std::complex<double>> partial)
        : Error(what), partial_(std::move(partial)) {}

    const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

private:
    std::vector<std::complex<double>> partial_;
};

}  // namespace niep
