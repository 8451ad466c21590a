#ifndef PADELAB_ERRORS_HPP
#define PADELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padelab {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments or preconditions the caller could have checked up front.
/// The CLI maps these to exit code 2.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// Perturbation exponent does not exceed the base polynomial's degree.
class DegreeError : public ArgumentError {
public:
    explicit DegreeError(const std::string& what) : ArgumentError(what) {}
};

/// Malformed or degenerate sample-set descriptor.
class DescriptorError : public ArgumentError {
public:
    explicit DescriptorError(const std::string& what) : ArgumentError(what) {}
};

/// Failures detected while computing. The CLI maps these to exit code 3.
class ComputationError : public Error {
public:
    explicit ComputationError(const std::string& what) : Error(what) {}
};

/// A series was asked for coefficients beyond its truncation order.
class InsufficientCoefficients : public ComputationError {
public:
    explicit InsufficientCoefficients(const std::string& what) : ComputationError(what) {}
};

/// The Hankel test failed: no unique approximant of the requested order.
class NotNormal : public ComputationError {
public:
    explicit NotNormal(const std::string& what) : ComputationError(what) {}
};

/// Evaluation hit a zero (or numerically vanishing) denominator.
class PoleAtPoint : public ComputationError {
public:
    explicit PoleAtPoint(const std::string& what) : ComputationError(what) {}
};

/// A built-in coefficient oracle was centered on its singularity.
class SingularCenter : public ComputationError {
public:
    explicit SingularCenter(const std::string& what) : ComputationError(what) {}
};

/// Taylor development requested at a pole of a rational function.
class CenterOnPole : public ComputationError {
public:
    explicit CenterOnPole(const std::string& what) : ComputationError(what) {}
};

/// Perturbation search exhausted its halving budget.
class ConstructionFailed : public ComputationError {
public:
    explicit ConstructionFailed(const std::string& what) : ComputationError(what) {}
};

/// A finite index family contains no admissible pair.
class IndexSetExhausted : public ComputationError {
public:
    explicit IndexSetExhausted(const std::string& what) : ComputationError(what) {}
};

} // namespace padelab

#endif
