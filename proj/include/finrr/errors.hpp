#pragma once

#include <stdexcept>
#include <string>

namespace finrr {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Componentwise operation on divisors of different lengths.
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// Lattice generator with nonzero degree (not in V0).
struct NonZeroDegreeGenerator : Error {
    explicit NonZeroDegreeGenerator(const std::string& msg) : Error(msg) {}
};

// Empty generator set without the caller opting into the trivial subgroup.
struct EmptyGenerators : Error {
    explicit EmptyGenerators(const std::string& msg) : Error(msg) {}
};

// Structure violating a degree hypothesis without allow_broken.
struct DegreeHypothesisError : Error {
    explicit DegreeHypothesisError(const std::string& msg) : Error(msg) {}
};

// Invalid weighted graph (asymmetric, negative weight, loop, disconnected).
struct GraphError : Error {
    explicit GraphError(const std::string& msg) : Error(msg) {}
};

// Permutation construction requested for n > 10.
struct TooManyVertices : Error {
    explicit TooManyVertices(const std::string& msg) : Error(msg) {}
};

// Invalid region specification or unsupported output dimension.
struct RegionError : Error {
    explicit RegionError(const std::string& msg) : Error(msg) {}
};

} // namespace finrr
