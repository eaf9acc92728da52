#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphmap {

// Base class for every failure the library can report deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion requested for zero or a multi-term radical scalar.
struct UnsupportedDivision : Error {
    using Error::Error;
};

// Variable counts (or matrix shapes) do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

// |F|^2 matches no sphere-restriction pattern.
struct NotASphereMap : Error {
    using Error::Error;
};

struct RadiiDoNotSumToOne : Error {
    using Error::Error;
};

// A tension/bitension routine was called with metadata of the wrong kind.
struct WrongKind : Error {
    using Error::Error;
};

// Product closed forms require both factors harmonic.
struct FactorsNotHarmonic : Error {
    using Error::Error;
};

struct ZeroMap : Error {
    using Error::Error;
};

struct NotHarmonicForm : Error {
    using Error::Error;
};

struct NotAForm : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

// sqrt(r1^2) leaves the coefficient ring.
struct RadiusNotRepresentable : Error {
    using Error::Error;
};

struct WrongDimensions : Error {
    using Error::Error;
};

// The two symbolic routes disagreed: an implementation bug by contract.
struct RouteDisagreement : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, const std::string& expected_tokens)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + expected_tokens),
          offset(off),
          expected(expected_tokens) {}
};

}  // namespace sphmap
