#pragma once

#include <stdexcept>
#include <string>

namespace mpoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A term would acquire a negative exponent.
struct ExponentError : Error {
    using Error::Error;
};

/// S_x / S_y applied to a term whose defining integral diverges
/// (x- resp. y-exponent zero).
struct DivergentIntegral : Error {
    using Error::Error;
};

/// Q_alpha requires alpha != 0.
struct InvalidAlpha : Error {
    using Error::Error;
};

struct UnknownVertex : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// An index weight f(i,j) is undefined at an edge type present in the graph.
struct UndefinedWeight : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct UnsupportedIndex : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace mpoly
