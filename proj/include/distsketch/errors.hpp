#pragma once

#include <stdexcept>
#include <string>

namespace distsketch {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// distance(u, v) was asked for nodes in different graph components.
struct UnreachablePair : Error {
    using Error::Error;
};

/// A single-source computation found an unreachable node.
struct DisconnectedGraph : Error {
    using Error::Error;
};

/// Input text could not be parsed; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// An explicit distance matrix violates the metric axioms.
struct NotAMetric : Error {
    using Error::Error;
};

/// A negative edge weight outside the signed-graph reduction.
struct NegativeWeight : Error {
    using Error::Error;
};

/// A probability vector does not sum to 1 within tolerance.
struct BadDistribution : Error {
    using Error::Error;
};

/// Rough-estimate anchor has zero total mass (all distances zero).
struct BadAnchor : Error {
    using Error::Error;
};

/// Every pairwise distance is zero; ratio-based quantities are undefined.
struct DegenerateMetric : Error {
    using Error::Error;
};

/// Operation not supported for this backing (e.g. coordinate query on a graph).
struct UnsupportedQuery : Error {
    using Error::Error;
};

}  // namespace distsketch
