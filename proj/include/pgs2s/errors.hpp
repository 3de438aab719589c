#pragma once

#include <stdexcept>
#include <string>

namespace pgs2s {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch in a linear-algebra or model operation.
struct DimensionError : Error {
    using Error::Error;
};

// Non-finite values where finite ones are required (activations, gradients,
// optimizer steps, integrators).
struct NumericError : Error {
    using Error::Error;
};

// Bad or unknown configuration key/value.
struct ConfigError : Error {
    using Error::Error;
};

// Caller violated an operation's preconditions (missing truth, missing cube, ...).
struct ContractError : Error {
    using Error::Error;
};

// CSV schema problems: missing column, missing header.
struct SchemaError : Error {
    using Error::Error;
};

// CSV cell failed numeric parsing.
struct ParseError : Error {
    using Error::Error;
};

// Missing value in a series (no imputation is performed).
struct GapError : Error {
    using Error::Error;
};

// A channel has max == min, so min-max scaling is undefined.
struct DegenerateChannelError : Error {
    using Error::Error;
};

// Series too short for the requested (L, H, split) task.
struct TaskSizeError : Error {
    using Error::Error;
};

// Integration of a generator diverged to non-finite values.
struct DivergenceError : Error {
    using Error::Error;
};

// Metric undefined for the given inputs (zero denominator).
struct MetricError : Error {
    using Error::Error;
};

// Finite-difference probe landed on a non-finite function value.
struct ProbeError : Error {
    using Error::Error;
};

// Checkpoint container problems.
struct CheckpointError : Error {
    using Error::Error;
};
struct CheckpointVersionError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointShapeError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointCorruptError : CheckpointError {
    using CheckpointError::CheckpointError;
};

// Every trial of a random search failed.
struct SearchExhaustedError : Error {
    using Error::Error;
};

}  // namespace pgs2s
