#pragma once

#include <stdexcept>
#include <string>

namespace fcba {

// Invalid configuration or incompatible shapes/layouts supplied by the caller.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or truncated input files (IDX ingestion, config files).
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite values encountered during numeric computation.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Update layouts disagree at aggregation time.
class AggregationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A metric is undefined on the given inputs (e.g. ASR with no eligible samples).
class MetricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fcba
