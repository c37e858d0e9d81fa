#pragma once

#include <stdexcept>
#include <string>

namespace anxdep {

// Error taxonomy maps onto process exit codes: usage 1, data 2, backend 3.

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input, violated invariants, schema mismatches.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Remote scoring/explanation backend failures (transport or content).
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what, std::string raw_response = {})
        : std::runtime_error(what), raw_response_(std::move(raw_response)) {}

    // Last raw backend response, kept for diagnostics.
    const std::string& raw_response() const { return raw_response_; }

private:
    std::string raw_response_;
};

}  // namespace anxdep
