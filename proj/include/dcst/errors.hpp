#pragma once

#include <stdexcept>
#include <string>

namespace dcst {

// Malformed instance or result text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive procedure was asked to run beyond its configured bound.
struct LimitExceeded : std::runtime_error {
    LimitExceeded(const std::string& what_kind, int limit_value, int actual_value)
        : std::runtime_error(what_kind + " " + std::to_string(actual_value) +
                             " exceeds exhaustive limit " + std::to_string(limit_value)),
          limit(limit_value),
          actual(actual_value) {}
    int limit;
    int actual;
};

// A self-check that must hold on valid input failed; indicates a solver bug,
// never a property of the instance.
struct InternalInvariantBroken : std::logic_error {
    explicit InternalInvariantBroken(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dcst
