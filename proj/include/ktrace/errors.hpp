#pragma once

#include <stdexcept>
#include <string>

namespace ktrace {

struct KError : std::runtime_error {
    explicit KError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RankMismatch : KError {
    explicit RankMismatch(const std::string& msg) : KError(msg) {}
};

struct DimensionMismatch : KError {
    explicit DimensionMismatch(const std::string& msg) : KError(msg) {}
};

struct NonIntegralExponent : KError {
    explicit NonIntegralExponent(const std::string& msg) : KError(msg) {}
};

// Raised when two routes that must agree produce different values.
struct OracleMismatch : KError {
    explicit OracleMismatch(const std::string& msg) : KError(msg) {}
};

struct ParseError : KError {
    explicit ParseError(const std::string& msg) : KError(msg) {}
};

}  // namespace ktrace
