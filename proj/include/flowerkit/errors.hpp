#pragma once

#include <stdexcept>
#include <string>

namespace flowerkit {

/// Machine-readable error categories surfaced by the CLI as `error.code`.
enum class errc {
    bad_params,
    parse_error,
    empty_edge,
    empty_family,
    ground_set_too_large,
    not_prime,
    precondition_violated,
    threshold_too_small,
    too_large,
    dimension_mismatch,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
    case errc::empty_edge: return "EmptyEdge";
    case errc::empty_family: return "EmptyFamily";
    case errc::ground_set_too_large: return "GroundSetTooLarge";
    case errc::not_prime: return "NotPrime";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::threshold_too_small: return "ThresholdTooSmall";
    case errc::too_large: return "TooLarge";
    case errc::dimension_mismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Input-text errors carry the 1-based line where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(errc::parse_error, what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace flowerkit
