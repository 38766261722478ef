#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace flowerkit {

/// Arbitrary-precision integer. All counting in the toolkit is exact.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator by the backend.
/// There is no floating point anywhere in the semantics of this library.
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the counting convention: the number of k-subsets of an
/// n-set, so 0 whenever k < 0, k > n, or n < 0.
inline Int binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

/// Parses "p/q" or "p" (q > 0 after normalization; "3/-2" is rejected, "-3/2" is fine).
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den)) fail(errc::parse_error, "bad rational: '" + std::string(text) + "'");
    }
    if (!is_int(num)) fail(errc::parse_error, "bad rational: '" + std::string(text) + "'");
    // cpp_int's string constructor rejects an explicit '+', which is_int allows
    if (num.front() == '+') num.remove_prefix(1);
    if (!den.empty() && den.front() == '+') den.remove_prefix(1);
    Int p{std::string(num)};
    Int q = den.empty() ? Int(1) : Int(std::string(den));
    if (q <= 0) fail(errc::parse_error, "bad rational (denominator must be positive): '" + std::string(text) + "'");
    return Rational(p, q);
}

/// Canonical text form: "p" when integral, "p/q" otherwise. Round-trips via parse_rational.
inline std::string format_rational(const Rational& value) { return value.str(); }

} // namespace flowerkit
