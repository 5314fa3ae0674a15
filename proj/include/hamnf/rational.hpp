#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamnf {

/// Exact rational scalar. gmpxx keeps arithmetic results in lowest terms with
/// a positive denominator; values built from strings go through parse_scalar.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace). Throws
/// Error(ParseError) on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// p/q in lowest terms; q must be nonzero.
inline Scalar rational(long p, long q) {
    Scalar r{mpz_class(p), mpz_class(q)};
    r.canonicalize();
    return r;
}

} // namespace hamnf
