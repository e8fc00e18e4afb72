#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rwpair {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace rwpair
