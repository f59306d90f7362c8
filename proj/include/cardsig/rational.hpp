// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <string>

namespace cardsig {

// Exact rational scalar used for every coordinate in the system.  GMP keeps
// values in lowest terms with a positive denominator, which is exactly the
// serialized form we promise.
using Rat = mpq_class;

// Parses "num/den" or a bare integer string ("-3", "7").  Whitespace is not
// accepted.  Throws Error{ValidationFailure} on malformed input or a zero
// denominator.
Rat parse_rat(const std::string& s);

// Formats as "num/den" in lowest terms with den > 0 (integers as "n/1"),
// matching what parse_rat round-trips.
std::string format_rat(const Rat& r);

}  // namespace cardsig
