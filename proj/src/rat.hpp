#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace armred {

using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Arbitrary-precision rational. The backend canonicalizes after every
// operation: denominator > 0 and gcd(|num|, den) = 1, which is exactly the
// storage invariant required everywhere in the pipeline. Expression templates
// are off so arithmetic always yields concrete values.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

// Rational from a possibly unnormalized pair; flips signs so the denominator
// is positive, reduces, and rejects a zero denominator.
Rat make_rat(Int num, Int den);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& x);

// Accepts "p" or "p/q" with optional leading '-'; reduces the result.
// Rejects everything else with errc::format.
Rat parse_rat(std::string_view text);

// Accepts only the canonical rendering produced by rat_str: reduced,
// positive denominator, no "+" sign, no redundant "/1", no leading zeros.
Rat parse_rat_strict(std::string_view text);

enum class sqrt_status { exact, irrational, negative };

// Nonnegative rational square root. Sets `root` and returns `exact` when x is
// the square of a rational; distinguishes irrational from negative input.
sqrt_status rational_sqrt(const Rat& x, Rat& root);

// Bit length of |numerator| plus bit length of denominator (zero counts as 1).
std::size_t rat_bits(const Rat& x);

}  // namespace armred
