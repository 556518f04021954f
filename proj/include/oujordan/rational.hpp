#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "oujordan/error.hpp"

namespace oujordan {

// Exact coefficient field. GMP keeps every value canonical: lowest terms,
// denominator > 0. Expression templates are off so values behave like plain
// scalars.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Accepts "p/q" or an integer literal; q must be positive.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise; always lowest terms.
std::string to_string(const Rational& value);

// C(n, k); zero outside 0 <= k <= n, so sums over binomials need no bounds
// case analysis.
Integer binomial(long n, long k);

// n!! with (-1)!! = 1 and 0!! = 1.
Integer double_factorial(long n);

Integer factorial(long n);

Rational rational_pow(const Rational& base, long exponent);

} // namespace oujordan
