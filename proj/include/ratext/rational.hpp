#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ratext {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline int sgn(const BigRational& q) { return q.sign(); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

/// Integer power; negative exponents require q != 0.
BigRational rat_pow(const BigRational& q, long e);

BigInt factorial(unsigned n);

/// Largest integer <= q.
BigInt floor_rat(const BigRational& q);

/// Smallest integer >= q.
BigInt ceil_rat(const BigRational& q);

/// Renders "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string rat_str(const BigRational& q);

/// Strict parser for "p", "-p", "p/q" with integer p and positive integer q.
/// Returns nullopt on anything else (whitespace, decimals, empty fields).
std::optional<BigRational> parse_rational(std::string_view s);

}  // namespace ratext
