#ifndef TREETP_RATIONAL_HPP
#define TREETP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treetp {

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (lowest terms, positive denominator) as long as they are built
/// through make_rational / parse_rational or arithmetic on canonical
/// operands.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and plain decimal literals ("0.25" -> 1/4).
/// Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace treetp

#endif
