#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace binext {

/// Exact rational scalar; GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws Error(ParseError).
Rational parse_rational(std::string_view token);

Rational make_rational(long num, long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

bool is_integer(const Rational& q);
bool is_binary(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Rational dot(const QVector& a, const QVector& b);

/// Positive multiple of v with coprime integer entries (zero stays zero).
QVector primitive(const QVector& v);

}  // namespace binext
