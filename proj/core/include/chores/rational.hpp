#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chores {

/// Exact arbitrary-precision rational. All instance data, shares and periods
/// are carried in this type; floating point only appears in root solvers and
/// in report fields explicitly labelled as approximations.
using Rational = mpq_class;
using Integer = mpz_class;

using CostRow = std::vector<Rational>;

/// num/den in lowest terms. mpq_class(num, den) does not reduce, and GMP
/// arithmetic on unreduced operands is undefined, so build fractions here.
/// Throws std::invalid_argument for a zero denominator.
Rational ratio(long num, long den);

/// Parses "p/q", "p", or a decimal string such as "-1.466" or "2.5e-3".
/// The result is exact and canonical. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

/// Narrowing helpers; throw std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);
std::int64_t floor_int64(const Rational& value);
std::int64_t ceil_int64(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

Rational sum(const CostRow& row);

/// Copy of `row` sorted nonincreasing.
CostRow sorted_desc(CostRow row);

}  // namespace chores
