#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cutoffmatch {

// Exact rational arithmetic for budgets, flows and LP data. A thin mpq_class
// whose (num, den) constructor canonicalizes; plain mpq_class leaves 2/2 as is
// and then compares it unequal to 1.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  Rational() = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
  template <typename T, typename U>
  Rational(const __gmp_expr<T, U>& expr) : mpq_class(expr) {}
  Rational(const mpz_class& num, const mpz_class& den) : mpq_class(num, den) { canonicalize(); }
};

// Parses "num/den", an integer, or a decimal such as "0.7" or "-1.25" without
// any floating-point round trip. Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

// "n" for integers, "num/den" otherwise (canonical form).
std::string to_string(const Rational& value);

// Terminating decimal expansion ("0.7", "-12.125") when one exists.
std::optional<std::string> exact_decimal(const Rational& value);

bool is_integer(const Rational& value);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);

}  // namespace cutoffmatch
