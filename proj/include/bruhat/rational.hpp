#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bruhat {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws FormatError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// p^k for any integer k.
Rational power(const Rational& base, long exponent);

/// Exact p-adic valuation; nullopt stands for +infinity (value zero).
std::optional<long> padic_valuation(const Rational& value, unsigned long prime);

bool is_prime(unsigned long n);

double to_double(const Rational& value);

}  // namespace bruhat
