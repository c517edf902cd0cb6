#include "bruhat/rational.hpp"

#include <cctype>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long remove_factor(Integer& n, unsigned long prime) {
  if (n == 0) return 0;
  Integer p(prime);
  mpz_t out;
  mpz_init(out);
  const long count = static_cast<long>(mpz_remove(out, n.get_mpz_t(), p.get_mpz_t()));
  n = Integer(out);
  mpz_clear(out);
  return count;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw FormatError("not an exact fraction: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational power(const Rational& base, long exponent) {
  Rational result = 1;
  Rational factor = exponent >= 0 ? base : Rational(1 / base);
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent) : static_cast<unsigned long>(-exponent);
  while (e > 0) {
    if (e & 1UL) result *= factor;
    factor *= factor;
    e >>= 1;
  }
  return result;
}

std::optional<long> padic_valuation(const Rational& value, unsigned long prime) {
  if (!is_prime(prime)) throw DomainError("p-adic valuation needs a prime, got " + std::to_string(prime));
  if (value == 0) return std::nullopt;
  Integer num = value.get_num();
  Integer den = value.get_den();
  return remove_factor(num, prime) - remove_factor(den, prime);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace bruhat
