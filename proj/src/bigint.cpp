#include "dynzsig/bigint.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace dynzsig {

double log_abs(const BigInt& n) {
  if (sgn(n) == 0) throw std::domain_error("log_abs: log of zero");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::size_t approx_decimal_digits(const BigInt& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 10);
}

std::size_t decimal_digits(const BigInt& n) {
  std::size_t k = approx_decimal_digits(n);
  if (k <= 1) return 1;
  // sizeinbase may overshoot by one; compare against 10^(k-1).
  BigInt lower;
  mpz_ui_pow_ui(lower.get_mpz_t(), 10, k - 1);
  return cmpabs(n, lower) >= 0 ? k : k - 1;
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

BigInt abs_value(const BigInt& n) {
  BigInt r = n;
  mpz_abs(r.get_mpz_t(), r.get_mpz_t());
  return r;
}

}  // namespace dynzsig
