#include "polyesf/rational.hpp"

#include <cctype>

namespace polyesf {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt vector_factorial(const std::vector<int>& v) {
  BigInt r = 1;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("vector_factorial: negative entry");
    r *= factorial(static_cast<unsigned long>(x));
  }
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt multinomial(const std::vector<int>& v) {
  unsigned long total = 0;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("multinomial: negative entry");
    total += static_cast<unsigned long>(x);
  }
  BigInt r = factorial(total);
  for (int x : v) r /= factorial(static_cast<unsigned long>(x));
  return r;
}

BigRational pochhammer(const BigRational& a, unsigned long k) {
  BigRational r = 1;
  BigRational term = a;
  for (unsigned long i = 0; i < k; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

BigRational rat_pow(const BigRational& x, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  // num/den are coprime, so their powers are as well; no canonicalize needed,
  // but the denominator sign is preserved automatically (always positive).
  return r;
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigRational r;
    if (r.set_str(text, 10) != 0)
      throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
  }

  auto dot = text.find('.');
  if (dot == std::string::npos) {
    BigRational r;
    if (r.set_str(text, 10) != 0)
      throw std::invalid_argument("parse_rational: bad integer '" + text + "'");
    return r;
  }

  // Exact decimal: digits after the point become a power-of-ten denominator.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))))
      throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
  }
  BigInt num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

double to_double(const BigRational& x) { return x.get_d(); }

}  // namespace polyesf
