#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyesf {

// All exact probabilities, moments and counts live in one numeric tower:
// arbitrary-precision rationals, always kept in lowest terms with a
// positive denominator (GMP maintains both).
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Thrown when an enumeration would exceed its configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned long n);

/// Product of entrywise factorials, prod_j v_j!.
BigInt vector_factorial(const std::vector<int>& v);

BigInt binomial(unsigned long n, unsigned long k);

/// |v|! / prod_j v_j!  (the multinomial coefficient of the splitting v).
BigInt multinomial(const std::vector<int>& v);

/// Rising factorial a (a+1) ... (a+k-1); empty product for k = 0.
BigRational pochhammer(const BigRational& a, unsigned long k);

BigRational rat_pow(const BigRational& x, unsigned long e);

bool is_integer(const BigRational& x);

/// Accepts "p/q", plain integers, and exact decimal strings ("0.5" -> 1/2).
BigRational parse_rational(const std::string& text);

/// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRational& x);

double to_double(const BigRational& x);

}  // namespace polyesf
