#pragma once

#include <gmpxx.h>

#include <string>

namespace eqtower {

// Exact nonnegative integer arithmetic for the bound ledger.
using BigNat = mpz_class;

BigNat big_pow(const BigNat& base, unsigned long exp);
BigNat big_factorial(unsigned long n);
std::string to_decimal(const BigNat& v);

}  // namespace eqtower
