#include "eqtower/bignat.hpp"

namespace eqtower {

BigNat big_pow(const BigNat& base, unsigned long exp) {
  BigNat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigNat big_factorial(unsigned long n) {
  BigNat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_decimal(const BigNat& v) { return v.get_str(); }

}  // namespace eqtower
