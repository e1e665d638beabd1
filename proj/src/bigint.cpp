#include "mtc/bigint.hpp"

#include <stdexcept>

namespace mtc {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

long to_long(const BigInt& x, const char* what) {
  if (!x.fits_slong_p())
    throw std::out_of_range(std::string(what) + " out of range: " + x.get_str());
  return x.get_si();
}

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw std::invalid_argument("not an integer: '" + text + "'");
  return out;
}

}  // namespace mtc
