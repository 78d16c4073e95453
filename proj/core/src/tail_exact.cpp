#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "harmzero/binomial_tail.hpp"

namespace harmzero {

// Direct summation sum_{k<=m} binom(n,k) x^k / (1+x)^n with exact integer
// binomials and MPFR accumulation. The workhorse tail_ratio is tested
// against this, never the other way around.
double tail_ratio_exact(int m, int n, double x, int digits) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("tail_ratio_exact: x must be finite, >= 0");
  }
  if (n < 0 || n > 10000) {
    throw std::invalid_argument("tail_ratio_exact: n out of range [0,10000]");
  }
  if (digits < 1 || digits > 100) {
    throw std::invalid_argument("tail_ratio_exact: digits out of range [1,100]");
  }
  if (m < 0) return 0.0;
  if (m >= n) return 1.0;
  if (x == 0.0) return 1.0;

  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(digits * 3.322) + 64;

  mpfr_t sum, term, xp, base, denom;
  mpfr_inits2(prec, sum, term, xp, base, denom, (mpfr_ptr) nullptr);
  mpz_t bin;
  mpz_init_set_ui(bin, 1);

  mpfr_set_ui(sum, 0, MPFR_RNDN);
  mpfr_set_ui(xp, 1, MPFR_RNDN);  // x^k
  for (int k = 0; k <= m; ++k) {
    mpfr_mul_z(term, xp, bin, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    // binom(n, k+1) = binom(n, k) * (n-k) / (k+1), exact in integers
    mpz_mul_ui(bin, bin, static_cast<unsigned long>(n - k));
    mpz_divexact_ui(bin, bin, static_cast<unsigned long>(k + 1));
    mpfr_mul_d(xp, xp, x, MPFR_RNDN);
  }

  mpfr_set_ui(base, 1, MPFR_RNDN);
  mpfr_add_d(base, base, x, MPFR_RNDN);
  mpfr_pow_ui(denom, base, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div(sum, sum, denom, MPFR_RNDN);

  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpz_clear(bin);
  mpfr_clears(sum, term, xp, base, denom, (mpfr_ptr) nullptr);
  return out;
}

}  // namespace harmzero
