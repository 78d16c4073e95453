#pragma once

namespace harmzero {

// q_{m,n}(x) = P_{m,n}(x) / (1+x)^n, where P_{m,n} is the binomial
// expansion of (1+x)^n truncated at degree m. Equals the CDF at m of a
// Binomial(n, x/(1+x)) variable. Conventions: m < 0 -> 0, m >= n -> 1.
//
// Evaluated through the regularized incomplete beta function
// I_{1/(1+x)}(n-m, m+1); stable for n well beyond 10^5, where direct
// summation of binom(n,k) x^k overflows.
double tail_ratio(int m, int n, double x);

// log binom(n, k) via log-gamma. Requires 0 <= k <= n.
double log_binomial(int n, int k);

// Reference oracle: direct summation of P_{m,n}(x)/(1+x)^n in extended
// precision (MPFR), rounded to double on return. Slow; intended for tests
// and self-checks. Requires n <= 10000, 1 <= digits <= 100.
double tail_ratio_exact(int m, int n, double x, int digits = 50);

}  // namespace harmzero
