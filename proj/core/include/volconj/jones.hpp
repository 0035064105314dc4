#ifndef VOLCONJ_JONES_HPP
#define VOLCONJ_JONES_HPP

#include <complex>

#include "volconj/log_complex.hpp"

namespace volconj {

// One evaluation point of the Habiro sum: t = exp((u + 2 pi i)/N), which is
// the root of unity q_r = exp(2 pi r i / N) with r = 1 + u/(2 pi i).
struct JonesPoint {
  long long N;
  cplx u;
  cplx r() const;
};

// J_N(E;t) = sum_{n=0}^{N-1} prod_{k=1}^{n} t^N (1 - t^{-N-k})(1 - t^{-N+k}),
// evaluated in O(N) with the incremental product recurrence.  Factor
// magnitudes/arguments accumulate continuously; the returned phase is the
// continuous frame plus the principal argument of the final sum (one
// canonical representative of log J_N, which is defined mod 2 pi i).
// An exactly-zero factor (root-of-unity coincidence) truncates the sum: every
// later term vanishes.
LogComplex jones_eval(const JonesPoint& pt);

// Real-r specialization: at u = 2 pi i (r-1) every factor equals
// 2cos(2 pi r) - 2cos(2 pi r k/N), exactly real.  J_N is returned losslessly
// as (sign, log|J_N|) because |J_N| overflows double near N ~ 2200.
// flips_at_peak counts the negative factors inside the prefix product of the
// dominant term; pi * sign(1-r) * flips_at_peak is the branch of Im log J_N
// that follows the linear-in-N law for real r.
struct RealJonesResult {
  long long N;
  double r;
  double log_abs;
  int sign;  // -1, 0, +1
  long long flips_at_peak;
  bool validity_warning;  // r outside (5/6, 7/6): accepted, flagged

  double value() const;  // sign * exp(log_abs); +-inf when out of range
};
RealJonesResult jones_eval_real_r(long long N, double r);

// log|1 - exp(sigma*s*r*i - 2 pi r i)| for sigma = +-1 (integrand of the
// Riemann-discrepancy bounds).
double log_one_minus_exp_abs(cplx r, double s, int sigma);

// phi_{N,+-}(n) = sum_{k=1}^{n} (2pi/N) log(1 - exp(+-2 pi k r i/N - 2 pi r i))
//                 - int_0^{2 pi n / N} log(1 - exp(+-s r i - 2 pi r i)) ds,
// principal logs; the integral is adaptive Simpson to `tol`, subdivided at the
// phase wraps of the integrand.  Im r = 0 -> DomainError.
cplx riemann_discrepancy(long long N, long long n, cplx r, int sigma,
                         double tol = 1e-10);

// The four a-priori bounds on log|1 - exp(+-s r i - 2 pi r i)| for
// r = a + b i, b != 0, s in [0, 2pi - 2pi/N]:
//   plus case:  [log|1 - e^{2 pi b/N}|, log(1 + e^{2 pi b})]
//   minus case: [log|1 - e^{2 pi b}|,   log(1 + e^{4 pi |b|})]
struct MaxMinBounds {
  double lower_plus;
  double upper_plus;
  double lower_minus;
  double upper_minus;
};
MaxMinBounds max_min_bounds(cplx r, long long N);

}  // namespace volconj

#endif  // VOLCONJ_JONES_HPP
