#ifndef VOLCONJ_ASYMPTOTICS_HPP
#define VOLCONJ_ASYMPTOTICS_HPP

#include <complex>
#include <vector>

#include "volconj/jones.hpp"
#include "volconj/log_complex.hpp"

namespace volconj {

// One record of a convergence sweep: estimate = (u + 2 pi i) * log J_N / N,
// the quantity whose N -> infinity limit is H(u).
struct ConvergenceRow {
  long long N;
  LogComplex logJ;
  cplx estimate;
};

// Evaluates jones_eval for each N (strictly increasing, all >= 2), optionally
// in parallel; rows are merged in N order regardless of completion order.
// The canonical per-N phases carry incoherent multiples of 2 pi (log J_N is
// only defined mod 2 pi i), so a sequential alignment pass adds to each row
// the integer multiple of 2 pi nearest to a short linear-in-N extrapolation
// of the previous rows.  Each aligned value is still an exact logarithm of
// J_N, and a constant 2 pi k offset is absorbed by the b/N fit coefficient.
std::vector<ConvergenceRow> limit_sweep(cplx u, const std::vector<long long>& N_list,
                                        unsigned threads = 1);

// Least-squares fit estimate(N) = limit + (a log N + b)/N over >= 4 rows.
// residual is the rms misfit.  A rank-deficient design -> FitError.
struct FitResult {
  cplx limit;
  cplx log_coeff;    // a
  cplx const_coeff;  // b
  double residual;
};
FitResult extrapolate(const std::vector<ConvergenceRow>& rows);

// Same fit for a plain real sequence (used by the real-r laws).
FitResult fit_series(const std::vector<long long>& Ns, const std::vector<cplx>& values);

// Saddle-point leading term: log of
//   (N/(2 pi i)) * sqrt(2 pi) / (r sqrt(N) sqrt(y - 1/y)) * exp(N H(y,m^2)/(2 pi r i)).
LogComplex saddle_prediction(const JonesPoint& pt);

// Volume of the cone manifold with cone angle 2 pi |1-r|:
//   2 { L(pi r + alpha/2) - L(pi r - alpha/2) },  alpha = arccos(cos(2 pi r) - 1/2).
// r outside (5/6, 7/6) -> DomainError.
double cone_volume(double r);

// Real-r sweep: rows carry logJ = (log|J_N|, pi * sign(1-r) * flips_at_peak),
// i.e. the Im branch obeying the real-r limit law, and
// estimate = 2 pi r * logJ / N, so Re estimate -> cone volume and
// Im estimate -> 2 pi^2 (1 - r).
std::vector<ConvergenceRow> real_r_sweep(double r, const std::vector<long long>& N_list,
                                         unsigned threads = 1);

}  // namespace volconj

#endif  // VOLCONJ_ASYMPTOTICS_HPP
