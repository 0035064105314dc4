#ifndef VOLCONJ_SURGERY_HPP
#define VOLCONJ_SURGERY_HPP

#include <complex>

namespace volconj {

using cplx = std::complex<double>;

// Dehn-filling slope.  Integer pairs must be coprime; non-integer pairs are
// accepted as generalized surgery coefficients.
struct FillingSlope {
  double p;
  double q;
};

struct FillingResult {
  FillingSlope slope;
  cplx u;
  cplx v;
  double residual;  // |p u + q v - 2 pi i| at the returned point
  int iterations;
};

// Damped Newton iteration on g(u) = p u + q v(u) - 2 pi i from the start
// u0 = 2 pi i / (p + q tau0).  No convergence within 50 iterations, or an
// iterate leaving the validity disk -> NonHyperbolicOrOutOfRange.
FillingResult solve_filling(FillingSlope slope);

// Right-hand side of the volume/Chern-Simons formula:
//   X = H(u)/i - pi u - u v/(4 i) - (pi/2) lambda,
// vol = Re X, cs = Im X reduced mod pi^2 into [-pi^2/2, pi^2/2).
struct VolCS {
  double vol;
  double cs;
};
VolCS vol_cs(cplx u, cplx lambda);

// Full (p,1) filling: solve, take lambda = u (core-geodesic complex length for
// q = 1), evaluate vol/cs.  |p| <= 4 are the non-hyperbolic exceptional slopes
// -> ExceptionalSlope.
struct SurgeryResult {
  int p;
  cplx u;
  cplx v;
  cplx lambda;
  double vol;
  double cs;
  double residual;
};
SurgeryResult vol_cs_p1(int p);

}  // namespace volconj

#endif  // VOLCONJ_SURGERY_HPP
