#ifndef VOLCONJ_OPTIMISTIC_HPP
#define VOLCONJ_OPTIMISTIC_HPP

#include <complex>

namespace volconj {

using cplx = std::complex<double>;

// Optimistic-limit potential V_p(xi,eta) = H(xi,eta) + (p/4)(log eta)^2
//                                           - 2 pi i log(eta).
cplx v_p(cplx xi, cplx eta, int p);

// Critical point of V_p found by a damped 2-variable complex Newton iteration
// from (e^{-i pi/3}, 1), using the closed-form gradient
//   dV/dxi  = (1/xi) log(eta + 1/eta - xi - 1/xi)
//   dV/deta = (1/eta){log((1 - xi eta)/(eta - xi)) + pi i}
//             + p log(eta)/(2 eta) - 2 pi i / eta
// and a finite-difference Jacobian.  |p| <= 4 -> ExceptionalSlope;
// non-convergence -> CriticalPointNotFound.
struct CriticalPoint {
  int p;
  cplx xi0;
  cplx eta0;
  double grad_norm;
  cplx value;  // V_p(xi0, eta0)
  int iterations;
};
CriticalPoint critical_point(int p);

// Compares lhs = V_p at the critical point against rhs = -cs + i vol from the
// (p,1) surgery, real parts mod pi^2 (canonical representative in
// [-pi^2/2, pi^2/2)).  agree_digits = floor(-log10(max mismatch)).
struct ObservationResult {
  int p;
  cplx lhs;
  cplx rhs;
  int agree_digits;
};
ObservationResult observation_check(int p);

}  // namespace volconj

#endif  // VOLCONJ_OPTIMISTIC_HPP
