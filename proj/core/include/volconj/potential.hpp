#ifndef VOLCONJ_POTENTIAL_HPP
#define VOLCONJ_POTENTIAL_HPP

#include <complex>

namespace volconj {

using cplx = std::complex<double>;

// Value of a potential function together with a note naming the log/branch
// convention that produced it.
struct PotentialValue {
  cplx value;
  const char* branch_note;
};

// H(xi,eta) = Li2(1/(xi*eta)) - Li2(xi/eta) + (log(-xi) + pi*i) * log(eta),
// principal logs.  Zero xi/eta or a Li2 argument exactly on the cut (1,inf)
// -> DomainError.
PotentialValue h_two(cplx xi, cplx eta);

// H(u) = H(y(u), m(u)^2) on the tracked branch.
PotentialValue h_of_u(cplx u);

// Vol(S^3 \ E) = 6 L(pi/3), computed once on first use (never hard-coded).
double vol_complement();

// f(u) = H(u) - pi*i*u - u*v/4 - i*Vol; vanishes at u = 0.
PotentialValue f_of_u(cplx u);

// The alternative Rogers-dilogarithm expression for f:
//   (R(z) + R(w) - pi^2/6) / (2 pi) - i*Vol/(2 pi).
// Also zero at u = 0, but its normalization disagrees with dPhi/du = 2v away
// from 0; computed separately so the gap can be reported.
PotentialValue f_rogers(cplx u);

// Phi(u) = 4 f(u) + u v(u); Phi(0) = 0 and dPhi/du = 2v.
PotentialValue phi_of_u(cplx u);

// Closed-form second derivative of H(z^r, m^2) in z at the saddle z = y^{1/r}:
//   r^2 y^{-2/r} (-y + 1/y).
// r must lie in (5/6, 7/6) (the real-r validity window); at r = 1 the value is
// (-3 - sqrt(3) i)/2.
cplx d2h_dz2_at_saddle(double r);

}  // namespace volconj

#endif  // VOLCONJ_POTENTIAL_HPP
