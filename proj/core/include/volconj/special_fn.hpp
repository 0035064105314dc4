#ifndef VOLCONJ_SPECIAL_FN_HPP
#define VOLCONJ_SPECIAL_FN_HPP

#include <complex>

namespace volconj {

using cplx = std::complex<double>;

// Dilogarithm Li2(z) = -int_0^z log(1-t)/t dt, principal branch with cut on
// (1,+inf).  Points exactly on the cut (im == 0, re > 1) are evaluated as the
// limit from the lower half-plane, Li2(x - i0).  Throws InvalidInput on
// non-finite input.
cplx li2(cplx z);

// Lobachevsky function L(theta) = Im(Li2(e^{2 i theta}))/2; odd and
// pi-periodic, any finite real argument accepted.
double lobachevsky(double theta);

// Rogers dilogarithm R(xi) = (1/2) log(xi) log(1-xi) + Li2(xi), principal
// logs.  xi in {0,1} throws DomainError unless limit_at_endpoints is set, in
// which case the limit values R(0+)=0 and R(1-)=pi^2/6 are returned.
cplx rogers(cplx xi, bool limit_at_endpoints = false);

}  // namespace volconj

#endif  // VOLCONJ_SPECIAL_FN_HPP
