#ifndef VOLCONJ_CUSP_GEOMETRY_HPP
#define VOLCONJ_CUSP_GEOMETRY_HPP

#include <complex>

namespace volconj {

using cplx = std::complex<double>;

// Radius of the deformation disk on which the tracked branch is trusted.  The
// nearest singularities of the geometric branch (discriminant zeros) sit at
// u ~ +-0.9624 on the real axis and at |u| = 2pi/3 ~ 2.094 on the imaginary
// axis; 1.5 keeps every Dehn-filling solution for |p| >= 5 inside while paths
// toward the real-axis zeros still fail loudly via BranchAmbiguity.
inline constexpr double u_max = 1.5;

// Deformation data of the figure-eight complement at meridian log-holonomy u:
//   m = -exp(u/2), the tetrahedral shapes z, w, the saddle parameter y and the
//   longitude log-holonomy v = 2 log(z(1-z)), all on the branch continuous in
//   u with z = w = e^{i pi/3}, y = e^{-i pi/3}, v = 0 at u = 0.
struct HolonomyState {
  cplx u;
  cplx m;
  cplx z;
  cplx w;
  cplx y;
  cplx v;
};

// Path-tracks the branch from u = 0 along the straight segment (step <= 0.02,
// nearest-root selection for the discriminant square root, incremental
// principal logs for v).  |u| > u_max -> OutsideValidityDisk; a root collision
// along the path -> BranchAmbiguity.
HolonomyState holonomy_state(cplx u);

// Central finite difference of v(u); step h = 1e-6 by default.
cplx dv_du(cplx u, double h = 1e-6);

// Cusp-shape derivative tau0 = dv/du at u = 0 (cached after first call).
cplx tau0();

}  // namespace volconj

#endif  // VOLCONJ_CUSP_GEOMETRY_HPP
