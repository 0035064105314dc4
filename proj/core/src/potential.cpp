#include "volconj/potential.hpp"

#include <cmath>

#include "volconj/cusp_geometry.hpp"
#include "volconj/errors.hpp"
#include "volconj/special_fn.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

constexpr const char* kPrincipalNote = "principal logs; log(-xi)+pi*i convention";
constexpr const char* kRogersNote = "principal logs; Rogers normalization 1/(2 pi)";

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() > 1.0; }

cplx h_two_value(cplx xi, cplx eta) {
  if (!(std::isfinite(xi.real()) && std::isfinite(xi.imag()) &&
        std::isfinite(eta.real()) && std::isfinite(eta.imag())))
    raise(errc::invalid_input, "h_two: non-finite argument");
  if (xi == cplx(0.0) || eta == cplx(0.0))
    raise(errc::domain_error, "h_two: xi and eta must be nonzero");
  const cplx a1 = 1.0 / (xi * eta);
  const cplx a2 = xi / eta;
  if (on_cut(a1) || on_cut(a2))
    raise(errc::domain_error, "h_two: dilogarithm argument on the cut (1, inf)");
  return li2(a1) - li2(a2) + (std::log(-xi) + PI * I) * std::log(eta);
}

cplx f_value(const HolonomyState& st) {
  return h_two_value(st.y, st.m * st.m) - PI * I * st.u - st.u * st.v / 4.0 -
         I * vol_complement();
}

}  // namespace

PotentialValue h_two(cplx xi, cplx eta) { return {h_two_value(xi, eta), kPrincipalNote}; }

PotentialValue h_of_u(cplx u) {
  const HolonomyState st = holonomy_state(u);
  return {h_two_value(st.y, st.m * st.m), kPrincipalNote};
}

double vol_complement() {
  static const double vol = 6.0 * lobachevsky(PI / 3.0);
  return vol;
}

PotentialValue f_of_u(cplx u) {
  return {f_value(holonomy_state(u)), kPrincipalNote};
}

PotentialValue f_rogers(cplx u) {
  const HolonomyState st = holonomy_state(u);
  const cplx sum = rogers(st.z) + rogers(st.w) - cplx(PI * PI / 6.0);
  return {sum / (2.0 * PI) - I * vol_complement() / (2.0 * PI), kRogersNote};
}

PotentialValue phi_of_u(cplx u) {
  const HolonomyState st = holonomy_state(u);
  return {4.0 * f_value(st) + st.u * st.v, kPrincipalNote};
}

cplx d2h_dz2_at_saddle(double r) {
  if (!std::isfinite(r)) raise(errc::invalid_input, "d2h_dz2_at_saddle: non-finite r");
  if (!(r > 5.0 / 6.0 && r < 7.0 / 6.0))
    raise(errc::domain_error, "d2h_dz2_at_saddle: r outside (5/6, 7/6)");
  const cplx u = 2.0 * PI * I * (r - 1.0);
  const cplx y = holonomy_state(u).y;
  return r * r * std::exp((-2.0 / r) * std::log(y)) * (1.0 / y - y);
}

}  // namespace volconj
