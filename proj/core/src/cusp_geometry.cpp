#include "volconj/cusp_geometry.hpp"

#include <cmath>

#include "volconj/errors.hpp"

namespace volconj {
namespace {

constexpr double kTrackStep = 0.02;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Discriminant of the shape equation as a polynomial in m:
// (m^2+m+1)(m^2+m-1)(m^2-m+1)(m^2-m-1); equals -3 at the complete structure.
cplx discriminant(cplx m) {
  const cplx m2 = m * m;
  return (m2 + m + 1.0) * (m2 + m - 1.0) * (m2 - m + 1.0) * (m2 - m - 1.0);
}

}  // namespace

HolonomyState holonomy_state(cplx u) {
  if (!finite(u)) raise(errc::invalid_input, "holonomy_state: non-finite u");
  if (std::abs(u) > u_max)
    raise(errc::outside_validity_disk, "holonomy_state: |u| > u_max");

  const cplx I(0.0, 1.0);
  const cplx z0(0.5, std::sqrt(3.0) / 2.0);  // e^{i pi/3}
  if (u == cplx(0.0)) {
    // Exact base values; sqrt(-3) = +i sqrt(3) on the chosen branch.
    return {u, cplx(-1.0, 0.0), z0, z0, std::conj(z0), cplx(0.0)};
  }

  const int steps = std::max(1, int(std::ceil(std::abs(u) / kTrackStep)));
  cplx s_prev = I * std::sqrt(3.0);
  cplx g_prev = z0 * (1.0 - z0);  // z(1-z) = 1 at u = 0
  cplx v = 0.0;
  cplx m, z, w, y;
  for (int j = 1; j <= steps; ++j) {
    const cplx uj = u * (double(j) / steps);
    m = -std::exp(0.5 * uj);
    const cplx m2 = m * m;
    const cplx m4 = m2 * m2;
    cplx s = std::sqrt(discriminant(m));
    if (std::abs(s - s_prev) > std::abs(-s - s_prev)) s = -s;
    // If the chosen root is not clearly nearer than its negative, the two
    // roots have (nearly) collided and continuation is meaningless.
    if (std::abs(s - s_prev) > 0.5 * std::abs(s + s_prev))
      raise(errc::branch_ambiguity,
            "holonomy_state: square-root branches collide along the path");
    z = (-m4 + m2 + 1.0 + s) / (2.0 * m2);
    w = (m4 + m2 - 1.0 + s) / (2.0 * m2);
    y = (m4 - m2 + 1.0 - s) / (2.0 * m2);
    // v = 2 log(z(1-z)) continued from v(0) = 0: accumulate principal logs of
    // stepwise ratios, which stay near 1 for step <= 0.02.
    const cplx g = z * (1.0 - z);
    v += 2.0 * std::log(g / g_prev);
    g_prev = g;
    s_prev = s;
  }
  return {u, m, z, w, y, v};
}

cplx dv_du(cplx u, double h) {
  if (!(h > 0.0)) raise(errc::invalid_input, "dv_du: step must be positive");
  const cplx vp = holonomy_state(u + h).v;
  const cplx vm = holonomy_state(u - h).v;
  return (vp - vm) / (2.0 * h);
}

cplx tau0() {
  static const cplx value = dv_du(cplx(0.0));
  return value;
}

}  // namespace volconj
