#include "volconj/surgery.hpp"

#include <cmath>
#include <numeric>

#include "volconj/cusp_geometry.hpp"
#include "volconj/errors.hpp"
#include "volconj/potential.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

constexpr int kMaxIterations = 50;
constexpr double kResidualTarget = 1e-13;

bool is_integral(double x) { return std::isfinite(x) && x == std::rint(x); }

cplx v_at(cplx u) { return holonomy_state(u).v; }

}  // namespace

FillingResult solve_filling(FillingSlope slope) {
  const double p = slope.p;
  const double q = slope.q;
  if (!std::isfinite(p) || !std::isfinite(q))
    raise(errc::invalid_input, "solve_filling: non-finite slope");
  if (p == 0.0 && q == 0.0)
    raise(errc::invalid_input, "solve_filling: slope (0,0) is not a filling");
  if (is_integral(p) && is_integral(q)) {
    const long long g = std::gcd(std::llabs((long long)p), std::llabs((long long)q));
    if (g != 1)
      raise(errc::invalid_input, "solve_filling: integer slope must be coprime");
  }

  cplx u = 2.0 * PI * I / (p + q * tau0());
  if (std::abs(u) > u_max)
    raise(errc::non_hyperbolic_or_out_of_range,
          "solve_filling: initial guess outside the validity disk");

  const auto g_of = [&](cplx uu) { return p * uu + q * v_at(uu) - 2.0 * PI * I; };

  cplx g;
  try {
    g = g_of(u);
  } catch (const error&) {
    raise(errc::non_hyperbolic_or_out_of_range, "solve_filling: start not evaluable");
  }
  int it = 0;
  for (; it < kMaxIterations && std::abs(g) > kResidualTarget; ++it) {
    cplx step;
    try {
      step = -g / (p + q * dv_du(u));
    } catch (const error&) {
      raise(errc::non_hyperbolic_or_out_of_range, "solve_filling: derivative failed");
    }
    // Damped update: halve until the residual decreases.
    bool accepted = false;
    double lambda = 1.0;
    for (int h = 0; h < 30; ++h, lambda *= 0.5) {
      const cplx u_try = u + lambda * step;
      if (std::abs(u_try) > u_max) continue;  // leaving the disk counts as a failed try
      cplx g_try;
      try {
        g_try = g_of(u_try);
      } catch (const error&) {
        continue;
      }
      if (std::abs(g_try) < std::abs(g)) {
        u = u_try;
        g = g_try;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      raise(errc::non_hyperbolic_or_out_of_range,
            "solve_filling: damped Newton stalled (likely non-hyperbolic slope)");
  }
  if (std::abs(g) > 1e-12)
    raise(errc::non_hyperbolic_or_out_of_range,
          "solve_filling: no convergence within 50 iterations");

  FillingResult res;
  res.slope = slope;
  res.u = u;
  res.v = v_at(u);
  res.residual = std::abs(g);
  res.iterations = it;
  return res;
}

VolCS vol_cs(cplx u, cplx lambda) {
  if (!(std::isfinite(lambda.real()) && std::isfinite(lambda.imag())))
    raise(errc::invalid_input, "vol_cs: non-finite lambda");
  const HolonomyState st = holonomy_state(u);
  const cplx H = h_two(st.y, st.m * st.m).value;
  const cplx X = H / I - PI * u - u * st.v / (4.0 * I) - (PI / 2.0) * lambda;
  const double pisq = PI * PI;
  double cs = X.imag() - pisq * std::floor(X.imag() / pisq + 0.5);
  return {X.real(), cs};
}

SurgeryResult vol_cs_p1(int p) {
  if (std::abs(p) <= 4)
    raise(errc::exceptional_slope,
          "vol_cs_p1: |p| <= 4 are the non-hyperbolic exceptional slopes");
  const FillingResult fill = solve_filling({double(p), 1.0});
  const VolCS vc = vol_cs(fill.u, fill.u);  // lambda = (2 pi i - v)/p = u for q = 1
  SurgeryResult res;
  res.p = p;
  res.u = fill.u;
  res.v = fill.v;
  res.lambda = fill.u;
  res.vol = vc.vol;
  res.cs = vc.cs;
  res.residual = fill.residual;
  return res;
}

}  // namespace volconj
