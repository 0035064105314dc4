#include "volconj/optimistic.hpp"

#include <cmath>

#include "volconj/errors.hpp"
#include "volconj/potential.hpp"
#include "volconj/surgery.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

constexpr int kMaxIterations = 100;
constexpr double kGradTarget = 1e-11;

// Closed-form gradient of V_p (single-log forms).
cplx dv_dxi(cplx xi, cplx eta) {
  return std::log(eta + 1.0 / eta - xi - 1.0 / xi) / xi;
}

cplx dv_deta(cplx xi, cplx eta, int p) {
  return (std::log((1.0 - xi * eta) / (eta - xi)) + PI * I) / eta +
         double(p) * std::log(eta) / (2.0 * eta) - 2.0 * PI * I / eta;
}

double grad_norm_at(cplx xi, cplx eta, int p) {
  return std::sqrt(std::norm(dv_dxi(xi, eta)) + std::norm(dv_deta(xi, eta, p)));
}

}  // namespace

cplx v_p(cplx xi, cplx eta, int p) {
  return h_two(xi, eta).value + (double(p) / 4.0) * std::log(eta) * std::log(eta) -
         2.0 * PI * I * std::log(eta);
}

CriticalPoint critical_point(int p) {
  if (std::abs(p) <= 4)
    raise(errc::exceptional_slope,
          "critical_point: |p| <= 4 are the non-hyperbolic exceptional slopes");

  cplx xi = std::exp(-I * (PI / 3.0));
  cplx eta = 1.0;
  cplx g1 = dv_dxi(xi, eta);
  cplx g2 = dv_deta(xi, eta, p);
  double gn = std::sqrt(std::norm(g1) + std::norm(g2));

  const double h = 1e-7;
  int it = 0;
  for (; it < kMaxIterations && gn > kGradTarget; ++it) {
    // Finite-difference Jacobian of the closed-form gradient.
    const cplx j11 = (dv_dxi(xi + h, eta) - dv_dxi(xi - h, eta)) / (2.0 * h);
    const cplx j12 = (dv_dxi(xi, eta + h) - dv_dxi(xi, eta - h)) / (2.0 * h);
    const cplx j21 = (dv_deta(xi + h, eta, p) - dv_deta(xi - h, eta, p)) / (2.0 * h);
    const cplx j22 = (dv_deta(xi, eta + h, p) - dv_deta(xi, eta - h, p)) / (2.0 * h);
    const cplx det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14)
      raise(errc::critical_point_not_found, "critical_point: singular Jacobian");
    const cplx dxi = -(j22 * g1 - j12 * g2) / det;
    const cplx deta = -(-j21 * g1 + j11 * g2) / det;

    bool accepted = false;
    double lambda = 1.0;
    for (int k = 0; k < 30; ++k, lambda *= 0.5) {
      const cplx xi_try = xi + lambda * dxi;
      const cplx eta_try = eta + lambda * deta;
      double gn_try;
      try {
        gn_try = grad_norm_at(xi_try, eta_try, p);
      } catch (const error&) {
        continue;
      }
      if (std::isfinite(gn_try) && gn_try < gn) {
        xi = xi_try;
        eta = eta_try;
        gn = gn_try;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      raise(errc::critical_point_not_found, "critical_point: damped Newton stalled");
    g1 = dv_dxi(xi, eta);
    g2 = dv_deta(xi, eta, p);
  }
  if (gn > 1e-10)
    raise(errc::critical_point_not_found,
          "critical_point: gradient did not reach 1e-10 within 100 iterations");

  CriticalPoint cp;
  cp.p = p;
  cp.xi0 = xi;
  cp.eta0 = eta;
  cp.grad_norm = gn;
  cp.value = v_p(xi, eta, p);
  cp.iterations = it;
  return cp;
}

ObservationResult observation_check(int p) {
  const CriticalPoint cp = critical_point(p);
  const SurgeryResult sr = vol_cs_p1(p);
  const cplx lhs = cp.value;
  const cplx rhs(-sr.cs, sr.vol);

  // Real parts agree only mod pi^2; compare the canonical representative of
  // the difference.
  const double pisq = PI * PI;
  double dre = lhs.real() - rhs.real();
  dre -= pisq * std::floor(dre / pisq + 0.5);
  const double dim = lhs.imag() - rhs.imag();
  const double mismatch = std::max(std::abs(dre), std::abs(dim));

  ObservationResult res;
  res.p = p;
  res.lhs = lhs;
  res.rhs = rhs;
  res.agree_digits = (mismatch > 0.0)
                         ? int(std::floor(-std::log10(mismatch)))
                         : 16;
  if (res.agree_digits > 16) res.agree_digits = 16;
  return res;
}

}  // namespace volconj
