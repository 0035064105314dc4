#include "volconj/special_fn.hpp"

#include <cmath>

#include "volconj/errors.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double PI2_6 = PI * PI / 6.0;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Maclaurin series sum z^n / n^2; used for |z| <= 0.5 where 64 terms reach
// below 1e-19 relative.
cplx li2_series(cplx z) {
  cplx zp = z;
  cplx sum = z;
  for (int n = 2; n <= 64; ++n) {
    zp *= z;
    const cplx term = zp / double(n * n);
    sum += term;
    if (std::norm(term) < 1e-36 * std::norm(sum)) break;
  }
  return sum;
}

// Coefficients B_n / (n! (n+1)) of the expansion
//   Li2(z) = sum_{n>=0} c_n w^{n+1},  w = -log(1-z),
// obtained from dLi2/dw = w/(e^w - 1); converges for |w| < 2 pi.  This covers
// the annular "lens" 0.5 < |z| < 2, |1-z| > 0.5 that the Maclaurin disk and
// the inversion/reflection maps cannot reach (in particular the whole unit
// circle, where every potential in this library is evaluated).
constexpr double kLensCoeff[64] = {
    1.0, -0.25, 0.0277777777777777778, 0.0,
    -0.000277777777777777778, 0.0, 4.72411186696900983e-6, 0.0,
    -9.18577307466196355e-8, 0.0, 1.89788699889709991e-9, 0.0,
    -4.06476164514422553e-11, 0.0, 8.92169102045645256e-13, 0.0,
    -1.99392958607210757e-14, 0.0, 4.51898002961991819e-16, 0.0,
    -1.0356517612181247e-17, 0.0, 2.39521862102618675e-19, 0.0,
    -5.58178587432500934e-21, 0.0, 1.30915075541832129e-22, 0.0,
    -3.08741980242674029e-24, 0.0, 7.31597565270220342e-26, 0.0,
    -1.74084565723400074e-27, 0.0, 4.15763564461389972e-29, 0.0,
    -9.9621484882846221e-31, 0.0, 2.3940344248961653e-32, 0.0,
    -5.76834735536739008e-34, 0.0, 1.39317947964700798e-35, 0.0,
    -3.37212196548508947e-37, 0.0, 8.17820877756210262e-39, 0.0,
    -1.98701083115238593e-40, 0.0, 4.8357785180405509e-42, 0.0,
    -1.17869372487183843e-43, 0.0, 2.87709640811725715e-45, 0.0,
    -7.03205909815602801e-47, 0.0, 1.72086031450331463e-48, 0.0,
    -4.21607239056044549e-50, 0.0, 1.03404064051330396e-51, 0.0,
};

cplx li2_lens(cplx z) {
  const cplx w = -std::log(1.0 - z);
  cplx wp = w;
  cplx sum = 0.0;
  for (int n = 0; n < 64; ++n) {
    if (kLensCoeff[n] != 0.0) sum += kLensCoeff[n] * wp;
    wp *= w;
  }
  return sum;
}

}  // namespace

cplx li2(cplx z) {
  if (!finite(z)) raise(errc::invalid_input, "li2: non-finite argument");
  if (z == cplx(0.0)) return 0.0;
  if (z == cplx(1.0)) return PI2_6;

  // On the cut (1, +inf): the limit from below, made explicit so that signed
  // zeros in the imaginary part cannot flip the side.
  if (z.imag() == 0.0 && z.real() > 1.0) {
    const double x = z.real();
    const double lx = std::log(x);
    const cplx inner = li2(cplx(1.0 / x, 0.0));
    return cplx(PI * PI / 3.0 - 0.5 * lx * lx, -PI * lx) - inner;
  }

  const double az = std::abs(z);
  if (az <= 0.5) return li2_series(z);
  if (az >= 2.0) {
    // Inversion: Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z).
    const cplx lz = std::log(-z);
    return -PI2_6 - 0.5 * lz * lz - li2(1.0 / z);
  }
  if (std::abs(1.0 - z) <= 0.5) {
    // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
    return PI2_6 - std::log(z) * std::log(1.0 - z) - li2(1.0 - z);
  }
  return li2_lens(z);
}

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) raise(errc::invalid_input, "lobachevsky: non-finite argument");
  // Reduce modulo pi into [-pi/2, pi/2]; L is odd and pi-periodic.
  const double t = std::remainder(theta, PI);
  if (t == 0.0) return 0.0;
  const cplx z(std::cos(2.0 * t), std::sin(2.0 * t));
  return 0.5 * li2(z).imag();
}

cplx rogers(cplx xi, bool limit_at_endpoints) {
  if (!finite(xi)) raise(errc::invalid_input, "rogers: non-finite argument");
  if (xi == cplx(0.0)) {
    if (limit_at_endpoints) return 0.0;
    raise(errc::domain_error, "rogers: xi = 0 (limit value 0 available via flag)");
  }
  if (xi == cplx(1.0)) {
    if (limit_at_endpoints) return PI2_6;
    raise(errc::domain_error, "rogers: xi = 1 (limit value pi^2/6 available via flag)");
  }
  return 0.5 * std::log(xi) * std::log(1.0 - xi) + li2(xi);
}

}  // namespace volconj
