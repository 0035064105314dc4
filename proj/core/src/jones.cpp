#include "volconj/jones.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "volconj/cusp_geometry.hpp"
#include "volconj/errors.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

// Rebase threshold of the sum accumulator: once a term's log-magnitude
// exceeds the current frame by this much, the frame moves to the term.
constexpr double kFrameGap = 20.0;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void validate_point(const JonesPoint& pt) {
  if (pt.N < 1) raise(errc::invalid_input, "jones: N must be >= 1");
  if (!finite(pt.u)) raise(errc::invalid_input, "jones: non-finite u");
  if (std::abs(pt.u) > u_max)
    raise(errc::outside_validity_disk, "jones: |u| > u_max");
}

// Accumulates sum_n exp(lm_n + i ph_n) with (lm, ph) the continuous running
// log/argument of the factor products.  Terms are added as complex numbers
// relative to a frame (shift, frame_phase); the frame only moves when a term
// dominates it by kFrameGap, and the move rescales the partial sum exactly
// (no intermediate principal-value reduction, so the frame phase keeps the
// continuous winding of the factor arguments).
struct FrameAccumulator {
  double shift = 0.0;
  double frame = 0.0;
  cplx acc = 1.0;  // n = 0 term: the empty product

  void add(double lm, double ph) {
    if (lm > shift + kFrameGap) {
      acc *= std::exp(cplx(shift - lm, frame - ph));
      shift = lm;
      frame = ph;
    }
    acc += std::exp(cplx(lm - shift, ph - frame));
  }

  LogComplex result() const {
    const double a = std::abs(acc);
    if (a == 0.0) return LogComplex::zero();
    return {shift + std::log(a), frame + std::arg(acc), false};
  }
};

// ---- Riemann-discrepancy quadrature -----------------------------------

cplx zeta_of_s(cplx r, double s, int sigma) {
  return std::exp(I * r * (sigma > 0 ? s : -s) - 2.0 * PI * I * r);
}

cplx log_one_minus_exp(cplx r, double s, int sigma) {
  return std::log(1.0 - zeta_of_s(r, s, sigma));
}

// Adaptive Simpson on a piece where the integrand is smooth.
cplx adaptive_simpson(cplx r, int sigma, double a, double b, cplx fa, cplx fm, cplx fb,
                      cplx whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const cplx flm = log_one_minus_exp(r, lm, sigma);
  const cplx frm = log_one_minus_exp(r, rm, sigma);
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cplx delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(r, sigma, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(r, sigma, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

cplx integrate_piece(cplx r, int sigma, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const cplx fa = log_one_minus_exp(r, a, sigma);
  const cplx fb = log_one_minus_exp(r, b, sigma);
  const double m = 0.5 * (a + b);
  const cplx fm = log_one_minus_exp(r, m, sigma);
  const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(r, sigma, a, b, fa, fm, fb, whole, tol, 40);
}

// The imaginary part of log(1 - zeta(s)) jumps by 2 pi where zeta crosses the
// real axis beyond 1, i.e. where arg zeta = 0 mod 2 pi and |zeta| > 1.  With
// r = a + b i the crossings are at s = 2 pi (1 + j/a) (plus case) resp.
// s = -2 pi (1 + j/a) (minus case), j integer, and |zeta| > 1 requires b > 0.
std::vector<double> wrap_points(cplx r, int sigma, double upper) {
  std::vector<double> pts;
  const double a = r.real();
  const double b = r.imag();
  if (b <= 0.0 || a == 0.0) return pts;
  for (int j = -4 * int(std::ceil(std::abs(a))) - 4; j <= 4 * int(std::ceil(std::abs(a))) + 4; ++j) {
    const double s = (sigma > 0) ? 2.0 * PI * (1.0 + double(j) / a)
                                 : -2.0 * PI * (1.0 + double(j) / a);
    if (s >= 0.0 && s <= upper) pts.push_back(s);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

cplx JonesPoint::r() const { return 1.0 + u / (2.0 * PI * I); }

LogComplex jones_eval(const JonesPoint& pt) {
  validate_point(pt);
  const double n = double(pt.N);
  // t^N = e^{u + 2 pi i} = e^u exactly; per-factor powers from exp(k c) with
  // c = (u + 2 pi i)/N keep the argument sums coherent.
  const cplx c = (pt.u + 2.0 * PI * I) / n;
  const cplx tN = std::exp(pt.u);

  FrameAccumulator sum;
  double lm = 0.0;
  double ph = 0.0;
  for (long long k = 1; k < pt.N; ++k) {
    const cplx tk = std::exp(double(k) * c);
    const cplx fk = tN * (1.0 - 1.0 / (tN * tk)) * (1.0 - tk / tN);
    const double afk = std::abs(fk);
    if (afk == 0.0) break;  // all later terms vanish with this factor
    lm += std::log(afk);
    ph += std::arg(fk);
    sum.add(lm, ph);
  }
  return sum.result();
}

double RealJonesResult::value() const {
  return double(sign) * std::exp(log_abs);
}

RealJonesResult jones_eval_real_r(long long N, double r) {
  if (N < 1) raise(errc::invalid_input, "jones_eval_real_r: N must be >= 1");
  if (!std::isfinite(r)) raise(errc::invalid_input, "jones_eval_real_r: non-finite r");
  const bool warn = !(r > 5.0 / 6.0 && r < 7.0 / 6.0);

  // Factor k of term n is 2cos(2 pi r) - 2cos(2 pi r k/N), exactly real.
  const double c = 2.0 * std::cos(2.0 * PI * r);
  std::vector<double> term_lm(N);
  std::vector<int> term_sign(N);
  term_lm[0] = 0.0;
  term_sign[0] = 1;
  long long terms = N;
  long long neg_prefix = 0;
  std::vector<long long> neg_count(N);
  neg_count[0] = 0;
  double lm = 0.0;
  int sg = 1;
  for (long long k = 1; k < N; ++k) {
    const double fk = c - 2.0 * std::cos(2.0 * PI * r * double(k) / double(N));
    if (fk == 0.0) {  // exact root-of-unity zero: terms k..N-1 all vanish
      terms = k;
      break;
    }
    lm += std::log(std::abs(fk));
    if (fk < 0.0) {
      sg = -sg;
      ++neg_prefix;
    }
    term_lm[k] = lm;
    term_sign[k] = sg;
    neg_count[k] = neg_prefix;
  }

  long long peak = 0;
  for (long long i = 1; i < terms; ++i)
    if (term_lm[i] > term_lm[peak]) peak = i;

  double tot = 0.0;
  for (long long i = 0; i < terms; ++i)
    tot += double(term_sign[i]) * std::exp(term_lm[i] - term_lm[peak]);

  RealJonesResult res;
  res.N = N;
  res.r = r;
  if (tot == 0.0) {
    res.log_abs = 0.0;
    res.sign = 0;
  } else {
    res.log_abs = term_lm[peak] + std::log(std::abs(tot));
    res.sign = (tot > 0.0) ? 1 : -1;
  }
  res.flips_at_peak = neg_count[peak];
  res.validity_warning = warn;
  return res;
}

double log_one_minus_exp_abs(cplx r, double s, int sigma) {
  if (sigma != 1 && sigma != -1)
    raise(errc::invalid_input, "log_one_minus_exp_abs: sigma must be +-1");
  return std::log(std::abs(1.0 - zeta_of_s(r, s, sigma)));
}

cplx riemann_discrepancy(long long N, long long n, cplx r, int sigma, double tol) {
  if (N < 2) raise(errc::invalid_input, "riemann_discrepancy: N must be >= 2");
  if (n < 0 || n >= N)
    raise(errc::invalid_input, "riemann_discrepancy: need 0 <= n <= N-1");
  if (sigma != 1 && sigma != -1)
    raise(errc::invalid_input, "riemann_discrepancy: sigma must be +-1");
  if (!finite(r)) raise(errc::invalid_input, "riemann_discrepancy: non-finite r");
  if (r.imag() == 0.0)
    raise(errc::domain_error, "riemann_discrepancy: Im r must be nonzero");
  if (!(tol > 0.0 && tol <= 1e-2))
    raise(errc::invalid_input, "riemann_discrepancy: tol outside (0, 1e-2]");
  if (n == 0) return 0.0;

  cplx sum = 0.0;
  for (long long k = 1; k <= n; ++k)
    sum += log_one_minus_exp(r, 2.0 * PI * double(k) / double(N), sigma);
  sum *= 2.0 * PI / double(N);

  const double upper = 2.0 * PI * double(n) / double(N);
  // Split at the Im-log wraps; nudge piece ends off the discontinuities so no
  // Simpson node lands on the wrong side of a cut (the dropped slivers are
  // O(1e-13) wide on a bounded integrand).
  const std::vector<double> wraps = wrap_points(r, sigma, upper);
  const double nudge = 1e-13 * std::max(1.0, upper);
  std::vector<double> edges;
  edges.push_back(0.0);
  for (double sX : wraps) {
    edges.push_back(std::max(0.0, sX - nudge));
    edges.push_back(std::min(upper, sX + nudge));
  }
  edges.push_back(upper);
  std::sort(edges.begin(), edges.end());

  cplx integral = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); i += 2)
    integral += integrate_piece(r, sigma, edges[i], edges[i + 1], tol);

  return sum - integral;
}

MaxMinBounds max_min_bounds(cplx r, long long N) {
  if (N < 2) raise(errc::invalid_input, "max_min_bounds: N must be >= 2");
  const double b = r.imag();
  if (b == 0.0) raise(errc::domain_error, "max_min_bounds: Im r must be nonzero");
  MaxMinBounds out;
  out.lower_plus = std::log(std::abs(1.0 - std::exp(2.0 * PI * b / double(N))));
  out.upper_plus = std::log(1.0 + std::exp(2.0 * PI * b));
  out.lower_minus = std::log(std::abs(1.0 - std::exp(2.0 * PI * b)));
  out.upper_minus = std::log(1.0 + std::exp(4.0 * PI * std::abs(b)));
  return out;
}

}  // namespace volconj
