// Acceptance gate: ten end-to-end criteria, one [PASS]/[FAIL] line each with
// the measured values, exit code = number of failed criteria.
//
// Criteria 6 and 10 are expected to fail: the floor-exponent sign rule is
// wrong for r > 1 (the correct exponent uses |1-r|), and the plus-case upper
// bound of the pointwise lemma fails for Im r < 0.  Both are checked here
// exactly as stated and reported honestly; the corrected forms are asserted
// in the unit suite and the selftest.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "volconj/volconj.hpp"

using namespace volconj;

namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

cplx random_in_disk(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    const cplx z(unit(rng), unit(rng));
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

std::complex<long double> naive_sum(long long N, cplx u) {
  using cld = std::complex<long double>;
  const cld c = (cld(u.real(), u.imag()) + cld(0.0L, 2.0L * PI)) / (long double)N;
  const cld tN = std::exp(cld(u.real(), u.imag()));
  cld sum = 0.0L;
  for (long long n = 0; n < N; ++n) {
    cld prod = 1.0L;
    for (long long k = 1; k <= n; ++k) {
      const cld tk = std::exp((long double)k * c);
      prod *= tN * (1.0L - 1.0L / (tN * tk)) * (1.0L - tk / tN);
    }
    sum += prod;
  }
  return sum;
}

// --- criterion 1 -----------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> Ns;
  for (long long n = 100; n <= 6400; n *= 2) Ns.push_back(n);
  const auto rows = limit_sweep(cplx(0.0), Ns, 1);
  // At u = 0 the sum is a positive real, so the limit is read off the real
  // sequence 2 pi log J_N / N.
  std::vector<cplx> vals;
  for (const auto& row : rows)
    vals.emplace_back(2.0 * PI * row.logJ.log_mag / double(row.N), 0.0);
  const FitResult fit = fit_series(Ns, vals);
  const double oracle = 6.0 * lobachevsky(PI / 3.0);
  const double err = std::abs(fit.limit.real() - 2.0298832128);
  const double elapsed = seconds_since(t0);
  report(1, "Kashaev-limit volume", err <= 1e-4 && elapsed <= 30.0,
         fmt("extrapolated %.10f, target 2.0298832128 (err %.2e <= 1e-4), "
             "internal oracle 6L(pi/3) = %.10f, %.1f s (limit 30)",
             fit.limit.real(), err, oracle, elapsed));
}

// --- criterion 2 -----------------------------------------------------------

void criterion_2() {
  const double e1 = std::abs(h_of_u(cplx(0.0)).value -
                             cplx(0.0, 4.0 * lobachevsky(PI / 6.0)));
  const double e2 = std::abs(4.0 * lobachevsky(PI / 6.0) - 6.0 * lobachevsky(PI / 3.0));
  report(2, "complete-structure volume identities", e1 <= 1e-12 && e2 <= 1e-13,
         fmt("|H(0) - 4i L(pi/6)| = %.2e <= 1e-12, |4L(pi/6) - 6L(pi/3)| = %.2e <= 1e-13",
             e1, e2));
}

// --- criterion 3 -----------------------------------------------------------

void criterion_3() {
  double d_circle = 0.0;
  for (int i = 1; i <= 999; ++i) {
    const double beta = 2.0 * PI * double(i) / 1000.0;
    const cplx lhs = li2(std::exp(I * beta));
    const cplx rhs = cplx(PI * PI / 6.0 - (beta / 2.0) * (PI - beta / 2.0), 0.0) +
                     2.0 * I * lobachevsky(beta / 2.0);
    d_circle = std::max(d_circle, std::abs(lhs - rhs));
  }
  double d_dup = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double th = -2.0 * PI + 4.0 * PI * i / 400.0;
    d_dup = std::max(d_dup, std::abs(lobachevsky(2.0 * th) - 2.0 * lobachevsky(th) +
                                     2.0 * lobachevsky(PI / 2.0 - th)));
  }
  double d_h = 0.0;
  for (int i = 1; i < 48; ++i) {
    const double th = -PI + 2.0 * PI * i / 48.0;
    if (std::abs(th) < 1e-9) continue;
    d_h = std::max(d_h, std::abs(h_two(std::exp(I * th), cplx(1.0)).value -
                                 cplx(0.0, -4.0 * lobachevsky(th / 2.0))));
  }
  std::mt19937 rng(33);
  double d_glue = 0.0, d_y = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx u = random_in_disk(rng, 1.0);
    const HolonomyState st = holonomy_state(u);
    d_glue = std::max(d_glue, std::abs(std::log(st.w) + std::log(1.0 - st.z) - u));
    d_glue = std::max(d_glue, std::abs(std::log(st.z) + std::log(1.0 - st.z) +
                                       std::log(st.w) + std::log(1.0 - st.w)));
    const cplx m2 = st.m * st.m;
    d_y = std::max(d_y, std::abs(st.y + 1.0 / st.y - (m2 - 1.0 + 1.0 / m2)));
  }
  const bool pass = d_circle <= 1e-12 && d_dup <= 1e-12 && d_h <= 1e-12 &&
                    d_glue <= 1e-12 && d_y <= 1e-13;
  report(3, "identity suite", pass,
         fmt("circle-dilog %.2e, duplication %.2e, H-on-circle %.2e, gluing %.2e "
             "(<= 1e-12 each), shape-parameter %.2e (<= 1e-13)",
             d_circle, d_dup, d_h, d_glue, d_y));
}

// --- criterion 4 -----------------------------------------------------------

void criterion_4() {
  std::mt19937 rng(44);
  const double h = 1e-5;
  double d_h = 0.0, d_phi = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx u = random_in_disk(rng, 0.3);
    const cplx v = holonomy_state(u).v;
    const cplx dH = (h_of_u(u + h).value - h_of_u(u - h).value) / (2.0 * h);
    const cplx dPhi = (phi_of_u(u + h).value - phi_of_u(u - h).value) / (2.0 * h);
    d_h = std::max(d_h, std::abs(dH - (v / 2.0 + PI * I)) / std::abs(v / 2.0 + PI * I));
    d_phi = std::max(d_phi, std::abs(dPhi - 2.0 * v) / std::abs(2.0 * v));
  }
  const double z_phi = std::abs(phi_of_u(cplx(0.0)).value);
  const double z_f = std::abs(f_of_u(cplx(0.0)).value);
  const bool pass = d_h <= 1e-7 && d_phi <= 1e-7 && z_phi <= 1e-13 && z_f <= 1e-13;
  report(4, "differential identities (h = 1e-5, 20 samples)", pass,
         fmt("dH/du rel %.2e, dPhi/du rel %.2e (<= 1e-7), |Phi(0)| = %.2e, "
             "|f(0)| = %.2e (<= 1e-13)",
             d_h, d_phi, z_phi, z_f));
}

// --- criterion 5 -----------------------------------------------------------

void criterion_5() {
  const cplx closed = d2h_dz2_at_saddle(1.0);
  const double e_closed =
      std::abs(closed - cplx(-1.5, -std::sqrt(3.0) / 2.0));
  const cplx y = holonomy_state(cplx(0.0)).y;
  const double h = 1e-4;
  const cplx fd = (h_two(y + h, cplx(1.0)).value - 2.0 * h_two(y, cplx(1.0)).value +
                   h_two(y - h, cplx(1.0)).value) /
                  (h * h);
  const double e_fd = std::abs(fd - closed);
  const double re_exp = (h_of_u(cplx(0.0)).value / (2.0 * PI * I)).real();
  const double e_re = std::abs(re_exp - 2.0 * lobachevsky(PI / 6.0) / PI);
  const bool pass = e_closed <= 1e-12 && e_fd <= 1e-6 && e_re <= 1e-12;
  report(5, "saddle data at r = 1", pass,
         fmt("closed form vs (-3-sqrt(3)i)/2: %.2e <= 1e-12, FD check %.2e <= 1e-6, "
             "Re exponent vs 2L(pi/6)/pi: %.2e <= 1e-12",
             e_closed, e_fd, e_re));
}

// --- criterion 6 -----------------------------------------------------------

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  for (double r : {0.93, 1.05}) {
    // Sign rule exactly as stated: (-1)^floor(N(1-r)/r) for every N in
    // [50, 500].  (For r > 1 the mathematically correct exponent is
    // floor(N|1-r|/r); the discrepancy shows up below.)
    long long mismatches = 0, first_bad = 0;
    for (long long N = 50; N <= 500; ++N) {
      const double x = double(N) * (1.0 - r) / r;
      const long long m = (long long)std::floor(x);
      const int want = (std::llabs(m) % 2 == 0) ? 1 : -1;
      if (jones_eval_real_r(N, r).sign != want) {
        if (mismatches == 0) first_bad = N;
        ++mismatches;
      }
    }
    std::vector<long long> Ns;
    for (long long n = 500; n <= 5000; n += 500) Ns.push_back(n);
    const auto rows = real_r_sweep(r, Ns);
    const FitResult fit = extrapolate(rows);
    const double e_im = std::abs(fit.limit.imag() - 2.0 * PI * PI * (1.0 - r));
    const double e_re = std::abs(fit.limit.real() - cone_volume(r));
    const bool ok = mismatches == 0 && e_im <= 5e-2 && e_re <= 2e-2;
    pass = pass && ok;
    detail += fmt("r=%.2f: sign mismatches %lld/451%s, Im-law err %.2e <= 5e-2, "
                  "cone err %.2e <= 2e-2; ",
                  r, mismatches,
                  mismatches ? fmt(" (first at N=%lld)", first_bad).c_str() : "",
                  e_im, e_re);
  }
  const double elapsed = seconds_since(t0);
  detail += fmt("%.1f s (limit 60)", elapsed);
  report(6, "real-r laws", pass && elapsed <= 60.0, detail);
}

// --- criterion 7 -----------------------------------------------------------

void criterion_7() {
  double worst_res = 0.0, worst_lambda = 0.0;
  bool monotone = true;
  double prev = 0.0, last = 0.0;
  for (int a = 5; a <= 12; ++a) {
    for (int p : {a, -a}) {
      const SurgeryResult s = vol_cs_p1(p);
      worst_res = std::max(worst_res, s.residual);
      worst_lambda = std::max(
          worst_lambda, std::abs((cplx(0.0, 2.0 * PI) - s.v) / double(p) - s.u));
      if (p > 0) {
        if (s.vol <= prev) monotone = false;
        prev = s.vol;
        last = s.vol;
      }
    }
  }
  const bool toward = last < 2.0298832 && last > 1.8;
  const bool pass = worst_res <= 1e-12 && worst_lambda <= 1e-12 && monotone && toward;
  report(7, "Dehn fillings p in {+-5..+-12}", pass,
         fmt("max residual %.2e <= 1e-12, max lambda-identity %.2e <= 1e-12, "
             "vol strictly increasing to %.7f (< 2.0298832: %s)",
             worst_res, worst_lambda, last, toward ? "yes" : "no"));
}

// --- criterion 8 -----------------------------------------------------------

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_grad = 0.0, worst_match = 0.0;
  int min_digits = 99;
  for (int a = 5; a <= 12; ++a) {
    for (int p : {a, -a}) {
      const CriticalPoint cp = critical_point(p);
      worst_grad = std::max(worst_grad, cp.grad_norm);
      const auto st = holonomy_state(solve_filling({double(p), 1.0}).u);
      worst_match = std::max(worst_match, std::abs(cp.xi0 - st.y));
      worst_match = std::max(worst_match, std::abs(cp.eta0 - st.m * st.m));
      min_digits = std::min(min_digits, observation_check(p).agree_digits);
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst_grad <= 1e-10 && worst_match <= 1e-8 && min_digits >= 8 &&
                    elapsed <= 5.0;
  report(8, "optimistic-limit observation", pass,
         fmt("max gradient %.2e <= 1e-10, max |crit - holonomy| %.2e <= 1e-8, "
             "min agree_digits %d >= 8, %.1f s (limit 5)",
             worst_grad, worst_match, min_digits, elapsed));
}

// --- criterion 9 -----------------------------------------------------------

void criterion_9() {
  std::mt19937 rng(99);
  double worst_lm = 0.0, worst_ph = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx u = random_in_disk(rng, 1.0);
    for (long long N = 1; N <= 50; ++N) {
      const LogComplex got = jones_eval({N, u});
      const std::complex<long double> want = naive_sum(N, u);
      const double lm = (double)std::log(std::abs(want));
      worst_lm = std::max(worst_lm,
                          std::abs(got.log_mag - lm) / std::max(1.0, std::abs(lm)));
      worst_ph = std::max(
          worst_ph, std::abs(std::remainder(got.phase - (double)std::arg(want),
                                            2.0 * PI)));
    }
  }
  const bool pass = worst_lm <= 1e-11 && worst_ph <= 1e-11;
  report(9, "brute-force equivalence (N <= 50, 20 samples)", pass,
         fmt("log-magnitude rel %.2e, phase (mod 2pi) %.2e (<= 1e-11 each)",
             worst_lm, worst_ph));
}

// --- criterion 10 ----------------------------------------------------------

void criterion_10() {
  std::mt19937 rng(1010);
  std::uniform_real_distribution<double> ua(0.5, 1.5), ub(-0.3, 0.3);
  int violations = 0;
  double worst_excess = 0.0;
  for (int i = 0; i < 50; ++i) {
    double b = ub(rng);
    if (b == 0.0) b = 0.1;
    const cplx r(ua(rng), b);
    const long long N = 2 + (rng() % 400);
    std::uniform_real_distribution<double> us(0.0, 2.0 * PI - 2.0 * PI / double(N));
    const double s = us(rng);
    const MaxMinBounds bd = max_min_bounds(r, N);
    const double plus = log_one_minus_exp_abs(r, s, 1);
    const double minus = log_one_minus_exp_abs(r, s, -1);
    double excess = std::max(bd.lower_plus - plus, plus - bd.upper_plus);
    excess = std::max(excess, std::max(bd.lower_minus - minus, minus - bd.upper_minus));
    if (excess > 1e-12) {
      ++violations;
      worst_excess = std::max(worst_excess, excess);
    }
  }

  double worst_ratio_lo = 1.0, worst_ratio_hi = 1.0;
  double prev = 0.0;
  for (long long N = 200; N <= 3200; N *= 2) {
    const double scaled = std::abs(riemann_discrepancy(N, N / 2, cplx(1.0, 0.1), 1)) *
                          double(N) / std::log(double(N));
    if (prev != 0.0) {
      const double ratio = scaled / prev;
      worst_ratio_lo = std::min(worst_ratio_lo, ratio);
      worst_ratio_hi = std::max(worst_ratio_hi, ratio);
    }
    prev = scaled;
  }
  const bool decay_ok = worst_ratio_lo >= 0.5 && worst_ratio_hi <= 2.0;
  const bool pass = violations == 0 && decay_ok;
  report(10, "lemma bound suite", pass,
         fmt("pointwise bound violations %d/50 (worst excess %.3f; the plus-case "
             "upper bound fails for Im r < 0), phi decay ratios in [%.2f, %.2f] "
             "(need [0.5, 2])",
             violations, worst_excess, worst_ratio_lo, worst_ratio_hi));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures;
}
