#include "volconj/asymptotics.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "volconj/cusp_geometry.hpp"
#include "volconj/errors.hpp"
#include "volconj/potential.hpp"
#include "volconj/special_fn.hpp"

namespace volconj {
namespace {

constexpr double PI = 3.14159265358979323846;
const cplx I(0.0, 1.0);

void validate_ladder(const std::vector<long long>& Ns) {
  if (Ns.empty()) raise(errc::invalid_input, "sweep: empty N list");
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 2) raise(errc::invalid_input, "sweep: all N must be >= 2");
    if (i > 0 && Ns[i] <= Ns[i - 1])
      raise(errc::invalid_input, "sweep: N list must be strictly increasing");
  }
}

// Runs fn(i) for i in [0, count) on `threads` workers; any exception is
// rethrown on the calling thread after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// Canonical per-N phases of log J_N differ by incoherent multiples of 2 pi.
// Align them sequentially: predict each phase by a linear fit (in N) of the
// last <= 30 aligned values, then shift by the nearest multiple of 2 pi.
std::vector<double> align_phases(const std::vector<long long>& Ns,
                                 const std::vector<double>& ph) {
  std::vector<double> out(ph);
  for (std::size_t i = 1; i < ph.size(); ++i) {
    double pred;
    if (i >= 3) {
      const std::size_t lo = (i > 30) ? i - 30 : 0;
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double nn = double(i - lo);
      for (std::size_t j = lo; j < i; ++j) {
        sx += double(Ns[j]);
        sy += out[j];
      }
      const double xm = sx / nn, ym = sy / nn;
      for (std::size_t j = lo; j < i; ++j) {
        const double dx = double(Ns[j]) - xm;
        sxx += dx * dx;
        sxy += dx * (out[j] - ym);
      }
      const double slope = (sxx > 0.0) ? sxy / sxx : 0.0;
      pred = ym + slope * (double(Ns[i]) - xm);
    } else {
      pred = out[i - 1] * double(Ns[i]) / double(Ns[i - 1]);
    }
    out[i] = ph[i] + 2.0 * PI * std::round((pred - ph[i]) / (2.0 * PI));
  }
  return out;
}

}  // namespace

std::vector<ConvergenceRow> limit_sweep(cplx u, const std::vector<long long>& N_list,
                                        unsigned threads) {
  validate_ladder(N_list);
  if (std::abs(u) > u_max)
    raise(errc::outside_validity_disk, "limit_sweep: |u| > u_max");

  std::vector<ConvergenceRow> rows(N_list.size());
  parallel_for(N_list.size(), threads, [&](std::size_t i) {
    rows[i].N = N_list[i];
    rows[i].logJ = jones_eval({N_list[i], u});
  });

  std::vector<double> ph(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ph[i] = rows[i].logJ.phase;
  const std::vector<double> aligned = align_phases(N_list, ph);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].logJ.phase = aligned[i];
    rows[i].estimate = (u + 2.0 * PI * I) *
                       cplx(rows[i].logJ.log_mag, rows[i].logJ.phase) / double(rows[i].N);
  }
  return rows;
}

FitResult fit_series(const std::vector<long long>& Ns, const std::vector<cplx>& values) {
  const std::size_t n = Ns.size();
  if (n != values.size() || n < 4)
    raise(errc::invalid_input, "fit_series: need >= 4 matching rows");

  // Design [1, log N / N, 1 / N]; modified Gram-Schmidt QR, complex rhs.
  std::vector<std::array<double, 3>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double N = double(Ns[i]);
    a[i] = {1.0, std::log(N) / N, 1.0 / N};
  }
  double r[3][3] = {};
  std::vector<std::array<double, 3>> qcols(n, {0.0, 0.0, 0.0});
  for (int j = 0; j < 3; ++j) {
    std::vector<double> vcol(n);
    for (std::size_t i = 0; i < n; ++i) vcol[i] = a[i][j];
    double col_norm0 = 0.0;
    for (double x : vcol) col_norm0 += x * x;
    col_norm0 = std::sqrt(col_norm0);
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += qcols[i][k] * vcol[i];
      r[k][j] = dot;
      for (std::size_t i = 0; i < n; ++i) vcol[i] -= dot * qcols[i][k];
    }
    double nrm = 0.0;
    for (double x : vcol) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (!(nrm > 1e-10 * std::max(1.0, col_norm0)))
      raise(errc::fit_error, "fit_series: rank-deficient design matrix");
    r[j][j] = nrm;
    for (std::size_t i = 0; i < n; ++i) qcols[i][j] = vcol[i] / nrm;
  }

  cplx qtb[3] = {};
  for (int j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < n; ++i) qtb[j] += qcols[i][j] * values[i];
  cplx x[3];
  for (int j = 2; j >= 0; --j) {
    cplx s = qtb[j];
    for (int k = j + 1; k < 3; ++k) s -= r[j][k] * x[k];
    x[j] = s / r[j][j];
  }

  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx fit = x[0] + x[1] * a[i][1] + x[2] * a[i][2];
    rss += std::norm(values[i] - fit);
  }
  return {x[0], x[1], x[2], std::sqrt(rss / double(n))};
}

FitResult extrapolate(const std::vector<ConvergenceRow>& rows) {
  if (rows.size() < 4) raise(errc::invalid_input, "extrapolate: need >= 4 rows");
  std::vector<long long> Ns(rows.size());
  std::vector<cplx> est(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Ns[i] = rows[i].N;
    est[i] = rows[i].estimate;
  }
  return fit_series(Ns, est);
}

LogComplex saddle_prediction(const JonesPoint& pt) {
  if (pt.N < 2) raise(errc::invalid_input, "saddle_prediction: N must be >= 2");
  if (std::abs(pt.u) > u_max)
    raise(errc::outside_validity_disk, "saddle_prediction: |u| > u_max");
  const cplx r = pt.r();
  const HolonomyState st = holonomy_state(pt.u);
  const cplx H = h_two(st.y, st.m * st.m).value;
  const double N = double(pt.N);
  const cplx logpred = std::log(N) - std::log(2.0 * PI * I) + 0.5 * std::log(2.0 * PI) -
                       std::log(r) - 0.5 * std::log(N) -
                       0.5 * std::log(st.y - 1.0 / st.y) +
                       N * H / (2.0 * PI * r * I);
  return {logpred.real(), logpred.imag(), false};
}

double cone_volume(double r) {
  if (!std::isfinite(r)) raise(errc::invalid_input, "cone_volume: non-finite r");
  if (!(r > 5.0 / 6.0 && r < 7.0 / 6.0))
    raise(errc::domain_error, "cone_volume: r outside (5/6, 7/6)");
  const double alpha = std::acos(std::cos(2.0 * PI * r) - 0.5);
  return 2.0 * (lobachevsky(PI * r + 0.5 * alpha) - lobachevsky(PI * r - 0.5 * alpha));
}

std::vector<ConvergenceRow> real_r_sweep(double r, const std::vector<long long>& N_list,
                                         unsigned threads) {
  validate_ladder(N_list);
  if (!(r > 5.0 / 6.0 && r < 7.0 / 6.0))
    raise(errc::domain_error, "real_r_sweep: r outside (5/6, 7/6)");

  const double flip_sign = (r < 1.0) ? 1.0 : (r > 1.0 ? -1.0 : 0.0);
  std::vector<ConvergenceRow> rows(N_list.size());
  parallel_for(N_list.size(), threads, [&](std::size_t i) {
    const RealJonesResult jr = jones_eval_real_r(N_list[i], r);
    // Constructed Im branch: pi * sign(1-r) * flips_at_peak is the multiple of
    // pi that follows the real-r limit law (each negative factor contributes
    // +-pi; the law's branch takes them with the sign of 1-r).
    rows[i].N = N_list[i];
    rows[i].logJ = {jr.log_abs, PI * flip_sign * double(jr.flips_at_peak), false};
    rows[i].estimate = 2.0 * PI * r *
                       cplx(rows[i].logJ.log_mag, rows[i].logJ.phase) / double(N_list[i]);
  });
  return rows;
}

}  // namespace volconj
