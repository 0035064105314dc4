// volconj: command-line front end for the figure-eight asymptotics library.
//
// Subcommands map one-to-one onto library operations; every numeric payload
// is emitted at full double precision, ordered by N (or printed as a single
// record), so identical configurations produce byte-identical rows no matter
// how many worker threads are used.  Warnings never enter data rows: they go
// to stderr as "# warning:" lines.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "volconj/volconj.hpp"

namespace {

using volconj::cplx;
using ordered_json = nlohmann::ordered_json;

constexpr double PI = 3.14159265358979323846;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Output assembly.  Records share one schema per command; CSV prints the keys
// as a header row, JSON mirrors the records as an array of objects plus any
// summary fields (CSV carries those as trailing "#" comment rows).

struct Output {
  std::vector<ordered_json> records;
  std::vector<std::string> csv_trailers;
  ordered_json extras = ordered_json::object();
};

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    ordered_json doc;
    doc["records"] = out.records;
    for (const auto& item : out.extras.items()) doc[item.key()] = item.value();
    std::cout << doc.dump(2) << '\n';
    return;
  }
  if (!out.records.empty()) {
    std::string header;
    for (const auto& item : out.records.front().items()) {
      if (!header.empty()) header += ',';
      header += item.key();
    }
    std::cout << header << '\n';
    for (const auto& rec : out.records) {
      std::string line;
      for (const auto& item : rec.items()) {
        if (!line.empty()) line += ',';
        const auto& v = item.value();
        if (v.is_number_float())
          line += fmt17(v.get<double>());
        else if (v.is_number_integer())
          line += std::to_string(v.get<long long>());
        else
          line += v.get<std::string>();
      }
      std::cout << line << '\n';
    }
  }
  for (const auto& t : out.csv_trailers) std::cout << "# " << t << '\n';
}

void warn(const std::string& msg) { std::cerr << "# warning: " << msg << '\n'; }

// ---------------------------------------------------------------------------
// Input plumbing.

// "start:stop:x2" (geometric), "start:stop:+k" (arithmetic), or a single N.
std::vector<long long> parse_n_list(const std::string& text) {
  const auto bad = [&](const char* why) {
    volconj::raise(volconj::errc::invalid_input,
                   std::string("--n '") + text + "': " + why);
  };
  std::vector<long long> out;
  const auto c1 = text.find(':');
  try {
    if (c1 == std::string::npos) {
      const long long n = std::stoll(text);
      if (n < 1) bad("N must be >= 1");
      out.push_back(n);
      return out;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos || c2 + 1 >= text.size())
      bad("expected start:stop:x<f> or start:stop:+<k>");
    const long long start = std::stoll(text.substr(0, c1));
    const long long stop = std::stoll(text.substr(c1 + 1, c2 - c1 - 1));
    const char mode = text[c2 + 1];
    const long long amount = std::stoll(text.substr(c2 + 2));
    if (start < 1 || stop < start) bad("need 1 <= start <= stop");
    if (mode == 'x') {
      if (amount < 2) bad("geometric factor must be >= 2");
      for (long long n = start; n <= stop; n *= amount) out.push_back(n);
    } else if (mode == '+') {
      if (amount < 1) bad("arithmetic step must be >= 1");
      for (long long n = start; n <= stop; n += amount) out.push_back(n);
    } else {
      bad("step must start with 'x' or '+'");
    }
  } catch (const std::invalid_argument&) {
    bad("not a number");
  } catch (const std::out_of_range&) {
    bad("out of range");
  }
  return out;
}

// Best rational approximation with denominator <= max_q, by continued
// fraction convergents.
std::optional<std::pair<long long, long long>> near_rational(double x,
                                                             long long max_q,
                                                             double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  long long p_prev = 1, q_prev = 0;
  long long p = static_cast<long long>(std::floor(x)), q = 1;
  double xi = x;
  for (int i = 0; i < 64; ++i) {
    if (q > max_q) break;
    if (std::abs(x - double(p) / double(q)) < tol) return std::make_pair(p, q);
    const double frac = xi - std::floor(xi);
    if (frac < 1e-15) break;
    xi = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(xi));
    const long long pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  return std::nullopt;
}

void warn_disk_proximity(cplx u) {
  if (std::abs(u) > 0.9 * volconj::u_max)
    warn("u is within 10% of the validity disk boundary (|u| = " +
         fmt17(std::abs(u)) + ", u_max = " + fmt17(volconj::u_max) + ")");
}

void warn_degenerate_r(cplx u) {
  warn_disk_proximity(u);
  const cplx r = 1.0 + u / (2.0 * PI * cplx(0.0, 1.0));
  if (std::abs(r.imag()) > 1e-12) return;
  if (const auto pq = near_rational(r.real(), 100, 1e-9))
    warn("r = " + std::to_string(pq->first) + "/" + std::to_string(pq->second) +
         " is rational with small denominator; exact zero factors are "
         "possible on this ray");
}

void warn_degenerate_real_r(double r) {
  if (const auto pq = near_rational(r, 100, 1e-9))
    warn("r = " + std::to_string(pq->first) + "/" + std::to_string(pq->second) +
         " is rational with small denominator; exact zero factors are "
         "possible on this ray");
}

unsigned default_threads() {
  if (const char* env = std::getenv("VOLCONJ_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end && *end == '\0' && n >= 1 && n <= 1024) return unsigned(n);
    warn(std::string("ignoring VOLCONJ_THREADS='") + env + "'");
  }
  return 1;
}

void put(ordered_json& rec, const std::string& key, cplx z) {
  rec[key + "_re"] = z.real();
  rec[key + "_im"] = z.imag();
}

// ---------------------------------------------------------------------------
// Command bodies.

Output run_geom(cplx u) {
  warn_disk_proximity(u);
  const volconj::HolonomyState st = volconj::holonomy_state(u);
  ordered_json rec;
  put(rec, "u", st.u);
  put(rec, "m", st.m);
  put(rec, "z", st.z);
  put(rec, "w", st.w);
  put(rec, "y", st.y);
  put(rec, "v", st.v);
  return {{rec}, {}, {}};
}

Output run_potential(cplx u) {
  warn_disk_proximity(u);
  const auto H = volconj::h_of_u(u);
  const auto f = volconj::f_of_u(u);
  const auto fr = volconj::f_rogers(u);
  const auto phi = volconj::phi_of_u(u);
  ordered_json rec;
  put(rec, "u", u);
  put(rec, "H", H.value);
  put(rec, "f", f.value);
  put(rec, "f_rogers", fr.value);
  put(rec, "phi", phi.value);
  Output out{{rec}, {}, {}};
  out.csv_trailers.push_back(std::string("branch: ") + H.branch_note);
  out.extras["branch"] = H.branch_note;
  return out;
}

Output run_jones(cplx u, const std::vector<long long>& Ns) {
  warn_degenerate_r(u);
  Output out;
  for (const long long N : Ns) {
    const volconj::LogComplex lj = volconj::jones_eval({N, u});
    ordered_json rec;
    rec["N"] = N;
    rec["logJ_re"] = lj.log_mag;
    rec["logJ_im"] = lj.phase;
    out.records.push_back(std::move(rec));
  }
  return out;
}

Output run_jones_real(double r, const std::vector<long long>& Ns) {
  warn_degenerate_real_r(r);
  Output out;
  bool flagged = false;
  for (const long long N : Ns) {
    const volconj::RealJonesResult jr = volconj::jones_eval_real_r(N, r);
    flagged = flagged || jr.validity_warning;
    ordered_json rec;
    rec["N"] = N;
    rec["r"] = jr.r;
    rec["log_abs"] = jr.log_abs;
    rec["sign"] = static_cast<long long>(jr.sign);
    rec["flips_at_peak"] = jr.flips_at_peak;
    out.records.push_back(std::move(rec));
  }
  if (flagged) warn("r outside (5/6, 7/6): values computed but outside the validity window");
  return out;
}

Output run_jones_phi(cplx u, const std::vector<long long>& Ns, long long phi_n,
                     int sigma, double tol) {
  const cplx r = 1.0 + u / (2.0 * PI * cplx(0.0, 1.0));
  Output out;
  for (const long long N : Ns) {
    const cplx phi = volconj::riemann_discrepancy(N, phi_n, r, sigma, tol);
    ordered_json rec;
    rec["N"] = N;
    rec["n"] = phi_n;
    rec["phi_re"] = phi.real();
    rec["phi_im"] = phi.imag();
    out.records.push_back(std::move(rec));
  }
  return out;
}

Output run_limit(cplx u, const std::vector<long long>& Ns, unsigned threads) {
  warn_degenerate_r(u);
  const auto rows = volconj::limit_sweep(u, Ns, threads);
  Output out;
  for (const auto& row : rows) {
    ordered_json rec;
    rec["N"] = row.N;
    rec["logJ_re"] = row.logJ.log_mag;
    rec["logJ_im"] = row.logJ.phase;
    rec["est_re"] = row.estimate.real();
    rec["est_im"] = row.estimate.imag();
    out.records.push_back(std::move(rec));
  }
  if (rows.size() >= 4) {
    const volconj::FitResult fit = volconj::extrapolate(rows);
    out.csv_trailers.push_back("extrapolated: " + fmt17(fit.limit.real()) + "," +
                               fmt17(fit.limit.imag()));
    out.extras["extrapolated"] = {{"re", fit.limit.real()}, {"im", fit.limit.imag()}};
    out.extras["fit_residual"] = fit.residual;
  } else {
    warn("fewer than 4 rows; extrapolation skipped");
  }
  return out;
}

Output run_cone(double r, const std::vector<long long>& Ns, unsigned threads) {
  const double cv = volconj::cone_volume(r);
  Output out;
  if (Ns.empty()) {
    ordered_json rec;
    rec["r"] = r;
    rec["cone_volume"] = cv;
    out.records.push_back(std::move(rec));
    return out;
  }
  warn_degenerate_real_r(r);
  const auto rows = volconj::real_r_sweep(r, Ns, threads);
  for (const auto& row : rows) {
    ordered_json rec;
    rec["N"] = row.N;
    rec["logJ_re"] = row.logJ.log_mag;
    rec["logJ_im"] = row.logJ.phase;
    rec["est_re"] = row.estimate.real();
    rec["est_im"] = row.estimate.imag();
    out.records.push_back(std::move(rec));
  }
  if (rows.size() >= 4) {
    const volconj::FitResult fit = volconj::extrapolate(rows);
    out.csv_trailers.push_back("extrapolated: " + fmt17(fit.limit.real()) + "," +
                               fmt17(fit.limit.imag()));
    out.extras["extrapolated"] = {{"re", fit.limit.real()}, {"im", fit.limit.imag()}};
  } else {
    warn("fewer than 4 rows; extrapolation skipped");
  }
  out.csv_trailers.push_back("cone_volume: " + fmt17(cv));
  out.extras["cone_volume"] = cv;
  return out;
}

Output run_fill(double p, double q) {
  const volconj::FillingResult fr = volconj::solve_filling({p, q});
  ordered_json rec;
  rec["p"] = p;
  rec["q"] = q;
  put(rec, "u", fr.u);
  put(rec, "v", fr.v);
  rec["residual"] = fr.residual;
  rec["iterations"] = static_cast<long long>(fr.iterations);
  return {{rec}, {}, {}};
}

Output run_volcs(int p) {
  const volconj::SurgeryResult sr = volconj::vol_cs_p1(p);
  ordered_json rec;
  rec["p"] = static_cast<long long>(sr.p);
  put(rec, "u", sr.u);
  put(rec, "v", sr.v);
  put(rec, "lambda", sr.lambda);
  rec["vol"] = sr.vol;
  rec["cs"] = sr.cs;
  rec["residual"] = sr.residual;
  return {{rec}, {}, {}};
}

Output run_optimistic(int p) {
  const volconj::CriticalPoint cp = volconj::critical_point(p);
  const volconj::ObservationResult ob = volconj::observation_check(p);
  ordered_json rec;
  rec["p"] = static_cast<long long>(p);
  put(rec, "xi0", cp.xi0);
  put(rec, "eta0", cp.eta0);
  rec["grad_norm"] = cp.grad_norm;
  put(rec, "lhs", ob.lhs);
  put(rec, "rhs", ob.rhs);
  rec["agree_digits"] = static_cast<long long>(ob.agree_digits);
  return {{rec}, {}, {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figure-eight knot asymptotics: Jones limits, volumes, Chern-Simons"};
  app.require_subcommand(1);

  double u_re = 0.0, u_im = 0.0, r = 1.0, tol = 1e-10;
  double fill_p = 0.0, fill_q = 1.0;
  int p = 5, sigma = 1;
  long long phi_n = -1;
  std::string n_text, format = "csv";
  unsigned threads = default_threads();

  const auto add_u = [&](CLI::App* cmd) {
    cmd->add_option("--u-re", u_re, "Re u");
    cmd->add_option("--u-im", u_im, "Im u");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads (default $VOLCONJ_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
  };

  CLI::App* geom = app.add_subcommand("geom", "holonomy state (m, z, w, y, v) at u");
  add_u(geom);
  add_format(geom);

  CLI::App* pot = app.add_subcommand("potential", "H, f, f_rogers, Phi at u");
  add_u(pot);
  add_format(pot);

  CLI::App* jones = app.add_subcommand("jones", "J_N at t = exp((u + 2 pi i)/N)");
  add_u(jones);
  add_format(jones);
  jones->add_option("--n", n_text, "N or start:stop:x<f>|+<k>")->required();
  CLI::Option* jones_r =
      jones->add_option("--r", r, "evaluate on the real-r ray instead of at u");
  jones->add_option("--phi-n", phi_n, "emit Riemann discrepancy phi_{N,sigma}(n)");
  jones->add_option("--sigma", sigma, "discrepancy sign (+1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  jones->add_option("--tol", tol, "discrepancy quadrature tolerance")
      ->check(CLI::Range(1e-300, 1e-2));

  CLI::App* limit = app.add_subcommand("limit", "sweep (u + 2 pi i) log J_N / N and extrapolate");
  add_u(limit);
  add_format(limit);
  add_threads(limit);
  limit->add_option("--n", n_text, "N ladder, start:stop:x<f>|+<k>")->required();

  CLI::App* cone = app.add_subcommand("cone", "cone-manifold volume at real r; optional J_N sweep");
  add_format(cone);
  add_threads(cone);
  cone->add_option("--r", r, "real r in (5/6, 7/6)")->required();
  cone->add_option("--n", n_text, "optional N ladder for the real-r sweep");

  CLI::App* fill = app.add_subcommand("fill", "solve p u + q v = 2 pi i");
  add_format(fill);
  fill->add_option("--p", fill_p, "slope p")->required();
  fill->add_option("--q", fill_q, "slope q")->required();

  CLI::App* volcs = app.add_subcommand("volcs", "volume and Chern-Simons of the (p,1) filling");
  add_format(volcs);
  volcs->add_option("--p", p, "integer slope, |p| >= 5")->required();

  CLI::App* opt = app.add_subcommand("optimistic", "optimistic-limit critical point and observation check");
  add_format(opt);
  opt->add_option("--p", p, "integer slope, |p| >= 5")->required();

  CLI::App* self = app.add_subcommand("selftest", "run every library invariant suite");
  add_threads(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const cplx u(u_re, u_im);
    if (self->parsed()) return volconj::run_selftest(std::cout, threads) ? 0 : 3;

    Output out;
    if (geom->parsed()) out = run_geom(u);
    if (pot->parsed()) out = run_potential(u);
    if (jones->parsed()) {
      const auto Ns = parse_n_list(n_text);
      if (phi_n >= 0)
        out = run_jones_phi(u, Ns, phi_n, sigma, tol);
      else if (jones_r->count() > 0)
        out = run_jones_real(r, Ns);
      else
        out = run_jones(u, Ns);
    }
    if (limit->parsed()) out = run_limit(u, parse_n_list(n_text), threads);
    if (cone->parsed())
      out = run_cone(r, n_text.empty() ? std::vector<long long>{} : parse_n_list(n_text),
                     threads);
    if (fill->parsed()) out = run_fill(fill_p, fill_q);
    if (volcs->parsed()) out = run_volcs(p);
    if (opt->parsed()) out = run_optimistic(p);
    emit(out, format);
  } catch (const volconj::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_input_error() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
