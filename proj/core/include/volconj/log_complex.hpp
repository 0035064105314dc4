#ifndef VOLCONJ_LOG_COMPLEX_HPP
#define VOLCONJ_LOG_COMPLEX_HPP

#include <cmath>
#include <complex>

#include "volconj/errors.hpp"

namespace volconj {

using cplx = std::complex<double>;

// A complex number stored as (log-magnitude, phase).  Products add the fields,
// so the phase of a long product is the *continuous* sum of factor arguments
// (never reduced mod 2pi); sums shift by the larger exponent and therefore
// never overflow.  J_N grows like exp(N*Vol/2pi) and leaves double range near
// N ~ 2200, which is the whole reason this type exists.
struct LogComplex {
  double log_mag = 0.0;
  double phase = 0.0;
  bool is_zero = false;

  static LogComplex zero() { return {0.0, 0.0, true}; }

  static LogComplex from(cplx value) {
    if (std::isnan(value.real()) || std::isnan(value.imag()))
      raise(errc::invalid_input, "LogComplex::from: NaN input");
    const double a = std::abs(value);
    if (a == 0.0)
      raise(errc::invalid_input,
            "LogComplex::from: zero has no logarithm (use LogComplex::zero)");
    return {std::log(a), std::arg(value), false};
  }

  cplx value() const {
    if (is_zero) return {0.0, 0.0};
    const double m = std::exp(log_mag);  // may overflow to inf by design
    return {m * std::cos(phase), m * std::sin(phase)};
  }
};

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero || b.is_zero) return LogComplex::zero();
  return {a.log_mag + b.log_mag, a.phase + b.phase, false};
}

// Sum via max-exponent shifting: the dominant operand keeps its (continuous)
// phase frame, the other contributes exp(d)*e^{i*dphi} with d <= 0, so the
// intermediate complex value is always of modulus <= 2.
inline LogComplex operator+(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero) return b;
  if (b.is_zero) return a;
  const LogComplex& big = (b.log_mag > a.log_mag) ? b : a;
  const LogComplex& small = (b.log_mag > a.log_mag) ? a : b;
  const double d = small.log_mag - big.log_mag;
  const double dphi = small.phase - big.phase;
  const cplx rel = 1.0 + std::exp(cplx(d, 0.0)) * cplx(std::cos(dphi), std::sin(dphi));
  const double ar = std::abs(rel);
  if (ar == 0.0) return LogComplex::zero();
  return {big.log_mag + std::log(ar), big.phase + std::arg(rel), false};
}

}  // namespace volconj

#endif  // VOLCONJ_LOG_COMPLEX_HPP
