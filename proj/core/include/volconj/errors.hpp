#ifndef VOLCONJ_ERRORS_HPP
#define VOLCONJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace volconj {

// Failure taxonomy shared by every module.  Input-shape and domain problems
// map to CLI exit code 1, iteration/fit failures to exit code 2.
enum class errc {
  invalid_input,
  domain_error,
  outside_validity_disk,
  branch_ambiguity,
  non_hyperbolic_or_out_of_range,
  critical_point_not_found,
  fit_error,
  exceptional_slope,
};

inline const char* to_string(errc c) noexcept {
  switch (c) {
    case errc::invalid_input:               return "InvalidInput";
    case errc::domain_error:                return "DomainError";
    case errc::outside_validity_disk:       return "OutsideValidityDisk";
    case errc::branch_ambiguity:            return "BranchAmbiguity";
    case errc::non_hyperbolic_or_out_of_range: return "NonHyperbolicOrOutOfRange";
    case errc::critical_point_not_found:    return "CriticalPointNotFound";
    case errc::fit_error:                   return "FitError";
    case errc::exceptional_slope:           return "ExceptionalSlope";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

  // true for input-shape/domain failures, false for convergence failures
  bool is_input_error() const noexcept {
    switch (code_) {
      case errc::critical_point_not_found:
      case errc::fit_error:
        return false;
      default:
        return true;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace volconj

#endif  // VOLCONJ_ERRORS_HPP
