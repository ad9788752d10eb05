#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace funceq {

enum class errc {
  empty_input,
  unit_entry,
  duplicate_entry,
  non_positive_entry,
  invalid_shifts,
  domain_mismatch,
  interpolation_violated,
  degenerate_step,
  out_of_coverage,
  internal_inconsistency,
  coverage_budget_exceeded,
  non_positive_sample,
  invalid_range,
  invalid_argument,
  not_coprime,
  zero_denominator,
  non_positive_scale,
  boundary_zero,
  non_convergence,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::unit_entry: return "UnitEntry";
    case errc::duplicate_entry: return "DuplicateEntry";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::invalid_shifts: return "InvalidShifts";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::interpolation_violated: return "InterpolationViolated";
    case errc::degenerate_step: return "DegenerateStep";
    case errc::out_of_coverage: return "OutOfCoverage";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::coverage_budget_exceeded: return "CoverageBudgetExceeded";
    case errc::non_positive_sample: return "NonPositiveSample";
    case errc::invalid_range: return "InvalidRange";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::not_coprime: return "NotCoprime";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::non_positive_scale: return "NonPositiveScale";
    case errc::boundary_zero: return "BoundaryZero";
    case errc::non_convergence: return "NonConvergence";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error kind. The message is prefixed
/// with the kind name so that command-line output stays greppable.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace funceq
