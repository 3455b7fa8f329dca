#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace whlab {

/// Thrown when an iterative numerical procedure fails to reach its target
/// accuracy. Carries the offending residuals so callers can report them.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, std::vector<double> residuals = {})
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Non-fatal diagnostics attached to results (near-axis roots, borderline
/// range membership, sigma clusters straddling a rank cutoff, ...).
using Warnings = std::vector<std::string>;

struct RootConfig {
  /// Roots with |Im| <= eps_real are treated as real; |Im| in
  /// (eps_real, 10*eps_real] raises an ill-conditioned warning.
  double eps_real = 1e-9;
  /// Roots closer than this after Newton refinement are merged into one
  /// root with higher multiplicity.
  double cluster_radius = 1e-7;
  /// Relative coefficient threshold for polynomial equality / zero tests.
  double coeff_rel_tol = 1e-12;
  int newton_steps = 4;
};

inline const RootConfig& default_root_config() {
  static const RootConfig cfg{};
  return cfg;
}

/// Grid-dependent tolerance for discretized operator identities,
/// tol(n) = C / sqrt(n). C calibrated on the indicator-symbol suite at
/// n = 1024 (see tests), with a 3x safety factor.
inline double identity_tol(int n) {
  constexpr double kCal = 1.6;
  return kCal / std::sqrt(static_cast<double>(n));
}

}  // namespace whlab
