#pragma once

#include <string>

#include "whlab/symbol.hpp"

namespace whlab {

enum class Properness { Proper, NotProper, Inconclusive };

/// Result of the log-integrability test int ln(1+|k(x)|)/(1+x^2) dx.
/// NotProper is certified analytically only (exponential tail growth or a
/// non-integrable origin singularity); quadrature alone never certifies
/// divergence.
struct PropernessVerdict {
  Properness verdict = Properness::Inconclusive;
  double integral_estimate = 0.0;  // +inf when NotProper
  double error_estimate = 0.0;
  std::string reason;
};

struct PropernessConfig {
  double quad_tol = 1e-11;
  /// second pass at quad_tol*refine_factor used for the error estimate
  double refine_factor = 1e2;
};

PropernessVerdict properness_test(const Symbol& s,
                                  const PropernessConfig& cfg = {});

const char* to_string(Properness v);

}  // namespace whlab
