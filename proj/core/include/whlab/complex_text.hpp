#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace whlab {

/// Parses a complex literal of the form `a`, `bi`, `a+bi`, `a-bi`, `i`,
/// `-i`, with both parts accepting the usual float syntax including
/// exponents (`1.5e-3-2i`). Throws std::invalid_argument on malformed
/// input.
std::complex<double> parse_complex(std::string_view text);

/// Renders `a+bi` form with shortest round-trip formatting; pure real
/// values print without the imaginary part.
std::string format_complex(std::complex<double> z);

}  // namespace whlab
