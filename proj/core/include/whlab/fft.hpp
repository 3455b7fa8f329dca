#pragma once

#include <Eigen/Dense>

#include "whlab/grid.hpp"
#include "whlab/polynomial.hpp"

namespace whlab {

using Vec = Eigen::VectorXcd;

/// Continuum-normalized transform of samples on the full-line grid `gin`:
/// out_k = (dx / sqrt(2 pi)) sum_j f_j e^{-i xi_k x_j}, with xi on
/// gin.dual(). Exactly unitary between the dx- and dxi-weighted inner
/// products; fourier_inverse(gin.dual(), fourier_forward(gin, f)) == f to
/// machine precision.
Vec fourier_forward(const Grid& gin, const Vec& f);

/// Same with kernel e^{+i xi x}.
Vec fourier_inverse(const Grid& gin, const Vec& f);

}  // namespace whlab
