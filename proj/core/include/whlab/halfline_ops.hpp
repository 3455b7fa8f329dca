#pragma once

#include <functional>
#include <optional>

#include "whlab/fft.hpp"
#include "whlab/operator_matrix.hpp"
#include "whlab/symbol.hpp"

namespace whlab {

/// Samples a symbol on a grid; throws NumericalFailure if a pole lands on
/// a grid point (suggesting a grid shift).
Vec sample_symbol(const Symbol& s, const Grid& g);

/// Hilbert transformation on a full-line grid: sign multiplier in the
/// dual domain, sgn(0) := 0 (the zero mode is annihilated).
Vec hilbert(const Grid& g, const Vec& f);

/// Sharp projection onto positive dual-frequency content (the Hardy-space
/// projection; the zero mode is dropped so the projection is exactly
/// idempotent).
Vec hardy_project(const Grid& g, const Vec& f);

/// Energy fraction of f on the negative dual-frequency half-axis
/// (strictly negative bins).
double negative_frequency_fraction(const Grid& g, const Vec& f);

enum class WhRoute { Spectral, Kernel };

/// Convolution kernel t -> k(t); principal-value kernels return their
/// symmetric-limit value at t = 0.
using KernelFn = std::function<cplx(double)>;

/// Closed-form kernels for the built-in symbols: c/(1+x^2) (exponential
/// kernel), indicator unions (sinc-type), plus scaled/sums of those.
std::optional<KernelFn> closed_form_kernel(const Symbol& s);

/// Kernel of the -tanh multiplier: i / (2 sinh(pi t / 2)), principal
/// value 0 on the diagonal.
cplx minus_tanh_kernel(double t);

/// Wiener-Hopf matrix on the half-line grid of g. Spectral route:
/// restriction of the dual-domain multiplier conjugated by the fourier
/// transforms; kernel route: direct quadrature of a closed-form kernel
/// (throws if none is known for s).
OperatorMatrix wh_matrix(const Symbol& s, const LabGrid& g,
                         WhRoute route = WhRoute::Spectral);
OperatorMatrix wh_matrix_from_kernel(const KernelFn& k, const LabGrid& g);

/// Matrix-free application of the spectral-route operator.
Vec wh_apply(const Symbol& s, const LabGrid& g, const Vec& f);

/// Factor pair A = P_+ F M(sqrt(k)) P_E^* and its adjoint; E is the set
/// of dual-grid points where k > 0. Throws if k dips below -1e-12 on the
/// grid.
struct FactorPair {
  OperatorMatrix A;      // L^2(E) -> half-line
  OperatorMatrix Astar;  // half-line -> L^2(E)
  std::vector<int> e_index;  // dual-grid indices forming E
};
FactorPair a_matrix(const Symbol& s, const LabGrid& g);

/// Singular integral operator L_phi on L^2(E) built from the composition
/// (1/2) M(phi) + (1/2) M(sqrt(phi)) H_E M(sqrt(phi)), phi = k|_E.
OperatorMatrix singular_matrix(const Symbol& s, const LabGrid& g);

/// Trace H_E = P_E H P_E^* of the Hilbert transformation on the dual-grid
/// subset E picked by k > 0.
OperatorMatrix hilbert_trace(const Symbol& s, const LabGrid& g);

struct FriedrichsShift {
  double eta = 1.0;   // +-1
  double alpha = 0.0;
  Symbol shifted;     // alpha + eta * k >= 0
};
/// Decomposes a real semibounded symbol; throws if unbounded on both
/// sides.
FriedrichsShift friedrichs_shift(const Symbol& s);

/// || S_b^* W S_b - W ||_F / || W ||_F for the unilateral shift by b
/// (b must be a grid multiple).
double shift_invariance_residual(const Symbol& s, double b, const LabGrid& g);

struct SingularReduction {
  Symbol phi;                 // 2 |b|^2
  Symbol alpha;               // a - |b|^2
  std::vector<cplx> phase_u;  // conj(b)/|b| samples
};
/// Unitary reduction of the general type-Hilbert operator data (a, b)
/// sampled on xs; throws on zeros of b.
SingularReduction general_singular_reduce(const std::vector<double>& xs,
                                          const std::vector<double>& a,
                                          const std::vector<cplx>& b);

/// True if the discretization of s only represents a regularized
/// (frequency-truncated) operator: polynomial or exponential growth.
bool symbol_unbounded(const Symbol& s);

}  // namespace whlab
