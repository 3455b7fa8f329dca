#include "whlab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace whlab {

namespace {

std::mutex& plan_mutex() {
  static std::mutex mu;
  return mu;
}

// FFTW plan creation is not thread-safe; executing an existing plan on new
// arrays is.
void run_dft(Vec& data, int sign) {
  const int n = static_cast<int>(data.size());
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
}

Vec transform(const Grid& gin, const Vec& f, int sign) {
  if (gin.half_line) throw std::invalid_argument("fourier: full-line grid required");
  const int n = gin.n;
  if (f.size() != n) throw std::invalid_argument("fourier: size mismatch");
  // e^{-i xi_k x_j} = (-1)^{j} (-1)^{k + n/2} e^{-2 pi i j k / n} on the
  // centered grids; same signs for the inverse kernel.
  Vec buf(n);
  for (int j = 0; j < n; ++j) buf[j] = ((j & 1) ? -1.0 : 1.0) * f[j];
  run_dft(buf, sign);
  const double scale = gin.spacing() / std::sqrt(2.0 * std::acos(-1.0));
  const double base = ((n / 2) & 1) ? -1.0 : 1.0;
  for (int k = 0; k < n; ++k) buf[k] *= scale * base * ((k & 1) ? -1.0 : 1.0);
  return buf;
}

}  // namespace

Vec fourier_forward(const Grid& gin, const Vec& f) {
  return transform(gin, f, FFTW_FORWARD);
}

Vec fourier_inverse(const Grid& gin, const Vec& f) {
  return transform(gin, f, FFTW_BACKWARD);
}

}  // namespace whlab
