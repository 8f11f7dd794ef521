#include "esl/real/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

#include "esl/error.hpp"

namespace esl::real {
namespace {

// FFTW's planner is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Histogram convolution_power(const Histogram& h, unsigned k) {
  if (k == 0) throw DomainError("convolution power needs k >= 1");
  const std::size_t bins = h.bins();
  if (bins == 0 || h.edges.size() != bins + 1) throw DomainError("malformed histogram");
  if (h.log_spaced) throw DomainError("convolution needs a uniform grid");
  const double width = (h.edges.back() - h.edges.front()) / static_cast<double>(bins);
  for (std::size_t i = 0; i < bins; ++i)
    if (std::fabs(h.width(i) - width) > 1e-9 * width)
      throw DomainError("convolution needs a uniform grid");

  const std::size_t support = static_cast<std::size_t>(k) * (bins - 1) + 1;
  std::size_t length = 1;
  while (length < support) length <<= 1;
  if (length > kMaxFftLength)
    throw DomainError("convolution support of " + std::to_string(support) +
                      " bins exceeds the padding limit");

  double in_mass = 0.0;
  for (double m : h.masses) in_mass += m;

  const std::size_t spectrum = length / 2 + 1;
  double* buf = fftw_alloc_real(length);
  fftw_complex* freq = fftw_alloc_complex(spectrum);
  fftw_plan forward, backward;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(length), buf, freq, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(length), freq, buf, FFTW_ESTIMATE);
  }
  std::fill(buf, buf + length, 0.0);
  std::copy(h.masses.begin(), h.masses.end(), buf);
  fftw_execute(forward);
  for (std::size_t j = 0; j < spectrum; ++j) {
    std::complex<double> z(freq[j][0], freq[j][1]);
    z = std::pow(z, static_cast<int>(k));
    freq[j][0] = z.real();
    freq[j][1] = z.imag();
  }
  fftw_execute(backward);

  Histogram out;
  out.log_spaced = false;
  out.samples = 0;
  out.total = h.total;
  out.masses.resize(support);
  const double scale = 1.0 / static_cast<double>(length);
  double out_mass = 0.0;
  for (std::size_t s = 0; s < support; ++s) {
    out.masses[s] = std::max(0.0, buf[s] * scale);
    out_mass += out.masses[s];
  }
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  fftw_free(buf);
  fftw_free(freq);

  const double expected = std::pow(in_mass, static_cast<double>(k));
  if (std::fabs(out_mass - expected) > 1e-9 * std::max(expected, 1e-300))
    throw DomainError("convolution lost mass beyond 1e-9 relative");

  const double lo = static_cast<double>(k) * h.edges.front();
  out.edges.resize(support + 1);
  for (std::size_t s = 0; s <= support; ++s)
    out.edges[s] = lo + (static_cast<double>(s) + 0.5 * static_cast<double>(k) - 0.5) * width;
  return out;
}

double sup_density(const Histogram& h) {
  double best = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) best = std::max(best, h.density(i));
  return best;
}

}  // namespace esl::real
