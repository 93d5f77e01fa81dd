#pragma once

#include <complex>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <fftw3.h>

namespace galqm::fft {

namespace detail {

struct Plan {
  fftw_plan plan = nullptr;
  fftw_complex* buffer = nullptr;
  std::size_t size = 0;
};

// One cached plan per (nx, ny, sign); ny == 0 marks a 1-D transform.
// Data is copied through the plan's own aligned buffer so callers may pass
// any contiguous array; everything is serialized because FFTW's planner is
// not thread-safe. Plans live for the whole process.
inline void execute(std::complex<double>* data, std::size_t nx, std::size_t ny, int sign) {
  static std::map<std::tuple<std::size_t, std::size_t, int>, Plan> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto it = cache.find({nx, ny, sign});
  if (it == cache.end()) {
    Plan p;
    p.size = nx * (ny == 0 ? 1 : ny);
    p.buffer = fftw_alloc_complex(p.size);
    if (p.buffer == nullptr) throw std::bad_alloc();
    p.plan = (ny == 0) ? fftw_plan_dft_1d(static_cast<int>(nx), p.buffer, p.buffer, sign,
                                          FFTW_ESTIMATE)
                       : fftw_plan_dft_2d(static_cast<int>(nx), static_cast<int>(ny),
                                          p.buffer, p.buffer, sign, FFTW_ESTIMATE);
    if (p.plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    it = cache.emplace(std::make_tuple(nx, ny, sign), p).first;
  }
  const Plan& p = it->second;
  std::memcpy(p.buffer, data, p.size * sizeof(fftw_complex));
  fftw_execute(p.plan);
  std::memcpy(data, p.buffer, p.size * sizeof(fftw_complex));
}

}  // namespace detail

/// Unnormalized forward DFT (FFTW sign convention, exp(-i 2 pi j k / n)).
inline void forward(std::complex<double>* data, std::size_t n) {
  detail::execute(data, n, 0, FFTW_FORWARD);
}

/// Inverse DFT scaled by 1/n, so inverse(forward(x)) == x up to rounding.
inline void inverse(std::complex<double>* data, std::size_t n) {
  detail::execute(data, n, 0, FFTW_BACKWARD);
  const double s = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) data[i] *= s;
}

/// Row-major 2-D transforms (index = ix * ny + iy).
inline void forward_2d(std::complex<double>* data, std::size_t nx, std::size_t ny) {
  detail::execute(data, nx, ny, FFTW_FORWARD);
}

inline void inverse_2d(std::complex<double>* data, std::size_t nx, std::size_t ny) {
  detail::execute(data, nx, ny, FFTW_BACKWARD);
  const double s = 1.0 / static_cast<double>(nx * ny);
  for (std::size_t i = 0; i < nx * ny; ++i) data[i] *= s;
}

}  // namespace galqm::fft
