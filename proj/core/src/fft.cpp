#include "sweyl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace sweyl::fft {

namespace {

// FFTW's planner is not thread-safe; execution via the new-array interface is.
// Plans are created once per (n, sign) with FFTW_UNALIGNED so they can run on
// arbitrary caller buffers.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<fftw_complex> dummy_in(n), dummy_out(n);
    fftw_plan plan = fftw_plan_dft_1d(n, dummy_in.data(), dummy_out.data(),
                                      sign == kForward ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void dft(std::span<const Complex> in, std::span<Complex> out, int sign) {
  const int n = static_cast<int>(in.size());
  if (out.size() != in.size()) throw std::invalid_argument("fft::dft: size mismatch");
  fftw_plan plan = cache().get(n, sign);
  // FFTW does not write to the input for out-of-place c2c transforms.
  fftw_execute_dft(plan, as_fftw(const_cast<Complex*>(in.data())), as_fftw(out.data()));
}

void dft_inplace(std::span<Complex> data, int sign) {
  std::vector<Complex> tmp(data.begin(), data.end());
  dft(tmp, data, sign);
}

void centered_dft(std::span<const Complex> in, std::span<Complex> out, int sign) {
  const int n = static_cast<int>(in.size());
  if (n % 2 != 0) throw std::invalid_argument("centered_dft: n must be even");
  // exp(s*2pi*i(m-n/2)(k-n/2)/n) = exp(s*2pi*i*mk/n) * (-1)^m * (-1)^k * (-1)^(n/2)
  std::vector<Complex> tmp(n);
  for (int m = 0; m < n; ++m) tmp[m] = (m % 2 == 0) ? in[m] : -in[m];
  dft(tmp, out, sign);
  const double corner = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  for (int k = 0; k < n; ++k) {
    double sk = (k % 2 == 0) ? 1.0 : -1.0;
    out[k] *= sk * corner;
  }
}

std::vector<Complex> centered_dft(std::span<const Complex> in, int sign) {
  std::vector<Complex> out(in.size());
  centered_dft(in, out, sign);
  return out;
}

}  // namespace sweyl::fft
