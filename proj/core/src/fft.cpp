#include "holowave/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace holowave::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::mutex plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
  static std::map<std::size_t, PlanPair> cache;
  return cache;
}

PlanPair get_plans(std::size_t n) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plan_cache().find(n);
  if (it != plan_cache().end()) return it->second;
  fftw_complex* buf = fftw_alloc_complex(n);
  PlanPair plans;
  plans.forward = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                   FFTW_FORWARD, FFTW_ESTIMATE);
  plans.inverse = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                   FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_free(buf);
  plan_cache().emplace(n, plans);
  return plans;
}

void execute(const std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out, bool forward) {
  const std::size_t n = in.size();
  out.resize(n);
  PlanPair plans = get_plans(n);
  fftw_complex* buf = fftw_alloc_complex(n);
  std::memcpy(buf, in.data(), n * sizeof(fftw_complex));
  fftw_execute_dft(forward ? plans.forward : plans.inverse, buf, buf);
  std::memcpy(out.data(), buf, n * sizeof(fftw_complex));
  fftw_free(buf);
}

}  // namespace

void dft_forward(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
  execute(in, out, true);
}

void dft_inverse(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
  execute(in, out, false);
}

}  // namespace holowave::detail
