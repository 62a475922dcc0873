#include "repnorm/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "repnorm/errors.hpp"

namespace repnorm {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("dft: sign must be +1 or -1");
  const int n = static_cast<int>(in.size());
  std::vector<cplx> out(in.size());
  if (n == 0) return out;
  std::vector<cplx> buf(in);
  fftw_plan plan;
  {
    // Planning is not thread-safe in FFTW; execution is.
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw DomainError("dft: plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace repnorm
