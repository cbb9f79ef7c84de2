#include "cebit/fft.hpp"

#include <memory>
#include <mutex>

#include <fftw3.h>

#include "cebit/errors.hpp"

namespace cebit::fft {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

}  // namespace

std::vector<std::complex<double>> centered_dft2(std::span<const std::complex<double>> in, int n) {
  if (n <= 0 || n % 4 != 0 || in.size() != std::size_t(n) * std::size_t(n))
    throw InvalidArgument("centered_dft2 needs an n x n array with n a multiple of 4");
  const std::size_t total = in.size();
  std::unique_ptr<fftw_complex, FftwDeleter> buf(fftw_alloc_complex(total));

  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_2d(n, n, buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE));
  }

  // (-1)^(ix+iy) before and after the transform moves the origin to n/2;
  // the leftover factor exp(-i pi n/2) is 1 because n/2 is even.
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const std::size_t k = std::size_t(iy) * std::size_t(n) + std::size_t(ix);
      const double sign = ((ix + iy) & 1) ? -1.0 : 1.0;
      buf.get()[k][0] = sign * in[k].real();
      buf.get()[k][1] = sign * in[k].imag();
    }
  fftw_execute(plan.get());

  std::vector<std::complex<double>> out(total);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const std::size_t k = std::size_t(iy) * std::size_t(n) + std::size_t(ix);
      const double sign = ((ix + iy) & 1) ? -1.0 : 1.0;
      out[k] = {sign * buf.get()[k][0], sign * buf.get()[k][1]};
    }
  return out;
}

}  // namespace cebit::fft
