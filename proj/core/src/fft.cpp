#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "strichartz/errors.hpp"

namespace strichartz::detail {
namespace {

// The FFTW planner is not thread safe; plans are cached and shared, and
// fftw_execute_dft on an existing plan is.
struct PlanCache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::span<const int> dims, int sign) {
    std::lock_guard<std::mutex> lock(mu);
    std::pair<std::vector<int>, int> key{std::vector<int>(dims.begin(), dims.end()), sign};
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    std::size_t n = 1;
    for (int g : dims) n *= static_cast<std::size_t>(g);
    std::vector<fftw_complex> scratch(n);
    fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), scratch.data(), scratch.data(),
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw NumericalGuard("FFTW failed to create a plan");
    plans.emplace(std::move(key), p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void dft(ComplexArray& data, std::span<const int> dims, int sign) {
  std::size_t n = 1;
  for (int g : dims) n *= static_cast<std::size_t>(g);
  require(n == data.size(), "dft size mismatch");
  if (n == 0) return;
  fftw_plan p = cache().get(dims, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, buf, buf);
}

void grid_dft(ComplexArray& data, const TorusGrid& grid, int sign) {
  std::vector<int> dims;
  if (!grid.space_only()) dims.push_back(grid.gt());
  for (int i = 0; i < grid.dim(); ++i) dims.push_back(grid.gx());
  dft(data, dims, sign);
}

}  // namespace strichartz::detail
